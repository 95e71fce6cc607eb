#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pathdet/boundary.hpp"
#include "pathdet/exact.hpp"

namespace pathdet {

/// Dense square matrix of exact integers in normalized upper Hessenberg
/// form: zero below the first subdiagonal, every subdiagonal entry 1.
/// Built from a BoundaryPair (entry (i,j), 0-based, equals
/// C(upper[i] - lower[j] + 1, j - i + 1)) or from raw entries for matrices
/// outside that family. Immutable after construction.
class BinomialHessenberg {
 public:
  BinomialHessenberg() = default;  // 0x0

  /// Wraps a row-major entry grid; row_major.size() must equal dim*dim.
  static BinomialHessenberg from_entries(std::size_t dim, std::vector<Integer> row_major);

  std::size_t dim() const noexcept { return dim_; }
  const Integer& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  /// The boundary this matrix was built from, when it came from one.
  const std::optional<BoundaryPair>& source() const noexcept { return source_; }

 private:
  friend BinomialHessenberg build_path_matrix(const BoundaryPair&);

  std::size_t dim_ = 0;
  std::vector<Integer> entries_;  // row-major
  std::optional<BoundaryPair> source_;
};

/// The matrix whose determinant counts the paths admitted by `bounds`.
/// Any valid BoundaryPair yields a well-formed normalized Hessenberg matrix.
BinomialHessenberg build_path_matrix(const BoundaryPair& bounds);

/// True iff entries vanish below the first subdiagonal and the subdiagonal
/// is identically 1. Vacuously true for the 0x0 matrix.
bool is_normalized_hessenberg(const BinomialHessenberg& m);

}  // namespace pathdet

#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pathdet/exact.hpp"
#include "pathdet/hessenberg.hpp"

namespace pathdet {

enum class Engine { recurrence, elimination, fraction_free };

/// "recurrence", "elimination", "fraction-free".
std::string_view engine_name(Engine engine) noexcept;
std::optional<Engine> engine_from_name(std::string_view name) noexcept;

/// Forward elimination hit a vanishing pivot before the last row, where the
/// reduction is undefined. With a unit subdiagonal a zero pivot does not
/// imply det = 0, so this is an error, not an answer; callers fall back to
/// det_recurrence.
class ZeroPivotError : public std::runtime_error {
 public:
  explicit ZeroPivotError(std::size_t row);
  /// 0-based row index of the vanishing pivot.
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

struct DetReport {
  Integer value;
  Engine engine = Engine::recurrence;
  /// Diagonal left by forward elimination, in lowest terms; its product
  /// equals value exactly. Present for the elimination engine only.
  std::optional<std::vector<Rational>> diagonal;
  /// Informational wall-clock cost; never part of a correctness contract.
  std::chrono::nanoseconds elapsed{0};
  /// Set when det_all substituted the recurrence value after a zero pivot.
  std::optional<std::size_t> fallback_pivot_row;
};

/// Determinant by the leading-minor recurrence
///   d_0 = 1,  d_t = sum_{k=1..t} (-1)^(t-k) m(k,t) d_(k-1),  det = d_n,
/// valid because the unit subdiagonal collapses the cofactor products.
/// Division-free, integer-only, O(n^2) scalar operations. Rejects matrices
/// that are not normalized upper Hessenberg.
DetReport det_recurrence(const BinomialHessenberg& m);

/// Determinant by forward row elimination over exact rationals: for each
/// row i, the next row gets row i scaled by -1/pivot_i added, clearing the
/// subdiagonal 1; the matrix becomes upper triangular and det is the
/// product of the recorded diagonal. Throws ZeroPivotError if a pivot
/// vanishes before the last row.
DetReport det_elimination(const BinomialHessenberg& m);

/// Determinant by one-step fraction-free elimination with row pivoting:
/// every intermediate stays integral and every division is checked exact.
/// Works on any square integer matrix; the structure-agnostic referee for
/// the other two engines.
DetReport det_fraction_free(const BinomialHessenberg& m);

struct DetAgreement {
  std::vector<DetReport> reports;  // recurrence, elimination, fraction-free
  bool agree = false;
};

/// Runs all three engines on one matrix. If elimination throws
/// ZeroPivotError its slot carries the recurrence value with
/// fallback_pivot_row set. agree is true iff every value is equal.
DetAgreement det_all(const BinomialHessenberg& m);

}  // namespace pathdet

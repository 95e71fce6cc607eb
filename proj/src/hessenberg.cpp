#include "pathdet/hessenberg.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace pathdet {

BinomialHessenberg BinomialHessenberg::from_entries(std::size_t dim,
                                                    std::vector<Integer> row_major) {
  if (row_major.size() != dim * dim)
    throw std::invalid_argument("from_entries: expected " + std::to_string(dim * dim) +
                                " entries, got " + std::to_string(row_major.size()));
  BinomialHessenberg m;
  m.dim_ = dim;
  m.entries_ = std::move(row_major);
  return m;
}

BinomialHessenberg build_path_matrix(const BoundaryPair& bounds) {
  const std::size_t n = bounds.size();
  const auto& upper = bounds.upper();
  const auto& lower = bounds.lower();

  BinomialHessenberg m;
  m.dim_ = n;
  m.entries_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t top = upper[i] - lower[j] + 1;
      const std::int64_t pick = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i) + 1;
      m.entries_.push_back(binomial(top, pick));
    }
  }
  m.source_ = bounds;
  return m;
}

bool is_normalized_hessenberg(const BinomialHessenberg& m) {
  const std::size_t n = m.dim();
  for (std::size_t i = 1; i < n; ++i) {
    if (m(i, i - 1) != 1) return false;
    for (std::size_t j = 0; j + 1 < i; ++j) {
      if (m(i, j) != 0) return false;
    }
  }
  return true;
}

}  // namespace pathdet

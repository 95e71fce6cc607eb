#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pathdet/exact.hpp"

namespace pathdet {

/// C(2n, n) / (n + 1); the division is exact.
Integer catalan(std::uint64_t n);

/// C((slope+1)n, n) / (slope*n + 1) for slope >= 1; the division is exact
/// and checked. fuss_catalan(1, n) == catalan(n).
Integer fuss_catalan(std::int64_t slope, std::uint64_t n);

/// The rational term C(j(run+rise), j*run) / (j(run+rise)) entering the
/// partition sum below; j, run, rise >= 1.
Rational bizley_phi(std::uint64_t index, std::int64_t run, std::int64_t rise);

/// An integer partition encoded by part multiplicities:
/// multiplicity(p) = number of parts equal to p, weight = sum p*multiplicity(p).
class PartitionMultiset {
 public:
  PartitionMultiset() = default;
  explicit PartitionMultiset(std::vector<std::uint64_t> multiplicities)
      : multiplicities_(std::move(multiplicities)) {}

  /// Multiplicity of part p (p >= 1); 0 beyond the stored range.
  std::uint64_t multiplicity(std::uint64_t part) const {
    return (part >= 1 && part <= multiplicities_.size()) ? multiplicities_[part - 1] : 0;
  }
  const std::vector<std::uint64_t>& multiplicities() const noexcept { return multiplicities_; }
  std::uint64_t weight() const;

  friend bool operator==(const PartitionMultiset&, const PartitionMultiset&) = default;

 private:
  std::vector<std::uint64_t> multiplicities_;  // index i holds the count of part i+1
};

/// Every multiplicity vector of weight n, one per integer partition of n,
/// produced by descending largest-part recursion. Size equals the partition
/// number p(n); n = 0 yields the single empty partition.
std::vector<PartitionMultiset> enumerate_partitions(std::uint64_t n);

/// The partition sum produced a non-integral total. The true path count is
/// always integral, so this signals an implementation bug, never bad input.
class NonIntegerResultError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Count of monotone paths to (run*n, rise*n) weakly below y = (rise/run)x,
/// evaluated as the sum over partitions of n of prod_p phi_p^c_p / c_p!.
/// Accumulates in exact rationals and checks integrality at the end.
/// run and rise must be coprime positive integers.
Integer bizley_count(std::int64_t run, std::int64_t rise, std::uint64_t n);

}  // namespace pathdet

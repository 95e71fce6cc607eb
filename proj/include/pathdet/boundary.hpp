#pragma once

#include <cstdint>
#include <vector>

namespace pathdet {

/// A pair of nondecreasing integer height sequences (upper, lower) of equal
/// length with upper[i] >= lower[i] at every index. The i-th entry bounds
/// the height of the i-th horizontal step of a monotone lattice path.
/// Invariants are checked on construction; instances are immutable.
class BoundaryPair {
 public:
  BoundaryPair() = default;  // empty boundary
  BoundaryPair(std::vector<std::int64_t> upper, std::vector<std::int64_t> lower);

  std::size_t size() const noexcept { return upper_.size(); }
  bool empty() const noexcept { return upper_.empty(); }
  const std::vector<std::int64_t>& upper() const noexcept { return upper_; }
  const std::vector<std::int64_t>& lower() const noexcept { return lower_; }

  friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;

 private:
  std::vector<std::int64_t> upper_;
  std::vector<std::int64_t> lower_;
};

/// Boundary for paths weakly below y = slope*x: upper heights
/// 0, slope, 2*slope, ..., slope*(length-1); lower heights all zero.
/// slope must be >= 1; length 0 yields the empty boundary.
BoundaryPair fuss_boundary(std::int64_t slope, std::size_t length);

/// Boundary for paths weakly below the line y = (rise/run)*x with run and
/// rise coprime positive integers: run*repeats upper heights
///   upper[i-1] = rise*floor((i-1)/run) + floor(rise*s/run),
///   s = i - run*floor((i-1)/run) - 1,
/// lower heights all zero.
BoundaryPair rational_boundary(std::int64_t run, std::int64_t rise, std::size_t repeats);

/// Validates and wraps arbitrary height sequences.
BoundaryPair custom_boundary(std::vector<std::int64_t> upper, std::vector<std::int64_t> lower);

}  // namespace pathdet

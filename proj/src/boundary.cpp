#include "pathdet/boundary.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace pathdet {

namespace {

// Floor division toward minus infinity. The family constructors only feed
// nonnegative operands, but the contract is mathematical floor.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

BoundaryPair::BoundaryPair(std::vector<std::int64_t> upper, std::vector<std::int64_t> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  if (upper_.size() != lower_.size())
    throw std::invalid_argument("boundary: upper and lower lengths differ (" +
                                std::to_string(upper_.size()) + " vs " +
                                std::to_string(lower_.size()) + ")");
  for (std::size_t i = 0; i + 1 < upper_.size(); ++i) {
    if (upper_[i] > upper_[i + 1])
      throw std::invalid_argument("boundary: upper heights not nondecreasing at index " +
                                  std::to_string(i + 1));
    if (lower_[i] > lower_[i + 1])
      throw std::invalid_argument("boundary: lower heights not nondecreasing at index " +
                                  std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < upper_.size(); ++i) {
    if (upper_[i] < lower_[i])
      throw std::invalid_argument("boundary: upper < lower at index " + std::to_string(i));
  }
}

BoundaryPair fuss_boundary(std::int64_t slope, std::size_t length) {
  if (slope < 1)
    throw std::invalid_argument("fuss_boundary: slope must be >= 1, got " +
                                std::to_string(slope));
  std::vector<std::int64_t> upper(length);
  for (std::size_t i = 0; i < length; ++i) upper[i] = slope * static_cast<std::int64_t>(i);
  return BoundaryPair(std::move(upper), std::vector<std::int64_t>(length, 0));
}

BoundaryPair rational_boundary(std::int64_t run, std::int64_t rise, std::size_t repeats) {
  if (run < 1 || rise < 1)
    throw std::invalid_argument("rational_boundary: run and rise must be >= 1");
  if (std::gcd(run, rise) != 1)
    throw std::invalid_argument("rational_boundary: run and rise must be coprime, got " +
                                std::to_string(run) + " and " + std::to_string(rise));
  const std::size_t length = static_cast<std::size_t>(run) * repeats;
  std::vector<std::int64_t> upper(length);
  for (std::size_t idx = 1; idx <= length; ++idx) {
    const auto i = static_cast<std::int64_t>(idx);
    const std::int64_t period = floor_div(i - 1, run);
    const std::int64_t within = i - run * period - 1;
    upper[idx - 1] = rise * period + floor_div(rise * within, run);
  }
  return BoundaryPair(std::move(upper), std::vector<std::int64_t>(length, 0));
}

BoundaryPair custom_boundary(std::vector<std::int64_t> upper, std::vector<std::int64_t> lower) {
  return BoundaryPair(std::move(upper), std::move(lower));
}

}  // namespace pathdet

#pragma once

#include <cstdint>
#include <string>

#include "pathdet/boundary.hpp"
#include "pathdet/exact.hpp"

namespace pathdet {

enum class PathModel { boundary_steps, below_line };

/// A brute-force path count with the model and inputs that produced it.
struct PathCount {
  Integer value;
  PathModel model = PathModel::boundary_steps;
  std::string parameters;  // echo of the inputs
};

/// Counts monotone E/N paths from (0, lower[0]) to (n, upper[n-1]) whose
/// i-th east step lies at a height within [lower[i], upper[i]], finishing
/// with north steps only after the last east step. Dynamic program over
/// (step index, height) with prefix sums, exact integers throughout;
/// deliberately shares nothing with the determinant machinery. Rejects the
/// empty boundary (no endpoint to count to).
PathCount count_boundary_paths(const BoundaryPair& bounds);

/// Counts monotone E/N paths from (0,0) to (run*n, rise*n) that may touch
/// but never rise above y = (rise/run)x. The constraint is the integer
/// inequality run*y <= rise*x at every visited point. n = 0 counts the
/// empty path.
PathCount count_below_line(std::int64_t run, std::int64_t rise, std::uint64_t n);

}  // namespace pathdet

#include "pathdet/path_count.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace pathdet {

namespace {

std::string echo_boundary(const BoundaryPair& bounds) {
  std::ostringstream out;
  out << "n=" << bounds.size() << " upper=[";
  for (std::size_t i = 0; i < bounds.size(); ++i)
    out << (i ? "," : "") << bounds.upper()[i];
  out << "] lower=[";
  for (std::size_t i = 0; i < bounds.size(); ++i)
    out << (i ? "," : "") << bounds.lower()[i];
  out << "]";
  return out.str();
}

}  // namespace

PathCount count_boundary_paths(const BoundaryPair& bounds) {
  if (bounds.empty())
    throw std::invalid_argument("count_boundary_paths: empty boundary has no path endpoint");

  const auto& upper = bounds.upper();
  const auto& lower = bounds.lower();
  const std::size_t n = bounds.size();

  // A monotone path is exactly a nondecreasing sequence of east-step
  // heights h_i with lower[i] <= h_i <= upper[i]; count those. Both
  // sequences are nondecreasing, so lower.front() and upper.back() span
  // every admissible height.
  const std::int64_t base = lower.front();
  const std::size_t width = static_cast<std::size_t>(upper.back() - base) + 1;

  std::vector<Integer> ways(width, 0);
  for (std::int64_t h = lower[0]; h <= upper[0]; ++h)
    ways[static_cast<std::size_t>(h - base)] = 1;

  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Integer> next(width, 0);
    Integer running = 0;
    for (std::size_t slot = 0; slot < width; ++slot) {
      running += ways[slot];
      const std::int64_t h = base + static_cast<std::int64_t>(slot);
      if (h >= lower[i] && h <= upper[i]) next[slot] = running;
    }
    ways = std::move(next);
  }

  PathCount result;
  result.model = PathModel::boundary_steps;
  result.parameters = echo_boundary(bounds);
  for (const Integer& w : ways) result.value += w;
  return result;
}

PathCount count_below_line(std::int64_t run, std::int64_t rise, std::uint64_t n) {
  if (run < 1 || rise < 1)
    throw std::invalid_argument("count_below_line: run and rise must be >= 1");

  PathCount result;
  result.model = PathModel::below_line;
  {
    std::ostringstream out;
    out << "run=" << run << " rise=" << rise << " n=" << n;
    result.parameters = out.str();
  }
  if (n == 0) {
    result.value = 1;
    return result;
  }

  const std::int64_t max_x = run * static_cast<std::int64_t>(n);
  const std::int64_t max_y = rise * static_cast<std::int64_t>(n);

  // ways[y] = paths from the origin to (x, y) staying weakly below the
  // line; one column in memory at a time. At x = 0 only y = 0 qualifies.
  std::vector<Integer> ways(static_cast<std::size_t>(max_y) + 1, 0);
  ways[0] = 1;
  for (std::int64_t x = 1; x <= max_x; ++x) {
    const std::int64_t ceiling = std::min<std::int64_t>(max_y, (rise * x) / run);
    for (std::int64_t y = 0; y <= max_y; ++y) {
      auto slot = static_cast<std::size_t>(y);
      if (y > ceiling) {
        ways[slot] = 0;
      } else if (y > 0) {
        ways[slot] += ways[slot - 1];
      }
    }
  }
  result.value = ways[static_cast<std::size_t>(max_y)];
  return result;
}

}  // namespace pathdet

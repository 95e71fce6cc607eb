#include <doctest.h>

#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "pathdet/closed_form.hpp"
#include "pathdet/det.hpp"
#include "pathdet/path_count.hpp"
#include "support/boundary_gen.hpp"

using pathdet::BoundaryPair;
using pathdet::Integer;
using pathdet::PathModel;

TEST_CASE("boundary path counts") {
  CHECK(pathdet::count_boundary_paths(pathdet::fuss_boundary(1, 4)).value == 14);
  CHECK(pathdet::count_boundary_paths(pathdet::rational_boundary(7, 16, 1)).value == 10659);

  const BoundaryPair pinned = pathdet::custom_boundary(std::vector<std::int64_t>(5, 0),
                                                       std::vector<std::int64_t>(5, 0));
  CHECK(pathdet::count_boundary_paths(pinned).value == 1);

  const auto report = pathdet::count_boundary_paths(pathdet::fuss_boundary(2, 3));
  CHECK(report.model == PathModel::boundary_steps);
  CHECK(report.parameters == "n=3 upper=[0,2,4] lower=[0,0,0]");

  CHECK_THROWS_AS(pathdet::count_boundary_paths(BoundaryPair()), std::invalid_argument);
}

TEST_CASE("below-line path counts") {
  CHECK(pathdet::count_below_line(1, 1, 3).value == 5);
  CHECK(pathdet::count_below_line(1, 2, 2).value == 3);
  CHECK(pathdet::count_below_line(2, 1, 2).value == 3);
  CHECK(pathdet::count_below_line(3, 2, 0).value == 1);
  CHECK(pathdet::count_below_line(1, 1, 0).value == 1);
  CHECK(pathdet::count_below_line(7, 16, 1).value == 10659);
  CHECK_THROWS_AS(pathdet::count_below_line(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(pathdet::count_below_line(1, 0, 2), std::invalid_argument);

  const auto report = pathdet::count_below_line(2, 1, 2);
  CHECK(report.model == PathModel::below_line);
  CHECK(report.parameters == "run=2 rise=1 n=2");
}

TEST_CASE("boundary DP equals the determinant on random boundaries") {
  std::mt19937_64 rng(161803);
  for (int trial = 0; trial < 150; ++trial) {
    const auto bounds = testsupport::random_boundary(rng, 8, -10, 10);
    CAPTURE(trial);
    CHECK(pathdet::count_boundary_paths(bounds).value ==
          pathdet::det_recurrence(pathdet::build_path_matrix(bounds)).value);
  }
}

TEST_CASE("below-line equals the boundary model on the slope families") {
  for (std::int64_t run = 1; run <= 5; ++run) {
    for (std::int64_t rise = 1; rise <= 5; ++rise) {
      if (std::gcd(run, rise) != 1) continue;
      for (std::uint64_t n = 1; run * static_cast<std::int64_t>(n) <= 18; ++n) {
        CAPTURE(run);
        CAPTURE(rise);
        CAPTURE(n);
        CHECK(pathdet::count_below_line(run, rise, n).value ==
              pathdet::count_boundary_paths(pathdet::rational_boundary(run, rise, n)).value);
      }
    }
  }
}

TEST_CASE("below-line specializes to fuss-catalan") {
  for (std::int64_t slope = 1; slope <= 4; ++slope)
    for (std::uint64_t n = 0; n <= 8; ++n)
      CHECK(pathdet::count_below_line(1, slope, n).value == pathdet::fuss_catalan(slope, n));
}

TEST_CASE("raising an upper height never loses paths") {
  std::mt19937_64 rng(271828);
  std::size_t bumped = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto bounds = testsupport::random_boundary(rng, 8, -5, 8);
    const Integer before = pathdet::count_boundary_paths(bounds).value;

    std::vector<std::int64_t> upper = bounds.upper();
    std::uniform_int_distribution<std::size_t> pick(0, upper.size() - 1);
    const std::size_t i = pick(rng);
    const bool last = i + 1 == upper.size();
    if (!last && upper[i] >= upper[i + 1]) continue;  // bump would break monotonicity
    ++upper[i];
    ++bumped;

    const auto larger = pathdet::custom_boundary(std::move(upper), bounds.lower());
    CAPTURE(trial);
    CHECK(pathdet::count_boundary_paths(larger).value >= before);
  }
  CHECK(bumped > 50);  // the property actually fired
}

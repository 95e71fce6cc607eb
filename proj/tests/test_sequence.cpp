#include <doctest.h>

#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "pathdet/closed_form.hpp"
#include "pathdet/sequence.hpp"

using pathdet::BFile;
using pathdet::Integer;
using pathdet::Route;
using pathdet::SequenceSpec;

namespace {

const std::vector<Integer>& slope3_values() {
  static const std::vector<Integer> values = {1,     4,     22,     140,     969,
                                              7084,  53820, 420732, 3362260, 27343888};
  return values;
}

const std::vector<Integer>& slope2_values() {
  static const std::vector<Integer> values = {1,    3,    12,    55,     273,
                                              1428, 7752, 43263, 246675, 1430715};
  return values;
}

}  // namespace

TEST_CASE("generate by closed form and determinant") {
  CHECK(pathdet::generate(SequenceSpec::fuss_range(3, 1, 10), Route::closed_form) ==
        slope3_values());
  CHECK(pathdet::generate(SequenceSpec::fuss_range(2, 1, 10), Route::determinant) ==
        slope2_values());
  for (const Route route : {Route::determinant, Route::closed_form, Route::oracle})
    CHECK(pathdet::generate(SequenceSpec::catalan_range(0, 0), route) ==
          std::vector<Integer>{1});
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(SequenceSpec::fuss_range(0, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::rational_range(2, 4, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::rational_range(0, 1, 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(SequenceSpec::catalan_range(5, 1), std::invalid_argument);
}

TEST_CASE("routes agree within desk bounds") {
  for (std::int64_t slope = 1; slope <= 5; ++slope) {
    const auto spec = SequenceSpec::fuss_range(slope, 0, 12);
    const auto closed = pathdet::generate(spec, Route::closed_form);
    CHECK(pathdet::generate(spec, Route::determinant) == closed);
    CHECK(pathdet::generate(spec, Route::oracle) == closed);
  }
  {
    const auto spec = SequenceSpec::catalan_range(0, 10);
    const auto closed = pathdet::generate(spec, Route::closed_form);
    CHECK(pathdet::generate(spec, Route::determinant) == closed);
    CHECK(pathdet::generate(spec, Route::oracle) == closed);
  }
  for (const auto& [run, rise] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {2, 3}, {3, 2}, {2, 5}, {5, 3}, {4, 3}}) {
    const auto spec = SequenceSpec::rational_range(run, rise, 0, 18 / run);
    const auto closed = pathdet::generate(spec, Route::closed_form);
    CHECK(pathdet::generate(spec, Route::determinant) == closed);
    CHECK(pathdet::generate(spec, Route::oracle) == closed);
  }
}

TEST_CASE("oracle route is cost-guarded") {
  CHECK_THROWS_AS(pathdet::generate(SequenceSpec::catalan_range(0, 25), Route::oracle),
                  pathdet::CostGuardError);
  CHECK_THROWS_AS(pathdet::sequence_value(SequenceSpec::fuss_range(2, 0, 30), 25, Route::oracle),
                  pathdet::CostGuardError);
  CHECK_THROWS_AS(
      pathdet::sequence_value(SequenceSpec::rational_range(5, 2, 0, 5), 5, Route::oracle),
      pathdet::CostGuardError);
  // right at the limit is fine
  CHECK(pathdet::sequence_value(SequenceSpec::catalan_range(0, 24), 24, Route::oracle) ==
        pathdet::catalan(24));
}

TEST_CASE("parse_bfile accepts the plain format") {
  const BFile bfile = pathdet::parse_bfile("0 1\n1 1\n2 2\n");
  REQUIRE(bfile.entries.size() == 3);
  CHECK(bfile.entries[0] == BFile::Entry{0, Integer(1)});
  CHECK(bfile.entries[2] == BFile::Entry{2, Integer(2)});
}

TEST_CASE("parse_bfile skips comments and blank lines") {
  const BFile bfile = pathdet::parse_bfile("# comment\n\n   \n1 1\n2 3\n");
  REQUIRE(bfile.entries.size() == 2);
  CHECK(bfile.entries[0] == BFile::Entry{1, Integer(1)});
  CHECK(bfile.entries[1] == BFile::Entry{2, Integer(3)});
}

TEST_CASE("parse_bfile tolerates arbitrary field whitespace") {
  const BFile bfile = pathdet::parse_bfile("  5\t 42\n 6   132\n");
  REQUIRE(bfile.entries.size() == 2);
  CHECK(bfile.entries[0] == BFile::Entry{5, Integer(42)});
}

TEST_CASE("parse_bfile reports gaps with line numbers") {
  try {
    pathdet::parse_bfile("1 1\n3 12\n");
    FAIL("expected NonContiguousIndexError");
  } catch (const pathdet::NonContiguousIndexError& error) {
    CHECK(error.line() == 2);
  }
}

TEST_CASE("parse_bfile reports malformed lines") {
  try {
    pathdet::parse_bfile("0 1\nforty two\n");
    FAIL("expected MalformedLineError");
  } catch (const pathdet::MalformedLineError& error) {
    CHECK(error.line() == 2);
  }
  CHECK_THROWS_AS(pathdet::parse_bfile("0\n"), pathdet::MalformedLineError);
  CHECK_THROWS_AS(pathdet::parse_bfile("0 1 2\n"), pathdet::MalformedLineError);
  CHECK_THROWS_AS(pathdet::parse_bfile("0 1.5\n"), pathdet::MalformedLineError);
}

TEST_CASE("render and parse round-trip") {
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<std::int64_t> start(-3, 100);
  std::uniform_int_distribution<int> length(1, 30);
  std::uniform_int_distribution<long long> value(-1000000, 1000000);
  for (int trial = 0; trial < 50; ++trial) {
    BFile bfile;
    std::int64_t index = start(rng);
    const int count = length(rng);
    for (int i = 0; i < count; ++i)
      bfile.entries.push_back({index++, Integer(value(rng)) * Integer(value(rng))});
    CHECK(pathdet::parse_bfile(pathdet::render_bfile(bfile)) == bfile);
  }
}

TEST_CASE("compare against a reference prefix") {
  const auto spec = SequenceSpec::catalan_range(0, 10);
  const std::string reference =
      "0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n7 429\n8 1430\n9 4862\n10 16796\n";
  const auto report = pathdet::compare(spec, pathdet::parse_bfile(reference), 0);
  CHECK(report.matched == 11);
  CHECK(report.mismatches.empty());
}

TEST_CASE("compare flags corrupted values") {
  const auto spec = SequenceSpec::catalan_range(0, 5);
  const auto report =
      pathdet::compare(spec, pathdet::parse_bfile("0 1\n1 1\n2 2\n3 6\n4 14\n5 42\n"), 0);
  CHECK(report.matched == 5);
  REQUIRE(report.mismatches.size() == 1);
  CHECK(report.mismatches[0].index == 3);
  CHECK(report.mismatches[0].expected == 6);  // the b-file side
  CHECK(report.mismatches[0].actual == 5);    // our value
}

TEST_CASE("compare honors the alignment offset") {
  const auto spec = SequenceSpec::fuss_range(3, 1, 10);
  std::string shifted;
  for (std::uint64_t n = 1; n <= 10; ++n)
    shifted += std::to_string(n + 100) + " " + pathdet::to_decimal(slope3_values()[n - 1]) + "\n";
  const auto report = pathdet::compare(spec, pathdet::parse_bfile(shifted), 100);
  CHECK(report.matched == 10);
  CHECK(report.mismatches.empty());
}

TEST_CASE("compare rejects hand-built gapped b-files") {
  BFile gapped;
  gapped.entries.push_back({0, Integer(1)});
  gapped.entries.push_back({2, Integer(2)});
  CHECK_THROWS_AS(pathdet::compare(SequenceSpec::catalan_range(0, 5), gapped, 0),
                  std::invalid_argument);
}

TEST_CASE("compare requires a nonempty overlap") {
  const auto spec = SequenceSpec::catalan_range(0, 5);
  CHECK_THROWS_AS(pathdet::compare(spec, pathdet::parse_bfile("100 1\n101 1\n"), 0),
                  pathdet::EmptyOverlapError);
  CHECK_THROWS_AS(pathdet::compare(spec, BFile{}, 0), pathdet::EmptyOverlapError);
  // partial overlap is fine
  const auto report = pathdet::compare(spec, pathdet::parse_bfile("4 14\n5 42\n6 132\n"), 0);
  CHECK(report.matched == 2);
}

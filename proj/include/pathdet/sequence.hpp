#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathdet/exact.hpp"

namespace pathdet {

enum class SequenceKind { catalan, fuss, rational };

/// Which independent implementation produces the values.
enum class Route { determinant, closed_form, oracle };

std::string_view route_name(Route route) noexcept;

/// A sequence family plus an inclusive index range.
struct SequenceSpec {
  SequenceKind kind = SequenceKind::catalan;
  std::int64_t slope = 1;           // fuss only
  std::int64_t run = 1, rise = 1;   // rational only
  std::uint64_t from = 0, to = 0;

  static SequenceSpec catalan_range(std::uint64_t from, std::uint64_t to);
  static SequenceSpec fuss_range(std::int64_t slope, std::uint64_t from, std::uint64_t to);
  static SequenceSpec rational_range(std::int64_t run, std::int64_t rise, std::uint64_t from,
                                     std::uint64_t to);

  /// Throws std::invalid_argument when the range or the kind's parameters
  /// violate their constructors' preconditions.
  void validate() const;

  /// Grid columns the brute-force oracle walks for one index.
  std::uint64_t grid_columns(std::uint64_t index) const;
};

/// The oracle route refuses instances wider than this many grid columns;
/// its cost grows quadratically past desk scale.
inline constexpr std::uint64_t kOracleColumnLimit = 24;

class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One sequence value by the chosen route. The three routes are independent
/// implementations: determinant (recurrence engine on the path matrix),
/// closed form, and the brute-force path oracle (cost-guarded).
Integer sequence_value(const SequenceSpec& spec, std::uint64_t index, Route route);

/// Values for every index in [spec.from, spec.to], in index order.
std::vector<Integer> generate(const SequenceSpec& spec, Route route);

/// Offset-indexed sequence prefix, one (index, value) pair per line.
struct BFile {
  struct Entry {
    std::int64_t index;
    Integer value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;
  friend bool operator==(const BFile&, const BFile&) = default;
};

class BFileError : public std::runtime_error {
 public:
  BFileError(std::string message, std::size_t line);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MalformedLineError : public BFileError {
 public:
  using BFileError::BFileError;
};

class NonContiguousIndexError : public BFileError {
 public:
  using BFileError::BFileError;
};

/// Parses "index value" lines. '#' comment lines and blank lines are
/// skipped; whitespace between fields is arbitrary; indices must increase
/// by exactly 1; values are arbitrary-precision decimals.
BFile parse_bfile(std::istream& in);
BFile parse_bfile(std::string_view text);

/// Inverse of parse_bfile on valid BFile values.
std::string render_bfile(const BFile& bfile);

struct SequenceComparison {
  struct Mismatch {
    std::int64_t index;  // b-file index
    Integer expected;    // b-file side
    Integer actual;      // generated side
  };
  std::size_t matched = 0;
  std::vector<Mismatch> mismatches;
};

class EmptyOverlapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element-wise exact comparison of the sequence's closed-form values
/// against the b-file: sequence index i is matched with b-file index
/// i + align. Throws EmptyOverlapError when the shifted range misses the
/// b-file entirely.
SequenceComparison compare(const SequenceSpec& spec, const BFile& bfile, std::int64_t align);

}  // namespace pathdet

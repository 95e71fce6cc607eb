#include "pathdet/sequence.hpp"

#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>

#include "pathdet/boundary.hpp"
#include "pathdet/closed_form.hpp"
#include "pathdet/det.hpp"
#include "pathdet/hessenberg.hpp"
#include "pathdet/path_count.hpp"

namespace pathdet {

std::string_view route_name(Route route) noexcept {
  switch (route) {
    case Route::determinant: return "determinant";
    case Route::closed_form: return "closed-form";
    case Route::oracle: return "oracle";
  }
  return "unknown";
}

SequenceSpec SequenceSpec::catalan_range(std::uint64_t from, std::uint64_t to) {
  SequenceSpec spec;
  spec.kind = SequenceKind::catalan;
  spec.from = from;
  spec.to = to;
  spec.validate();
  return spec;
}

SequenceSpec SequenceSpec::fuss_range(std::int64_t slope, std::uint64_t from, std::uint64_t to) {
  SequenceSpec spec;
  spec.kind = SequenceKind::fuss;
  spec.slope = slope;
  spec.from = from;
  spec.to = to;
  spec.validate();
  return spec;
}

SequenceSpec SequenceSpec::rational_range(std::int64_t run, std::int64_t rise,
                                          std::uint64_t from, std::uint64_t to) {
  SequenceSpec spec;
  spec.kind = SequenceKind::rational;
  spec.run = run;
  spec.rise = rise;
  spec.from = from;
  spec.to = to;
  spec.validate();
  return spec;
}

void SequenceSpec::validate() const {
  if (from > to) throw std::invalid_argument("sequence range: from > to");
  switch (kind) {
    case SequenceKind::catalan:
      break;
    case SequenceKind::fuss:
      if (slope < 1) throw std::invalid_argument("fuss sequence: slope must be >= 1");
      break;
    case SequenceKind::rational:
      if (run < 1 || rise < 1)
        throw std::invalid_argument("rational sequence: run and rise must be >= 1");
      if (std::gcd(run, rise) != 1)
        throw std::invalid_argument("rational sequence: run and rise must be coprime");
      break;
  }
}

std::uint64_t SequenceSpec::grid_columns(std::uint64_t index) const {
  return kind == SequenceKind::rational ? static_cast<std::uint64_t>(run) * index : index;
}

namespace {

BoundaryPair boundary_for(const SequenceSpec& spec, std::uint64_t index) {
  switch (spec.kind) {
    case SequenceKind::catalan: return fuss_boundary(1, index);
    case SequenceKind::fuss: return fuss_boundary(spec.slope, index);
    case SequenceKind::rational: return rational_boundary(spec.run, spec.rise, index);
  }
  throw std::logic_error("boundary_for: bad kind");
}

}  // namespace

Integer sequence_value(const SequenceSpec& spec, std::uint64_t index, Route route) {
  spec.validate();
  switch (route) {
    case Route::determinant:
      return det_recurrence(build_path_matrix(boundary_for(spec, index))).value;
    case Route::closed_form:
      switch (spec.kind) {
        case SequenceKind::catalan: return catalan(index);
        case SequenceKind::fuss: return fuss_catalan(spec.slope, index);
        case SequenceKind::rational: return bizley_count(spec.run, spec.rise, index);
      }
      break;
    case Route::oracle: {
      if (spec.grid_columns(index) > kOracleColumnLimit)
        throw CostGuardError("oracle route refused: index " + std::to_string(index) +
                             " needs " + std::to_string(spec.grid_columns(index)) +
                             " grid columns, limit is " + std::to_string(kOracleColumnLimit));
      const std::int64_t run = spec.kind == SequenceKind::rational ? spec.run : 1;
      const std::int64_t rise = spec.kind == SequenceKind::rational ? spec.rise
                                : spec.kind == SequenceKind::fuss   ? spec.slope
                                                                    : 1;
      return count_below_line(run, rise, index).value;
    }
  }
  throw std::logic_error("sequence_value: bad route");
}

std::vector<Integer> generate(const SequenceSpec& spec, Route route) {
  spec.validate();
  if (route == Route::oracle && spec.grid_columns(spec.to) > kOracleColumnLimit)
    throw CostGuardError("oracle route refused: top index " + std::to_string(spec.to) +
                         " needs " + std::to_string(spec.grid_columns(spec.to)) +
                         " grid columns, limit is " + std::to_string(kOracleColumnLimit));
  std::vector<Integer> values;
  values.reserve(static_cast<std::size_t>(spec.to - spec.from) + 1);
  for (std::uint64_t index = spec.from; index <= spec.to; ++index)
    values.push_back(sequence_value(spec, index, route));
  return values;
}

BFileError::BFileError(std::string message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

BFile parse_bfile(std::istream& in) {
  BFile bfile;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string index_text;
    if (!(fields >> index_text)) continue;       // blank
    if (index_text.front() == '#') continue;     // comment

    std::string value_text;
    if (!(fields >> value_text))
      throw MalformedLineError("expected 'index value', got only one field", lineno);
    std::string extra;
    if (fields >> extra)
      throw MalformedLineError("trailing content after the value field", lineno);

    std::int64_t index = 0;
    const auto* begin = index_text.data();
    const auto* end = begin + index_text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, index);
    if (ec != std::errc() || ptr != end)
      throw MalformedLineError("bad index '" + index_text + "'", lineno);

    Integer value;
    try {
      value = integer_from_decimal(value_text);
    } catch (const std::invalid_argument&) {
      throw MalformedLineError("bad value '" + value_text + "'", lineno);
    }

    if (!bfile.entries.empty() && index != bfile.entries.back().index + 1)
      throw NonContiguousIndexError("index " + std::to_string(index) +
                                        " does not follow " +
                                        std::to_string(bfile.entries.back().index),
                                    lineno);
    bfile.entries.push_back({index, std::move(value)});
  }
  return bfile;
}

BFile parse_bfile(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_bfile(in);
}

std::string render_bfile(const BFile& bfile) {
  std::string out;
  for (const auto& entry : bfile.entries) {
    out += std::to_string(entry.index);
    out += ' ';
    out += to_decimal(entry.value);
    out += '\n';
  }
  return out;
}

SequenceComparison compare(const SequenceSpec& spec, const BFile& bfile, std::int64_t align) {
  spec.validate();
  if (bfile.entries.empty()) throw EmptyOverlapError("b-file holds no entries");

  const std::int64_t first = bfile.entries.front().index;
  const std::int64_t last = bfile.entries.back().index;
  if (last - first + 1 != static_cast<std::int64_t>(bfile.entries.size()))
    throw std::invalid_argument("compare: b-file indices are not contiguous");

  SequenceComparison result;
  for (std::uint64_t index = spec.from; index <= spec.to; ++index) {
    const std::int64_t shifted = static_cast<std::int64_t>(index) + align;
    if (shifted < first || shifted > last) continue;
    const Integer& reference = bfile.entries[static_cast<std::size_t>(shifted - first)].value;
    Integer generated = sequence_value(spec, index, Route::closed_form);
    if (generated == reference) {
      ++result.matched;
    } else {
      result.mismatches.push_back({shifted, reference, std::move(generated)});
    }
  }
  if (result.matched == 0 && result.mismatches.empty())
    throw EmptyOverlapError("sequence range shifted by " + std::to_string(align) +
                            " does not meet b-file indices [" + std::to_string(first) + ", " +
                            std::to_string(last) + "]");
  return result;
}

}  // namespace pathdet

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pathdet/boundary.hpp"
#include "pathdet/closed_form.hpp"
#include "pathdet/det.hpp"
#include "pathdet/hessenberg.hpp"
#include "pathdet/path_count.hpp"
#include "pathdet/sequence.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using pathdet::BinomialHessenberg;
using pathdet::BoundaryPair;
using pathdet::DetReport;
using pathdet::Engine;
using pathdet::Integer;

constexpr int kExitOk = 0;        // success / agreement
constexpr int kExitMismatch = 1;  // verified disagreement or mismatch
constexpr int kExitUsage = 2;     // usage or input error

struct FamilyOptions {
  std::string kind;
  std::int64_t slope = 0;  // --k
  std::int64_t run = 0;    // --m
  std::int64_t rise = 0;   // --r
};

void add_family_options(CLI::App* cmd, FamilyOptions& family) {
  cmd->add_option("--kind", family.kind, "Sequence family: catalan, fuss, rational")
      ->required()
      ->check(CLI::IsMember({"catalan", "fuss", "rational"}));
  cmd->add_option("--k", family.slope, "Slope for --kind fuss");
  cmd->add_option("--m", family.run, "Run (east steps per period) for --kind rational");
  cmd->add_option("--r", family.rise, "Rise (north steps per period) for --kind rational");
}

void check_family(const CLI::App* cmd, const FamilyOptions& family) {
  if (family.kind == "fuss" && cmd->count("--k") == 0)
    throw std::invalid_argument("--kind fuss requires --k");
  if (family.kind == "rational" && (cmd->count("--m") == 0 || cmd->count("--r") == 0))
    throw std::invalid_argument("--kind rational requires --m and --r");
}

BoundaryPair make_boundary(const FamilyOptions& family, std::uint64_t n) {
  if (family.kind == "catalan") return pathdet::fuss_boundary(1, n);
  if (family.kind == "fuss") return pathdet::fuss_boundary(family.slope, n);
  return pathdet::rational_boundary(family.run, family.rise, n);
}

pathdet::SequenceSpec make_spec(const FamilyOptions& family, std::uint64_t from,
                                std::uint64_t to) {
  using pathdet::SequenceSpec;
  if (family.kind == "catalan") return SequenceSpec::catalan_range(from, to);
  if (family.kind == "fuss") return SequenceSpec::fuss_range(family.slope, from, to);
  return SequenceSpec::rational_range(family.run, family.rise, from, to);
}

int run_gen(const FamilyOptions& family, std::uint64_t n, const std::string& format) {
  const BoundaryPair bounds = make_boundary(family, n);
  const BinomialHessenberg matrix = pathdet::build_path_matrix(bounds);
  const std::size_t dim = matrix.dim();

  if (format == "json") {
    ordered_json grid = ordered_json::array();
    for (std::size_t i = 0; i < dim; ++i) {
      ordered_json row = ordered_json::array();
      for (std::size_t j = 0; j < dim; ++j) row.push_back(pathdet::to_decimal(matrix(i, j)));
      grid.push_back(std::move(row));
    }
    ordered_json doc;
    doc["n"] = dim;
    doc["a"] = bounds.upper();
    doc["b"] = bounds.lower();
    doc["entries"] = std::move(grid);
    std::cout << doc.dump() << "\n";
    return kExitOk;
  }

  const char sep = format == "csv" ? ',' : ' ';
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (j) std::cout << sep;
      std::cout << matrix(i, j);
    }
    std::cout << "\n";
  }
  return kExitOk;
}

DetReport run_engine_with_fallback(Engine engine, const BinomialHessenberg& matrix) {
  switch (engine) {
    case Engine::recurrence:
      return pathdet::det_recurrence(matrix);
    case Engine::fraction_free:
      return pathdet::det_fraction_free(matrix);
    case Engine::elimination:
      try {
        return pathdet::det_elimination(matrix);
      } catch (const pathdet::ZeroPivotError& zero) {
        std::cerr << "warning: " << zero.what() << "; falling back to recurrence\n";
        DetReport report = pathdet::det_recurrence(matrix);
        report.engine = Engine::elimination;
        report.fallback_pivot_row = zero.row();
        return report;
      }
  }
  throw std::logic_error("run_engine_with_fallback: bad engine");
}

ordered_json report_to_json(const DetReport& report) {
  ordered_json doc;
  doc["engine"] = std::string(pathdet::engine_name(report.engine));
  doc["value"] = pathdet::to_decimal(report.value);
  doc["elapsed_ns"] = report.elapsed.count();
  if (report.diagonal) {
    ordered_json diagonal = ordered_json::array();
    for (const auto& pivot : *report.diagonal) diagonal.push_back(pathdet::to_fraction(pivot));
    doc["diagonal"] = std::move(diagonal);
  }
  if (report.fallback_pivot_row) doc["fallback_pivot_row"] = *report.fallback_pivot_row;
  return doc;
}

int run_det(const FamilyOptions& family, std::uint64_t n, const std::string& engine_text,
            const std::string& format) {
  const BinomialHessenberg matrix = pathdet::build_path_matrix(make_boundary(family, n));

  if (engine_text == "all") {
    const pathdet::DetAgreement all = pathdet::det_all(matrix);
    if (format == "json") {
      ordered_json doc;
      ordered_json reports = ordered_json::array();
      for (const auto& report : all.reports) reports.push_back(report_to_json(report));
      doc["reports"] = std::move(reports);
      doc["agree"] = all.agree;
      std::cout << doc.dump() << "\n";
    } else {
      for (const auto& report : all.reports)
        std::cout << pathdet::engine_name(report.engine) << ' ' << report.value << "\n";
      std::cout << (all.agree ? "AGREE" : "DISAGREE") << "\n";
    }
    return all.agree ? kExitOk : kExitMismatch;
  }

  const auto engine = pathdet::engine_from_name(engine_text);
  if (!engine) throw std::invalid_argument("unknown engine '" + engine_text + "'");
  const DetReport report = run_engine_with_fallback(*engine, matrix);
  if (format == "json") {
    std::cout << report_to_json(report).dump() << "\n";
  } else {
    std::cout << report.value << "\n";
    if (report.diagonal) {
      std::cout << "diagonal";
      for (const auto& pivot : *report.diagonal) std::cout << ' ' << pathdet::to_fraction(pivot);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_verify(const FamilyOptions& family, std::uint64_t n_max) {
  const auto spec = make_spec(family, 1, std::max<std::uint64_t>(n_max, 1));
  std::uint64_t passed = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BinomialHessenberg matrix = pathdet::build_path_matrix(make_boundary(family, n));
    const pathdet::DetAgreement all = pathdet::det_all(matrix);
    const Integer& det_value = all.reports.front().value;
    const Integer closed = pathdet::sequence_value(spec, n, pathdet::Route::closed_form);

    bool oracle_skipped = false;
    Integer oracle_value;
    try {
      oracle_value = pathdet::sequence_value(spec, n, pathdet::Route::oracle);
    } catch (const pathdet::CostGuardError&) {
      oracle_skipped = true;
    }

    const bool ok =
        all.agree && det_value == closed && (oracle_skipped || oracle_value == det_value);
    if (ok) ++passed;
    std::cout << "n=" << n << " det=" << det_value << " closed=" << closed << " oracle=";
    if (oracle_skipped)
      std::cout << "SKIPPED-ORACLE";
    else
      std::cout << oracle_value;
    std::cout << (ok ? " PASS" : " FAIL") << "\n";
  }
  std::cout << (passed == n_max ? "PASS " : "FAIL ") << passed << "/" << n_max << "\n";
  return passed == n_max ? kExitOk : kExitMismatch;
}

int run_bench(const FamilyOptions& family, std::uint64_t n, const std::string& engines_text,
              std::int64_t reps, const std::string& format) {
  std::vector<Engine> engines;
  std::stringstream tokens(engines_text);
  std::string token;
  while (std::getline(tokens, token, ',')) {
    const auto engine = pathdet::engine_from_name(token);
    if (!engine) throw std::invalid_argument("unknown engine '" + token + "'");
    engines.push_back(*engine);
  }
  if (engines.empty()) throw std::invalid_argument("--engines must name at least one engine");

  const BinomialHessenberg matrix = pathdet::build_path_matrix(make_boundary(family, n));

  struct Row {
    Engine engine;
    std::vector<std::int64_t> times_ns;
    Integer value;
    bool fell_back = false;
  };
  std::vector<Row> rows;
  for (const Engine engine : engines) {
    Row row;
    row.engine = engine;
    for (std::int64_t rep = 0; rep < reps; ++rep) {
      const DetReport report = run_engine_with_fallback(engine, matrix);
      row.value = report.value;
      row.times_ns.push_back(report.elapsed.count());
      if (report.fallback_pivot_row) row.fell_back = true;
    }
    std::sort(row.times_ns.begin(), row.times_ns.end());
    rows.push_back(std::move(row));
  }

  bool agree = true;
  for (const Row& row : rows) agree = agree && row.value == rows.front().value;

  auto median_ns = [](const std::vector<std::int64_t>& sorted) {
    const std::size_t count = sorted.size();
    return count % 2 ? sorted[count / 2] : (sorted[count / 2 - 1] + sorted[count / 2]) / 2;
  };

  if (format == "csv") {
    std::cout << "engine,reps,min_ns,median_ns,value\n";
    for (const Row& row : rows)
      std::cout << pathdet::engine_name(row.engine) << ',' << reps << ','
                << row.times_ns.front() << ',' << median_ns(row.times_ns) << ',' << row.value
                << "\n";
  } else {
    for (const Row& row : rows) {
      std::cout << "engine=" << pathdet::engine_name(row.engine) << " reps=" << reps
                << " min_ms=" << static_cast<double>(row.times_ns.front()) / 1e6
                << " median_ms=" << static_cast<double>(median_ns(row.times_ns)) / 1e6
                << " value=" << row.value;
      if (row.fell_back) std::cout << " (recurrence fallback)";
      std::cout << "\n";
    }
    std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  return agree ? kExitOk : kExitMismatch;
}

int run_oeis_check(const FamilyOptions& family, const std::string& bfile_path,
                   std::uint64_t from, std::uint64_t to, std::int64_t align) {
  std::ifstream input(bfile_path);
  if (!input) {
    std::cerr << "error: cannot open b-file '" << bfile_path << "'\n";
    return kExitUsage;
  }
  const pathdet::BFile bfile = pathdet::parse_bfile(input);
  const pathdet::SequenceComparison report =
      pathdet::compare(make_spec(family, from, to), bfile, align);
  std::cout << "matched " << report.matched << "\n";
  for (const auto& mismatch : report.mismatches)
    std::cout << "mismatch index=" << mismatch.index << " expected=" << mismatch.expected
              << " actual=" << mismatch.actual << "\n";
  return report.mismatches.empty() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact determinants of binomial Hessenberg matrices and the lattice-path "
               "families they count"};
  app.require_subcommand(1);

  FamilyOptions gen_family;
  std::int64_t gen_n = 0;
  std::string gen_format = "plain";
  CLI::App* gen = app.add_subcommand("gen", "Print the path matrix for one instance");
  add_family_options(gen, gen_family);
  gen->add_option("--n", gen_n, "Instance index")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--format", gen_format, "plain, csv, or json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  FamilyOptions det_family;
  std::int64_t det_n = 0;
  std::string det_engine = "recurrence";
  std::string det_format = "plain";
  CLI::App* det = app.add_subcommand("det", "Evaluate the determinant of one instance");
  add_family_options(det, det_family);
  det->add_option("--n", det_n, "Instance index")->required()->check(CLI::NonNegativeNumber);
  det->add_option("--engine", det_engine, "recurrence, elimination, fraction-free, or all")
      ->check(CLI::IsMember({"recurrence", "elimination", "fraction-free", "all"}));
  det->add_option("--format", det_format, "plain or json")
      ->check(CLI::IsMember({"plain", "json"}));

  FamilyOptions verify_family;
  std::int64_t verify_n_max = 0;
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check determinants, closed forms, and the DP oracle");
  add_family_options(verify, verify_family);
  verify->add_option("--n-max", verify_n_max, "Verify instances n = 1..n-max")
      ->required()
      ->check(CLI::NonNegativeNumber);

  FamilyOptions bench_family;
  std::int64_t bench_n = 0;
  std::string bench_engines = "recurrence,elimination,fraction-free";
  std::int64_t bench_reps = 3;
  std::string bench_format = "plain";
  CLI::App* bench = app.add_subcommand("bench", "Time the engines on one instance");
  add_family_options(bench, bench_family);
  bench->add_option("--n", bench_n, "Instance index")->required()->check(CLI::NonNegativeNumber);
  bench->add_option("--engines", bench_engines, "Comma-separated engine list");
  bench->add_option("--reps", bench_reps, "Repetitions per engine")->check(CLI::PositiveNumber);
  bench->add_option("--format", bench_format, "plain or csv")
      ->check(CLI::IsMember({"plain", "csv"}));

  FamilyOptions oeis_family;
  std::string oeis_bfile;
  std::int64_t oeis_from = 0;
  std::int64_t oeis_to = 0;
  std::int64_t oeis_align = 0;
  CLI::App* oeis = app.add_subcommand("oeis-check", "Compare a sequence against a b-file");
  add_family_options(oeis, oeis_family);
  oeis->add_option("--bfile", oeis_bfile, "Path to the b-file")->required();
  oeis->add_option("--from", oeis_from, "First sequence index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  oeis->add_option("--to", oeis_to, "Last sequence index")
      ->required()
      ->check(CLI::NonNegativeNumber);
  oeis->add_option("--align", oeis_align, "Offset added to sequence indices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& version) {
    return app.exit(version);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      check_family(gen, gen_family);
      return run_gen(gen_family, static_cast<std::uint64_t>(gen_n), gen_format);
    }
    if (det->parsed()) {
      check_family(det, det_family);
      return run_det(det_family, static_cast<std::uint64_t>(det_n), det_engine, det_format);
    }
    if (verify->parsed()) {
      check_family(verify, verify_family);
      return run_verify(verify_family, static_cast<std::uint64_t>(verify_n_max));
    }
    if (bench->parsed()) {
      check_family(bench, bench_family);
      return run_bench(bench_family, static_cast<std::uint64_t>(bench_n), bench_engines,
                       bench_reps, bench_format);
    }
    if (oeis->parsed()) {
      check_family(oeis, oeis_family);
      return run_oeis_check(oeis_family, oeis_bfile, static_cast<std::uint64_t>(oeis_from),
                            static_cast<std::uint64_t>(oeis_to), oeis_align);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

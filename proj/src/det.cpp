#include "pathdet/det.hpp"

#include <string>
#include <utility>

namespace pathdet {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

void require_normalized(const BinomialHessenberg& m, const char* engine) {
  if (!is_normalized_hessenberg(m))
    throw std::invalid_argument(std::string(engine) +
                                ": matrix is not normalized upper Hessenberg");
}

}  // namespace

std::string_view engine_name(Engine engine) noexcept {
  switch (engine) {
    case Engine::recurrence: return "recurrence";
    case Engine::elimination: return "elimination";
    case Engine::fraction_free: return "fraction-free";
  }
  return "unknown";
}

std::optional<Engine> engine_from_name(std::string_view name) noexcept {
  if (name == "recurrence") return Engine::recurrence;
  if (name == "elimination") return Engine::elimination;
  if (name == "fraction-free") return Engine::fraction_free;
  return std::nullopt;
}

ZeroPivotError::ZeroPivotError(std::size_t row)
    : std::runtime_error("zero pivot at row index " + std::to_string(row) +
                         "; elimination is undefined there"),
      row_(row) {}

DetReport det_recurrence(const BinomialHessenberg& m) {
  require_normalized(m, "det_recurrence");
  const auto start = Clock::now();
  const std::size_t n = m.dim();

  // d[t] is the leading t x t minor; the unit subdiagonal makes every
  // cofactor product collapse to a sign.
  std::vector<Integer> d(n + 1);
  d[0] = 1;
  for (std::size_t t = 1; t <= n; ++t) {
    Integer sum = 0;
    for (std::size_t k = t; k >= 1; --k) {
      const Integer& entry = m(k - 1, t - 1);
      if (entry == 0) continue;
      if ((t - k) % 2 == 0)
        sum += entry * d[k - 1];
      else
        sum -= entry * d[k - 1];
    }
    d[t] = std::move(sum);
  }

  DetReport report;
  report.value = std::move(d[n]);
  report.engine = Engine::recurrence;
  report.elapsed = since(start);
  return report;
}

DetReport det_elimination(const BinomialHessenberg& m) {
  require_normalized(m, "det_elimination");
  const auto start = Clock::now();
  const std::size_t n = m.dim();

  // Rational working copy; the source matrix stays untouched.
  std::vector<Rational> work(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return work[i * n + j]; };

  std::vector<Rational> diagonal;
  diagonal.reserve(n);
  Rational product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational pivot = at(i, i);
    diagonal.push_back(pivot);
    product *= pivot;
    if (i + 1 < n) {
      if (pivot == 0) throw ZeroPivotError(i);
      const Rational factor = Rational(1) / pivot;
      // Row i holds zeros left of column i by now, so the update starts
      // at the subdiagonal entry it is about to clear.
      for (std::size_t j = i; j < n; ++j) at(i + 1, j) -= factor * at(i, j);
    }
  }

  if (denominator(product) != 1)
    throw std::logic_error("det_elimination: diagonal product is not integral");

  DetReport report;
  report.value = numerator(product);
  report.engine = Engine::elimination;
  report.diagonal = std::move(diagonal);
  report.elapsed = since(start);
  return report;
}

DetReport det_fraction_free(const BinomialHessenberg& m) {
  const auto start = Clock::now();
  const std::size_t n = m.dim();

  std::vector<Integer> work = m.entries();
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return work[i * n + j]; };

  DetReport report;
  report.engine = Engine::fraction_free;

  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == k) {
        // Column k vanishes below the eliminated block: singular.
        report.value = 0;
        report.elapsed = since(start);
        return report;
      }
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    const Integer pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = exact_div(at(i, j) * pivot - at(i, k) * at(k, j), previous);
      }
      at(i, k) = 0;
    }
    previous = pivot;
  }

  report.value = (n == 0) ? Integer(1) : at(n - 1, n - 1);
  if (sign < 0) report.value = -report.value;
  report.elapsed = since(start);
  return report;
}

DetAgreement det_all(const BinomialHessenberg& m) {
  DetAgreement result;
  result.reports.push_back(det_recurrence(m));
  const Integer reference = result.reports.front().value;

  try {
    result.reports.push_back(det_elimination(m));
  } catch (const ZeroPivotError& zero) {
    DetReport fallback;
    fallback.value = reference;
    fallback.engine = Engine::elimination;
    fallback.fallback_pivot_row = zero.row();
    result.reports.push_back(std::move(fallback));
  }
  result.reports.push_back(det_fraction_free(m));

  result.agree = true;
  for (const DetReport& report : result.reports) {
    if (report.value != reference) {
      result.agree = false;
      break;
    }
  }
  return result;
}

}  // namespace pathdet

#include "pathdet/closed_form.hpp"

#include <numeric>
#include <string>

namespace pathdet {

Integer catalan(std::uint64_t n) {
  const Integer top = Integer(2) * n;
  return exact_div(binomial(top, Integer(n)), Integer(n) + 1);
}

Integer fuss_catalan(std::int64_t slope, std::uint64_t n) {
  if (slope < 1)
    throw std::invalid_argument("fuss_catalan: slope must be >= 1, got " +
                                std::to_string(slope));
  const Integer top = Integer(slope + 1) * n;
  return exact_div(binomial(top, Integer(n)), Integer(slope) * n + 1);
}

Rational bizley_phi(std::uint64_t index, std::int64_t run, std::int64_t rise) {
  if (index < 1) throw std::invalid_argument("bizley_phi: index must be >= 1");
  if (run < 1 || rise < 1) throw std::invalid_argument("bizley_phi: run and rise must be >= 1");
  const Integer scale = Integer(index) * (run + rise);
  return make_rational(binomial(scale, Integer(index) * run), scale);
}

std::uint64_t PartitionMultiset::weight() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < multiplicities_.size(); ++i)
    total += (i + 1) * multiplicities_[i];
  return total;
}

namespace {

void descend_parts(std::uint64_t part, std::uint64_t remaining,
                   std::vector<std::uint64_t>& counts,
                   std::vector<PartitionMultiset>& out) {
  if (part == 0) {
    if (remaining == 0) out.emplace_back(counts);
    return;
  }
  for (std::uint64_t c = remaining / part + 1; c-- > 0;) {
    counts[part - 1] = c;
    descend_parts(part - 1, remaining - c * part, counts, out);
  }
  counts[part - 1] = 0;
}

}  // namespace

std::vector<PartitionMultiset> enumerate_partitions(std::uint64_t n) {
  std::vector<PartitionMultiset> out;
  if (n == 0) {
    out.emplace_back(std::vector<std::uint64_t>{});
    return out;
  }
  std::vector<std::uint64_t> counts(n, 0);
  descend_parts(n, n, counts, out);
  return out;
}

Integer bizley_count(std::int64_t run, std::int64_t rise, std::uint64_t n) {
  if (run < 1 || rise < 1)
    throw std::invalid_argument("bizley_count: run and rise must be >= 1");
  if (std::gcd(run, rise) != 1)
    throw std::invalid_argument("bizley_count: run and rise must be coprime, got " +
                                std::to_string(run) + " and " + std::to_string(rise));

  std::vector<Rational> phi(n + 1);
  for (std::uint64_t j = 1; j <= n; ++j) phi[j] = bizley_phi(j, run, rise);

  Rational total = 0;
  for (const PartitionMultiset& partition : enumerate_partitions(n)) {
    Rational term = 1;
    const auto& counts = partition.multiplicities();
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const std::uint64_t count = counts[i];
      if (count == 0) continue;
      for (std::uint64_t c = 0; c < count; ++c) term *= phi[i + 1];
      term /= Rational(factorial(count));
    }
    total += term;
  }

  if (denominator(total) != 1)
    throw NonIntegerResultError("bizley_count: partition sum is not integral for run=" +
                                std::to_string(run) + " rise=" + std::to_string(rise) +
                                " n=" + std::to_string(n));
  return numerator(total);
}

}  // namespace pathdet

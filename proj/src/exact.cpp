#include "pathdet/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace pathdet {

Integer binomial(const Integer& n, const Integer& k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer count = k;
  if (count > n - count) count = n - count;
  // Running product of C(n - count + i, i); each division is exact because
  // i consecutive integers always contain a multiple of i.
  Integer result = 1;
  for (Integer i = 1; i <= count; ++i) {
    result *= n - count + i;
    result /= i;
  }
  return result;
}

Integer factorial(unsigned long n) {
  Integer result = 1;
  for (unsigned long i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::logic_error("exact_div: division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0)
    throw std::logic_error("exact_div: " + a.str() + " is not divisible by " + b.str());
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  return Rational(num) / Rational(den);
}

std::string to_decimal(const Integer& value) { return value.str(); }

Integer integer_from_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  if (pos == text.size())
    throw std::invalid_argument("integer_from_decimal: empty or sign-only input");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("integer_from_decimal: not a decimal integer: '" +
                                  std::string(text) + "'");
  }
  return Integer(std::string(text));
}

std::string to_fraction(const Rational& value) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(integer_from_decimal(text));
  const Integer num = integer_from_decimal(text.substr(0, slash));
  const Integer den = integer_from_decimal(text.substr(slash + 1));
  if (den == 0)
    throw std::invalid_argument("rational_from_fraction: zero denominator in '" +
                                std::string(text) + "'");
  return make_rational(num, den);
}

}  // namespace pathdet

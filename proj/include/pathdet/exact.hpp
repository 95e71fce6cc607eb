#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace pathdet {

// Exact arbitrary-precision scalars. Everything downstream (matrix entries,
// determinants, path counts) lives in these; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) with the path-counting convention:
/// returns 0 whenever k < 0, k > n, or n < 0. Evaluated multiplicatively
/// with interleaved exact division, so mixed magnitudes like C(14, 1) next
/// to C(23, 7) never touch full factorials.
Integer binomial(const Integer& n, const Integer& k);

/// n! by iterated multiplication; factorial(0) = 1.
Integer factorial(unsigned long n);

/// a / b when b divides a exactly; throws std::logic_error otherwise.
Integer exact_div(const Integer& a, const Integer& b);

/// num / den as a canonical Rational (lowest terms, positive denominator).
/// Throws std::invalid_argument when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

// Decimal-string serialization. Counts overflow machine words quickly, so
// every external format carries values as decimal strings.
std::string to_decimal(const Integer& value);
Integer integer_from_decimal(std::string_view text);

/// "p/q" in lowest terms, plain "p" for integral values.
std::string to_fraction(const Rational& value);
Rational rational_from_fraction(std::string_view text);

}  // namespace pathdet

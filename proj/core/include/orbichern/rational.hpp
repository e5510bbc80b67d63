#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace orbichern {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational in lowest terms with positive denominator (GMP mpq).
using Rat = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on a zero denominator.
Rat make_rat(const Integer &num, const Integer &den);

/// Parses "a", "-a" or "a/b" with decimal integers.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat &q);
std::string to_string(const Integer &z);

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Rat pow(const Rat &base, unsigned long exponent);

} // namespace orbichern

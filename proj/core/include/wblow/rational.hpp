#pragma once

// Exact arithmetic over the rationals. Backed by GMP; mpq_class keeps values
// canonical (lowest terms, positive denominator) after every operation.

#include <gmpxx.h>

#include <string>

namespace wblow {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "0", "-3", "7/2".
std::string to_string(const Rational& q);

}  // namespace wblow

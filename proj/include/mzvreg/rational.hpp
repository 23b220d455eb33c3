#pragma once

#include <gmpxx.h>

#include <string>

namespace mzvreg {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Exact text form "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q"; canonicalizes the result.
Rational parse_rational(const std::string& text);

}  // namespace mzvreg

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jackpos {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation, so no extra wrapper is needed.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& x);
// "num/den", or "num" when den = 1.
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);
// x (x-1) ... (x-k+1)
Rational falling(const Rational& x, unsigned k);

}  // namespace jackpos

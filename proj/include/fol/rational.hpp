#pragma once

#include <gmpxx.h>

#include <string>

namespace fol {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps mpq values canonical after every operation

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

// Accepts "n" or "n/m"; throws SyntaxError on malformed text or zero denominator.
Rational parse_rational(const std::string& text);

// Binomial coefficient C(n, k) for k >= 0, with the polynomial convention
// n(n-1)...(n-k+1)/k! so negative n is allowed.
Integer binomial(const Integer& n, long k);
long binomial_l(long n, long k);

bool is_integer(const Rational& q);
long to_long(const Rational& q);  // requires is_integer and fitting in long

}  // namespace fol

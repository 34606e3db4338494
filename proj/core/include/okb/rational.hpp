#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace okb {

// All arithmetic in this library is exact.  Rationals are GMP mpq under the
// hood; the helpers below are the only sanctioned construction paths from
// strings or num/den pairs, because raw mpq_class constructors do not
// canonicalize.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den with canonicalization.  Throws PreconditionError on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "a", "-a", "a/b" with optional whitespace padding; b > 0 after
// canonicalization.  Throws ParseError on anything else (including "1/0").
Rational parse_rational(std::string_view text);

// Canonical form: "a" for integers, "a/b" with b > 0 otherwise.
std::string to_string(const Rational& q);

// -1, 0, +1.
int sign(const Rational& q);

// |q| rounded to `digits` decimal places with ties to even, returned as a
// fixed-point decimal string (sign reapplied).  Used only for SVG coordinate
// output; no floating point is involved.
std::string decimal_string(const Rational& q, int digits);

}  // namespace okb

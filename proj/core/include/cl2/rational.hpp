#pragma once

#include <gmpxx.h>

#include <string>

namespace cl2 {

using Rational = mpq_class;

// Canonicalized rational num/den (den > 0, gcd reduced). den must be nonzero.
Rational make_rational(long num, long den = 1);

// Canonicalize in place; gmpxx constructors do not reduce fractions.
Rational canonical(Rational q);

bool is_integer(const Rational& q);

std::string to_string(const Rational& q);  // "n" or "n/d"
double to_double(const Rational& q);

// sqrt(x) = coefficient * sqrt(radicand) with radicand a square-free
// nonnegative integer; radicand == 1 signals an exact rational square root.
// Requires x >= 0.
struct SqrtDecomposition {
    Rational coefficient;
    Rational radicand;
};
SqrtDecomposition decompose_sqrt(const Rational& x);

}  // namespace cl2

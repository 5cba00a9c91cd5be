#pragma once

#include "cl2/element.hpp"
#include "cl2/rat_matrix.hpp"

namespace cl2 {

// Moore-Penrose inverse of a rational-coefficient element, total:
//   a == 0          ->  0
//   H(a) != 0       ->  conj(a) / H(a)           (the two-sided inverse)
//   H(a) == 0, a!=0 ->  prime(a) / (4 (a0^2 + a3^2))
// The zero-divisor denominator never vanishes: H(a) == 0 forces the two
// complex halves of a to have equal modulus, so a0^2 + a3^2 == 0 only if
// a == 0.
Element mp(const Element& a);

// The four Penrose equations, with the e3-negating involution standing in
// for transposition: axa = a, xax = x, (ax)' = ax, (xa)' = xa.
bool verify_penrose(const Element& a, const Element& x);

// left_matrix(mp(a)) == mp_oracle(left_matrix(a)) and the same on the right.
bool mp_matrix_consistency(const Element& a);

// Moore-Penrose inverse of the 2x2 image phi_matrix(a); the zero element
// maps to the 2x2 zero matrix.
RatMatrix phi_mp(const Element& a);

}  // namespace cl2

#include "cl2/mp_inverse.hpp"

#include "cl2/matrix_rep.hpp"

#include <stdexcept>

namespace cl2 {

Element mp(const Element& a) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();
    if (a.is_zero()) {
        return Element();
    }
    Scalar h = h_map(a);
    if (!h.is_zero()) {
        return h.inverse() * conj(a);
    }
    Rational den = 4 * (a0 * a0 + a3 * a3);
    if (sgn(den) == 0) {
        throw std::logic_error("mp: zero divisor with vanishing denominator");
    }
    return Scalar(Rational(1) / den) * prime(a);
}

bool verify_penrose(const Element& a, const Element& x) {
    Element ax = a * x;
    Element xa = x * a;
    return ax * a == a && x * ax == x && prime(ax) == ax && prime(xa) == xa;
}

bool mp_matrix_consistency(const Element& a) {
    Element x = mp(a);
    return left_matrix(x) == mp_oracle(left_matrix(a)) &&
           right_matrix(x) == mp_oracle(right_matrix(a));
}

RatMatrix phi_mp(const Element& a) {
    // mp(0) == 0, so the zero element lands on the 2x2 zero matrix.
    return phi_matrix(mp(a));
}

}  // namespace cl2

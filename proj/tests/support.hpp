#pragma once

#include <cl2/element.hpp>
#include <cl2/matrix_rep.hpp>
#include <cl2/rat_matrix.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace cl2test {

using cl2::Element;
using cl2::RatMatrix;
using cl2::Rational;

// Deterministic generator for exact test inputs.  Coefficients stay small so
// each suite runs in well under its time budget.
class Rng {
public:
    explicit Rng(uint32_t seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    Rational rational(long max_num = 9, long max_den = 4) {
        return cl2::make_rational(integer(-max_num, max_num), integer(1, max_den));
    }

    Element element() {
        return Element::from_rationals(rational(), rational(), rational(),
                                       rational());
    }

    Element nonzero() {
        for (;;) {
            Element e = element();
            if (!e.is_zero()) return e;
        }
    }

    Element invertible() {
        for (;;) {
            Element e = element();
            if (!cl2::h_map(e).is_zero()) return e;
        }
    }

    Element noncentral() {
        for (;;) {
            Element e = element();
            if (!cl2::is_central(e)) return e;
        }
    }

    // Nonzero element with H = 0: copy the modulus of the (a0, a3) half into
    // the (a2, a1) half through an exact rational rotation
    // (cos, sin) = ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)).
    Element zero_divisor() {
        for (;;) {
            Rational a0 = rational();
            Rational a3 = rational();
            if (sgn(a0) == 0 && sgn(a3) == 0) continue;
            Rational t = rational(5, 3);
            Rational den = 1 + t * t;
            Rational c = cl2::canonical((1 - t * t) / den);
            Rational s = cl2::canonical(2 * t / den);
            Rational a1 = cl2::canonical(c * a0 - s * a3);
            Rational a2 = cl2::canonical(s * a0 + c * a3);
            return Element::from_rationals(a0, a1, a2, a3);
        }
    }

    // Mixture hitting all three Moore-Penrose cases.
    Element mp_mixed() {
        long k = integer(0, 9);
        if (k == 0) return Element();
        if (k <= 3) return zero_divisor();
        return element();
    }

    // Partner with the same scalar part and the same G value, not central:
    // conjugation by an invertible element, or a G-preserving coefficient
    // shuffle of the non-scalar part.
    Element g_preserving_partner(const Element& a) {
        auto [a0, a1, a2, a3] = a.rational_coefficients();
        switch (integer(0, 3)) {
            case 0: {
                Element u = invertible();
                return cl2::inverse(u) * a * u;
            }
            case 1:
                return Element::from_rationals(a0, a2, a1, -a3);
            case 2:
                return Element::from_rationals(a0, -a1, a2, -a3);
            default: {
                Rational t = rational(5, 3);
                Rational den = 1 + t * t;
                Rational c = cl2::canonical((1 - t * t) / den);
                Rational s = cl2::canonical(2 * t / den);
                return Element::from_rationals(
                    a0, cl2::canonical(c * a1 - s * a2),
                    cl2::canonical(s * a1 + c * a2), a3);
            }
        }
    }

private:
    std::mt19937 gen_;
};

inline int span_rank(const std::vector<Element>& es) {
    RatMatrix m(static_cast<int>(es.size()), 4);
    for (size_t i = 0; i < es.size(); ++i) {
        auto v = cl2::coefficient_vector(es[i]);
        for (int c = 0; c < 4; ++c) m.at(static_cast<int>(i), c) = v[static_cast<size_t>(c)];
    }
    return m.rank();
}

inline bool same_span(const std::vector<Element>& xs,
                      const std::vector<Element>& ys) {
    int rx = span_rank(xs);
    if (rx != span_rank(ys)) return false;
    std::vector<Element> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    return span_rank(all) == rx;
}

inline Element elem(long a0, long a1, long a2, long a3) {
    return Element::from_rationals(a0, a1, a2, a3);
}

}  // namespace cl2test

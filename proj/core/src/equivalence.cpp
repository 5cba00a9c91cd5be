#include "cl2/equivalence.hpp"

#include "cl2/errors.hpp"

#include <stdexcept>

namespace cl2 {

Element CanonicalForm::element() const {
    switch (kind) {
        case CanonicalKind::Central:
            return Element(Scalar(a0));
        case CanonicalKind::PosG:
            return Element(Scalar(a0), Scalar(), Scalar::sqrt_of(g), Scalar());
        case CanonicalKind::NegG:
            return Element(Scalar(a0), Scalar(), Scalar(),
                           Scalar::sqrt_of(Rational(-g)));
        case CanonicalKind::ZeroG:
            return Element(Scalar(a0), Scalar(), Scalar(1), Scalar(1));
    }
    throw std::logic_error("CanonicalForm::element: bad kind");
}

std::pair<CanonicalForm, Witness> canonical(const Element& a) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();

    CanonicalForm form;
    form.a0 = a0;
    Witness w;
    if (is_central(a)) {
        form.kind = CanonicalKind::Central;
        form.g = 0;
        w.u = Element(Scalar(1));
        w.h = Scalar(1);
        return {form, w};
    }

    Rational g = g_map(a).as_rational();
    form.g = g;
    if (sgn(g) < 0) {
        form.kind = CanonicalKind::NegG;
        Scalar s = Scalar::sqrt_of(Rational(-g));
        if (sgn(a3) <= 0) {
            w.u = Element(Scalar(a2), Scalar(a3) - s, Scalar(), Scalar(a1));
        } else {
            w.u = Element(Scalar(a3) + s, Scalar(a2), -Scalar(a1), Scalar());
        }
    } else if (sgn(g) > 0) {
        form.kind = CanonicalKind::PosG;
        Scalar t = Scalar::sqrt_of(g);
        if (sgn(a2) <= 0) {
            w.u = Element(Scalar(a3), Scalar(a2) - t, -Scalar(a1), Scalar());
        } else {
            w.u = Element(Scalar(a2) + t, Scalar(a3), Scalar(), Scalar(a1));
        }
    } else {
        form.kind = CanonicalKind::ZeroG;
        if (a2 != a3) {
            w.u = Element(Scalar(), Scalar(a1), Scalar(Rational(a2 + 1)),
                          Scalar(Rational(a3 + 1)));
        } else {
            // G = 0 with a2 == a3 forces a1 == 0; a2 != 0 since a is not
            // central, so H(u) = 4 a2 stays nonzero.
            w.u = Element(Scalar(Rational(a2 + 1)), Scalar(Rational(a2 - 1)),
                          Scalar(), Scalar());
        }
    }
    w.h = h_map(w.u);
    if (w.h.is_zero() || a * w.u != w.u * form.element()) {
        throw std::logic_error("canonical: witness verification failed");
    }
    return {form, w};
}

bool is_similar(const Element& a, const Element& b) {
    if (is_central(a) || is_central(b)) {
        return a == b;
    }
    return cre(a) == cre(b) && g_map(a) == g_map(b);
}

Witness similarity_witness(const Element& a, const Element& b) {
    if (!is_similar(a, b)) {
        throw NotSimilarError("similarity_witness: " + to_string(a) + " and " +
                              to_string(b) + " are not similar");
    }
    auto [form_a, wa] = canonical(a);
    auto [form_b, wb] = canonical(b);
    // a u_a = u_a k and b u_b = u_b k share the representative k, so
    // u = u_a u_b^{-1} conjugates a onto b.
    Witness w;
    w.u = wa.u * inverse(wb.u);
    w.h = h_map(w.u);
    if (w.h.is_zero() || a * w.u != w.u * b) {
        throw std::logic_error("similarity_witness: verification failed");
    }
    return w;
}

bool is_pseudosimilar(const Element& a, const Element& b) {
    Element c = conj(a) + b;
    if (c.is_zero()) return true;
    return h_map(a) == h_map(b) && !h_map(c).is_zero();
}

Witness pseudosimilarity_witness(const Element& a, const Element& b) {
    if (!is_pseudosimilar(a, b)) {
        throw NotPseudosimilarError("pseudosimilarity_witness: " + to_string(a) +
                                    " and " + to_string(b) +
                                    " are not pseudosimilar");
    }
    Witness w;
    Element c = conj(a) + b;
    if (!c.is_zero()) {
        w.u = c;
    } else if (a.is_zero()) {
        w.u = Element(Scalar(1));
    } else {
        // b = -conj(a): one of these always has H != 0 for nonzero a.
        const Element candidates[3] = {
            Element(a.coeff(3), Scalar(), Scalar(), a.coeff(0)),
            Element(Scalar(), a.coeff(3), Scalar(), a.coeff(1)),
            Element(Scalar(), Scalar(), a.coeff(3), a.coeff(2)),
        };
        for (const Element& u : candidates) {
            if (!h_map(u).is_zero()) {
                w.u = u;
                break;
            }
        }
    }
    w.h = h_map(w.u);
    if (w.h.is_zero() || a * w.u != conj(w.u) * b) {
        throw std::logic_error("pseudosimilarity_witness: verification failed");
    }
    return w;
}

std::string to_string(CanonicalKind kind) {
    switch (kind) {
        case CanonicalKind::PosG: return "pos-g";
        case CanonicalKind::NegG: return "neg-g";
        case CanonicalKind::ZeroG: return "zero-g";
        case CanonicalKind::Central: return "central";
    }
    return "unknown";
}

}  // namespace cl2

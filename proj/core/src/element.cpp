#include "cl2/element.hpp"

#include "cl2/errors.hpp"

#include <ostream>
#include <stdexcept>

namespace cl2 {

namespace {

struct BasisProduct {
    int index;
    int sign;
};

// Products e_i * e_j of the basis {1, e1, e2, e3 = e1e2}.
constexpr BasisProduct kBasisTable[4][4] = {
    {{0, +1}, {1, +1}, {2, +1}, {3, +1}},
    {{1, +1}, {0, +1}, {3, +1}, {2, +1}},
    {{2, +1}, {3, -1}, {0, +1}, {1, -1}},
    {{3, +1}, {2, -1}, {1, +1}, {0, -1}},
};

}  // namespace

Element::Element(Scalar a0, Scalar a1, Scalar a2, Scalar a3)
    : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

Element Element::from_rationals(const Rational& a0, const Rational& a1,
                                const Rational& a2, const Rational& a3) {
    return Element(Scalar(a0), Scalar(a1), Scalar(a2), Scalar(a3));
}

Element Element::basis(int i) {
    Element e;
    e.coeff(i) = Scalar(1);
    return e;
}

bool Element::is_zero() const {
    for (const Scalar& s : c_) {
        if (!s.is_zero()) return false;
    }
    return true;
}

bool Element::has_rational_coefficients() const {
    for (const Scalar& s : c_) {
        if (!s.is_rational()) return false;
    }
    return true;
}

std::array<Rational, 4> Element::rational_coefficients() const {
    return {c_[0].as_rational(), c_[1].as_rational(), c_[2].as_rational(),
            c_[3].as_rational()};
}

Element Element::operator-() const {
    Element out;
    for (int i = 0; i < 4; ++i) out.c_[i] = -c_[i];
    return out;
}

Element& Element::operator+=(const Element& o) {
    for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element out;
    for (int i = 0; i < 4; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.c_[j].is_zero()) continue;
            const BasisProduct& p = kBasisTable[i][j];
            Scalar term = a.c_[i] * b.c_[j];
            out.c_[p.index] += p.sign < 0 ? -term : term;
        }
    }
    return out;
}

Element operator*(const Scalar& s, Element a) {
    for (int i = 0; i < 4; ++i) a.c_[i] *= s;
    return a;
}

Element conj(const Element& a) {
    return Element(a.coeff(0), -a.coeff(1), -a.coeff(2), -a.coeff(3));
}

Element prime(const Element& a) {
    return Element(a.coeff(0), a.coeff(1), a.coeff(2), -a.coeff(3));
}

Scalar cre(const Element& a) {
    return a.coeff(0);
}

Element cim(const Element& a) {
    return Element(Scalar(), a.coeff(1), a.coeff(2), a.coeff(3));
}

Scalar h_map(const Element& a) {
    return a.coeff(0) * a.coeff(0) - a.coeff(1) * a.coeff(1) -
           a.coeff(2) * a.coeff(2) + a.coeff(3) * a.coeff(3);
}

Scalar g_map(const Element& a) {
    return a.coeff(1) * a.coeff(1) + a.coeff(2) * a.coeff(2) -
           a.coeff(3) * a.coeff(3);
}

bool is_zero_divisor(const Element& a) {
    return !a.is_zero() && h_map(a).is_zero();
}

bool is_central(const Element& a) {
    return a.coeff(1).is_zero() && a.coeff(2).is_zero() && a.coeff(3).is_zero();
}

Element inverse(const Element& a) {
    Scalar h = h_map(a);
    if (h.is_zero()) {
        throw ZeroDivisorError(a.is_zero()
                                   ? "inverse: H(a) = 0 (a = 0)"
                                   : "inverse: H(a) = 0 (a is a zero divisor)");
    }
    return h.inverse() * conj(a);
}

ComplexSplit split(const Element& a) {
    return {Element(a.coeff(0), Scalar(), Scalar(), a.coeff(3)),
            Element(a.coeff(2), Scalar(), Scalar(), a.coeff(1))};
}

Element reconstruct(const ComplexSplit& s) {
    return s.z1 + s.z2 * Element::basis(2);
}

Scalar modulus_sq(const Element& z) {
    if (!z.coeff(1).is_zero() || !z.coeff(2).is_zero()) {
        throw std::invalid_argument("modulus_sq: element not in span{1, e3}");
    }
    return z.coeff(0) * z.coeff(0) + z.coeff(3) * z.coeff(3);
}

std::string to_string(const Element& a) {
    if (a.is_zero()) return "0";
    static const char* kBasisName[4] = {"", "e1", "e2", "e3"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        const Scalar& c = a.coeff(i);
        if (c.is_zero()) continue;
        std::string term;
        if (i == 0) {
            term = to_string(c);
        } else if (c.is_rational()) {
            Rational p = c.rational_part();
            if (p == -1) {
                term = "-";
            } else if (p != 1) {
                term = to_string(p);
            }
            term += kBasisName[i];
        } else if (sgn(c.rational_part()) != 0) {
            term = "(" + to_string(c) + ")" + kBasisName[i];
        } else {
            term = to_string(c) + kBasisName[i];
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += term;
        } else {
            out += "+" + term;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Element& a) {
    return os << to_string(a);
}

}  // namespace cl2

#pragma once

#include "cl2/scalar.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace cl2 {

// Element of the real Clifford algebra with two generators e1, e2 satisfying
// e1^2 = e2^2 = 1, e1e2 = -e2e1; e3 denotes the product e1e2 (so e3^2 = -1).
// Coefficients are exact scalars, rational or of the form p + q*sqrt(r).
class Element {
public:
    Element() = default;
    Element(Scalar a0, Scalar a1 = Scalar(), Scalar a2 = Scalar(),
            Scalar a3 = Scalar());

    static Element from_rationals(const Rational& a0, const Rational& a1,
                                  const Rational& a2, const Rational& a3);
    // basis(0) = 1, basis(1) = e1, basis(2) = e2, basis(3) = e3.
    static Element basis(int i);

    const Scalar& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
    Scalar& coeff(int i) { return c_.at(static_cast<size_t>(i)); }

    bool is_zero() const;
    bool has_rational_coefficients() const;
    // Throws IrrationalCoefficient when some coefficient has a radical part.
    std::array<Rational, 4> rational_coefficients() const;

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& s, Element a);
    friend bool operator==(const Element& a, const Element& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Element& a, const Element& b) {
        return !(a == b);
    }

private:
    std::array<Scalar, 4> c_{};
};

// Conjugation: negates the e1, e2, e3 components.
Element conj(const Element& a);
// Negates the e3 component only; transpose-like on the regular matrices.
Element prime(const Element& a);

// Scalar (central) part a0 and its complement.
Scalar cre(const Element& a);
Element cim(const Element& a);

// H(a) = a0^2 - a1^2 - a2^2 + a3^2 = a*conj(a); multiplicative.
Scalar h_map(const Element& a);
// G(a) = a1^2 + a2^2 - a3^2 = -H(cim(a)); similarity invariant.
Scalar g_map(const Element& a);

bool is_zero_divisor(const Element& a);  // a != 0 and H(a) == 0
bool is_central(const Element& a);       // a = a0

// Two-sided inverse conj(a)/H(a); throws ZeroDivisor when H(a) == 0.
Element inverse(const Element& a);

// a = z1 + z2 e2 with z1, z2 in span{1, e3}: z1 = a0 + a3 e3, z2 = a2 + a1 e3.
// span{1, e3} is a copy of the complex numbers, so H(a) = |z1|^2 - |z2|^2.
struct ComplexSplit {
    Element z1;
    Element z2;
};
ComplexSplit split(const Element& a);
Element reconstruct(const ComplexSplit& s);
// |z|^2 for z in span{1, e3}; throws std::invalid_argument otherwise.
Scalar modulus_sq(const Element& z);

std::string to_string(const Element& a);
std::ostream& operator<<(std::ostream& os, const Element& a);

}  // namespace cl2

#pragma once

#include "cl2/element.hpp"

#include <string>
#include <utility>

namespace cl2 {

// Orbit of a rational element under conjugation x -> u^{-1} x u, classified
// by the sign of G(a); the scalar part and G(a) pin the orbit down exactly.
enum class CanonicalKind { PosG, NegG, ZeroG, Central };

struct CanonicalForm {
    CanonicalKind kind;
    Rational a0;  // shared scalar part
    Rational g;   // G(a)

    // The representative: a0 + sqrt(G) e2, a0 + sqrt(-G) e3, a0 + e2 + e3,
    // or the central a0.  Coefficients live in Q(sqrt(|G|)).
    Element element() const;
};

// Conjugator with invertibility certificate: H(u) != 0 exactly.
struct Witness {
    Element u;
    Scalar h;  // h_map(u)
};

// Canonical form of a and a witness u with a u = u * canonical element.
std::pair<CanonicalForm, Witness> canonical(const Element& a);

// a and b are conjugate iff both central and equal, or neither central with
// equal scalar parts and equal G values.
bool is_similar(const Element& a, const Element& b);

// u with u^{-1} a u = b, H(u) != 0; throws NotSimilar when there is none.
Witness similarity_witness(const Element& a, const Element& b);

// a and b are related by a u = conj(u) b for some H(u) != 0 iff
// conj(a) + b == 0, or H(a) == H(b) with H(conj(a) + b) != 0 (zero elements
// included: 0 is pseudosimilar only to 0).
bool is_pseudosimilar(const Element& a, const Element& b);

// u with a u = conj(u) b, H(u) != 0; throws NotPseudosimilar when none.
Witness pseudosimilarity_witness(const Element& a, const Element& b);

std::string to_string(CanonicalKind kind);

}  // namespace cl2

#pragma once

#include "cl2/element.hpp"
#include "cl2/rat_matrix.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cl2 {

// Regular representations on the coefficient column (a0, a1, a2, a3)^T:
// left_matrix(a) * vec(x) = vec(ax) and right_matrix(a) * vec(x) = vec(xa).
// Requires rational coefficients (throws IrrationalCoefficient otherwise).
RatMatrix left_matrix(const Element& a);
RatMatrix right_matrix(const Element& a);

// Coefficient column of a rational element and its inverse.
std::vector<Rational> coefficient_vector(const Element& a);
Element element_of_vector(const std::vector<Rational>& v);

// 2x2 image [[a0+a1, a2+a3], [a2-a3, a0-a1]]; multiplicative with
// det = H(a).
RatMatrix phi_matrix(const Element& a);

// Recover a from a matrix that is exactly left_matrix(a); nullopt if the
// matrix is not of that form.
std::optional<Element> element_of_left_matrix(const RatMatrix& m);

// Exact checks of the defining identities tying the representations to
// conjugation, reversal-by-e3-negation (prime), products and H.  Returns
// true when all hold; failed identity names are appended to failures.
bool structural_identities_check(const Element& a, const Element& b,
                                 std::vector<std::string>* failures = nullptr);

// Eigenvalues center +/- sqrt(radicand), each side with the stated
// multiplicity; radicand < 0 encodes a conjugate complex pair.
struct EigenDescriptor {
    Rational center;
    Rational radicand;
    int multiplicity;

    std::pair<std::complex<double>, std::complex<double>> evaluate() const;
};

// Spectrum of left_matrix(a) and right_matrix(a) (they coincide):
// a0 +/- sqrt(G(a)), each of multiplicity 2.
std::vector<EigenDescriptor> lr_eigen(const Element& a);

// F(a, b) = left_matrix(a) - right_matrix(b); x commutes as ax = xb exactly
// when vec(x) is in its null space.
RatMatrix f_matrix(const Element& a, const Element& b);

// One eigenvalue offset + sign_a*sqrt(g_a) + sign_b*sqrt(g_b) of F(a, b),
// with offset = a0 - b0, g_a = G(a), g_b = G(b).
struct FEigenvalue {
    Rational offset;
    Rational g_a;
    Rational g_b;
    int sign_a;
    int sign_b;

    std::complex<double> evaluate() const;
};

// The four eigenvalues of F(a, b), sign order (+,+), (+,-), (-,+), (-,-).
std::vector<FEigenvalue> f_eigen(const Element& a, const Element& b);
int f_rank(const Element& a, const Element& b);

// W(a, b) = left_matrix(a) - right_matrix(b) * diag(1,-1,-1,-1); x solves
// ax = conj(x) b exactly when vec(x) is in its null space.
RatMatrix w_matrix(const Element& a, const Element& b);

// Spectrum of W(a, b) as two descriptors of multiplicity 1 each:
// a0 +/- sqrt(G(a) + H(b)) and
// a0 + b0 +/- sqrt(G(a) + G(b) + 2(-a1b1 - a2b2 + a3b3)).
std::vector<EigenDescriptor> w_eigen(const Element& a, const Element& b);

// det W(a, b), computed from the matrix (the closed form
// (H(a) - H(b)) * H(conj(a) + b) is enforced by tests).
Rational w_det(const Element& a, const Element& b);

// Rank classification of W(a, b) for nonzero a, b.
enum class WRankKind {
    Rank1Conj,         // H(a) = H(b), conj(a) + b = 0
    Rank3Invertible,   // H(a) = H(b), H(conj(a) + b) != 0
    Rank3ZeroDivisor,  // H(a) = H(b), conj(a) + b a nonzero zero divisor
    Rank3Mixed,        // H(a) != H(b), conj(a) + b a nonzero zero divisor
    FullRank,
};
struct WRankCase {
    WRankKind kind;
    int rank;           // exact rank from row reduction
    int expected_rank;  // rank the classification predicts
};
WRankCase w_rank_case(const Element& a, const Element& b);

std::string to_string(WRankKind kind);

}  // namespace cl2

#include "cl2/solvers.hpp"

#include "cl2/matrix_rep.hpp"
#include "cl2/mp_inverse.hpp"

#include <stdexcept>

namespace cl2 {

namespace {

// Basis of the column space of a projector: its columns at the pivot
// positions of rref(P) are independent and span range(P).
std::vector<Element> projector_column_basis(const RatMatrix& p) {
    std::vector<int> pivots;
    p.rref(&pivots);
    std::vector<Element> basis;
    for (int c : pivots) {
        basis.push_back(Element::from_rationals(p.at(0, c), p.at(1, c),
                                                p.at(2, c), p.at(3, c)));
    }
    return basis;
}

std::vector<Element> null_space_basis(const RatMatrix& m) {
    std::vector<Element> basis;
    for (const auto& v : m.null_space()) {
        basis.push_back(element_of_vector(v));
    }
    return basis;
}

}  // namespace

Element SolutionSet::combine(const std::vector<Rational>& params) const {
    if (params.size() != homogeneous_basis.size()) {
        throw std::invalid_argument("SolutionSet::combine: parameter count");
    }
    Element x = particular;
    for (size_t i = 0; i < params.size(); ++i) {
        x += Scalar(params[i]) * homogeneous_basis[i];
    }
    return x;
}

SolutionSet solve_axb(const Element& a, const Element& b, const Element& d) {
    (void)d.rational_coefficients();
    Element ap = mp(a);
    Element bp = mp(b);

    SolutionSet out;
    out.solvable = (a * ap * d * bp * b == d);
    if (out.solvable) {
        out.particular = ap * d * bp;
    }
    RatMatrix p = RatMatrix::identity(4) -
                  left_matrix(ap * a) * right_matrix(b * bp);
    out.homogeneous_basis = projector_column_basis(p);
    return out;
}

SolutionSet solve_ax(const Element& a, const Element& d) {
    return solve_axb(a, Element(Scalar(1)), d);
}

SolutionSet solve_xb(const Element& b, const Element& d) {
    return solve_axb(Element(Scalar(1)), b, d);
}

SolutionSet null_right(const Element& a) {
    return solve_ax(a, Element());
}

SolutionSet null_left(const Element& b) {
    return solve_xb(b, Element());
}

SolutionSet solve_sylvester(const Element& a, const Element& b) {
    RatMatrix f = f_matrix(a, b);

    SolutionSet out;
    out.solvable = true;
    bool closed_form = cre(a) == cre(b) && g_map(a) == g_map(b) &&
                       !is_central(a) && !is_central(b);
    if (closed_form) {
        // f has the explicit pseudo inverse
        // (L(prime(a)) - R(prime(b))) / (2 (|cim(a)|^2 + |cim(b)|^2))
        // with |.|^2 the Euclidean norm square of the non-scalar part.
        auto [a0, a1, a2, a3] = a.rational_coefficients();
        auto [b0, b1, b2, b3] = b.rational_coefficients();
        Rational den = 2 * (a1 * a1 + a2 * a2 + a3 * a3 + b1 * b1 + b2 * b2 +
                            b3 * b3);
        RatMatrix fplus = (Rational(1) / den) *
                          (left_matrix(prime(a)) - right_matrix(prime(b)));
        RatMatrix p = RatMatrix::identity(4) - fplus * f;
        out.homogeneous_basis = projector_column_basis(p);
    } else {
        out.homogeneous_basis = null_space_basis(f);
    }
    return out;
}

SolutionSet solve_consylvester(const Element& a, const Element& b) {
    SolutionSet out;
    out.solvable = true;
    out.homogeneous_basis = null_space_basis(w_matrix(a, b));
    return out;
}

}  // namespace cl2

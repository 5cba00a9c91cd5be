#pragma once

#include "cl2/element.hpp"

#include <vector>

namespace cl2 {

// General solution of a linear element equation: every solution is
// particular + sum t_i * homogeneous_basis[i] with rational t_i, and every
// such combination solves the equation.  The basis is always populated (it
// describes the homogeneous equation) even when the flag says unsolvable.
struct SolutionSet {
    bool solvable = false;
    Element particular;
    std::vector<Element> homogeneous_basis;

    int dimension() const { return static_cast<int>(homogeneous_basis.size()); }
    Element combine(const std::vector<Rational>& params) const;
};

// axb = d.  Solvable iff a mp(a) d mp(b) b == d; particular mp(a) d mp(b);
// homogeneous part from the projector E4 - L(mp(a) a) R(b mp(b)).
SolutionSet solve_axb(const Element& a, const Element& b, const Element& d);

// ax = d and xb = d.
SolutionSet solve_ax(const Element& a, const Element& d);
SolutionSet solve_xb(const Element& b, const Element& d);

// All x with ax = 0, respectively xb = 0.
SolutionSet null_right(const Element& a);
SolutionSet null_left(const Element& b);

// ax = xb.  Always solvable (x = 0); when a, b share scalar part and G value
// and neither is central, the homogeneous projector comes from the
// closed-form pseudo inverse of F(a, b), otherwise from row reduction.
SolutionSet solve_sylvester(const Element& a, const Element& b);

// ax = conj(x) b, via the null space of W(a, b).
SolutionSet solve_consylvester(const Element& a, const Element& b);

}  // namespace cl2

#include <doctest.h>

#include <cl2/element.hpp>
#include <cl2/matrix_rep.hpp>
#include <cl2/mp_inverse.hpp>
#include <cl2/rat_matrix.hpp>
#include <cl2/solvers.hpp>

#include "support.hpp"

using cl2::Element;
using cl2::RatMatrix;
using cl2::Rational;
using cl2::Scalar;
using cl2test::elem;

namespace {

Scalar quarter() { return Scalar(cl2::make_rational(1, 4)); }

}  // namespace

TEST_SUITE_BEGIN("solvers");

TEST_CASE("two-sided equation, solvable worked example") {
    // a x b = d with a = 1 + e2, b = e1 + e3, d = 1 + e2.
    Element a = elem(1, 0, 1, 0);
    Element b = elem(0, 1, 0, 1);
    Element d = elem(1, 0, 1, 0);

    CHECK(cl2::mp(a) == quarter() * elem(1, 0, 1, 0));
    CHECK(cl2::mp(b) == quarter() * elem(0, 1, 0, -1));
    Element half_1_e2 = Scalar(cl2::make_rational(1, 2)) * elem(1, 0, 1, 0);
    CHECK(a * cl2::mp(a) == half_1_e2);
    CHECK(cl2::mp(a) * a == half_1_e2);
    CHECK(cl2::mp(b) * b == half_1_e2);
    CHECK(b * cl2::mp(b) ==
          Scalar(cl2::make_rational(1, 2)) * elem(1, 0, -1, 0));

    auto sol = cl2::solve_axb(a, b, d);
    CHECK(sol.solvable);
    CHECK(sol.particular == quarter() * elem(0, 1, 0, -1));
    CHECK(a * sol.particular * b == d);
    CHECK(sol.dimension() == 3);
    for (const auto& h : sol.homogeneous_basis) {
        CHECK((a * h * b).is_zero());
    }
    CHECK(a * sol.combine({cl2::make_rational(1, 3), cl2::make_rational(-2),
                           cl2::make_rational(5, 7)}) *
              b ==
          d);
    CHECK_THROWS_AS(sol.combine({Rational(1)}), std::invalid_argument);
}

TEST_CASE("one-sided equations, worked examples") {
    // (1 - e2) x = 1 + e1 - e2 + e3 has particular d / 2.
    Element a = elem(1, 0, -1, 0);
    Element d = elem(1, 1, -1, 1);
    auto sol = cl2::solve_ax(a, d);
    CHECK(sol.solvable);
    CHECK(sol.particular == Scalar(cl2::make_rational(1, 2)) * d);
    CHECK(a * sol.particular == d);
    CHECK(sol.dimension() == 2);

    // Right null space of 1 + e1 + e2 + e3 is two-dimensional.
    Element z = elem(1, 1, 1, 1);
    CHECK(cl2::mp(z) * z == Scalar(cl2::make_rational(1, 2)) * elem(1, 0, 1, 0));
    auto nul = cl2::null_right(z);
    CHECK(nul.solvable);
    CHECK(nul.particular.is_zero());
    CHECK(nul.dimension() == 2);
    for (const auto& h : nul.homogeneous_basis) CHECK((z * h).is_zero());

    // x (e2 + e3) = 1 - e1 has particular (e2 - e3) / 2.
    Element b = elem(0, 0, 1, 1);
    Element d2 = elem(1, -1, 0, 0);
    auto xb = cl2::solve_xb(b, d2);
    CHECK(xb.solvable);
    CHECK(xb.particular == Scalar(cl2::make_rational(1, 2)) * elem(0, 0, 1, -1));
    CHECK(xb.particular * b == d2);

    // b b^+ for b = 2 + e1 + 2e2 + e3.
    Element b5 = elem(2, 1, 2, 1);
    CHECK(b5 * cl2::mp(b5) ==
          Element(Scalar(cl2::make_rational(1, 2)),
                  Scalar(cl2::make_rational(2, 5)),
                  Scalar(cl2::make_rational(3, 10)), Scalar()));

    // An unsolvable instance: (1 + e2) x = 1 (a is a zero divisor, 1 is not
    // in its image).
    auto bad = cl2::solve_ax(elem(1, 0, 1, 0), elem(1, 0, 0, 0));
    CHECK(!bad.solvable);
    CHECK(bad.dimension() == 2);
}

TEST_CASE("random two-sided equations against row reduction") {
    cl2test::Rng rng(601);
    for (int i = 0; i < 120; ++i) {
        Element a = (i % 3 == 0) ? rng.zero_divisor() : rng.element();
        Element b = (i % 4 == 0) ? rng.zero_divisor() : rng.element();
        Element d = rng.element();

        auto sol = cl2::solve_axb(a, b, d);

        // Independent route: vectorize L(a) R(b) x = d.
        RatMatrix m = cl2::left_matrix(a) * cl2::right_matrix(b);
        auto lin = cl2::solve_linear(m, cl2::coefficient_vector(d));
        CHECK(sol.solvable == lin.solvable);
        CHECK(sol.dimension() == 4 - m.rank());

        if (sol.solvable) {
            CHECK(a * sol.particular * b == d);
            std::vector<Rational> params;
            for (int k = 0; k < sol.dimension(); ++k)
                params.push_back(rng.rational());
            CHECK(a * sol.combine(params) * b == d);
        }
        for (const auto& h : sol.homogeneous_basis)
            CHECK((a * h * b).is_zero());

        // The homogeneous spans agree with the row-reduction null space.
        std::vector<Element> null_elems;
        for (const auto& v : lin.homogeneous)
            null_elems.push_back(cl2::element_of_vector(v));
        CHECK(cl2test::same_span(sol.homogeneous_basis, null_elems));
    }
}

TEST_CASE("commuting equation ax = xb") {
    // Closed-form pseudo inverse branch on the worked pair 1 - e3, 1 + e3.
    Element a = elem(1, 0, 0, -1);
    Element b = elem(1, 0, 0, 1);
    auto sol = cl2::solve_sylvester(a, b);
    CHECK(sol.solvable);
    CHECK(sol.particular.is_zero());
    CHECK(sol.dimension() == 2);
    for (const auto& h : sol.homogeneous_basis) CHECK(a * h == h * b);

    cl2test::Rng rng(602);
    for (int i = 0; i < 100; ++i) {
        Element x = rng.noncentral();
        Element y =
            (i % 2 == 0) ? rng.g_preserving_partner(x) : rng.element();
        auto s = cl2::solve_sylvester(x, y);
        CHECK(s.solvable);
        CHECK(s.particular.is_zero());
        for (const auto& h : s.homogeneous_basis) CHECK(x * h == h * y);
        CHECK(s.dimension() == 4 - cl2::f_rank(x, y));
        std::vector<Element> null_elems;
        for (const auto& v : cl2::f_matrix(x, y).null_space())
            null_elems.push_back(cl2::element_of_vector(v));
        CHECK(cl2test::same_span(s.homogeneous_basis, null_elems));
    }
}

TEST_CASE("conjugate-commuting equation ax = conj(x) b") {
    cl2test::Rng rng(603);
    for (int i = 0; i < 100; ++i) {
        Element a = rng.element();
        Element b = (i % 5 == 0) ? -cl2::conj(a) : rng.element();
        auto s = cl2::solve_consylvester(a, b);
        CHECK(s.solvable);
        CHECK(s.particular.is_zero());
        for (const auto& h : s.homogeneous_basis)
            CHECK(a * h == cl2::conj(h) * b);
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(s.dimension() == 4 - cl2::w_rank_case(a, b).rank);
        }
    }
}

TEST_SUITE_END();

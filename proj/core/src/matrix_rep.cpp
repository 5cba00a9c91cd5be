#include "cl2/matrix_rep.hpp"

#include <cmath>
#include <stdexcept>

namespace cl2 {

namespace {

RatMatrix d_sign() {
    return RatMatrix::diagonal({1, -1, -1, 1});
}

RatMatrix u_sign() {
    return RatMatrix::diagonal({1, -1, -1, -1});
}

std::complex<double> complex_sqrt(const Rational& x) {
    double v = to_double(x);
    if (v >= 0) return {std::sqrt(v), 0.0};
    return {0.0, std::sqrt(-v)};
}

}  // namespace

RatMatrix left_matrix(const Element& a) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();
    return RatMatrix{{a0, a1, a2, -a3},
                     {a1, a0, a3, -a2},
                     {a2, -a3, a0, a1},
                     {a3, -a2, a1, a0}};
}

RatMatrix right_matrix(const Element& a) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();
    return RatMatrix{{a0, a1, a2, -a3},
                     {a1, a0, -a3, a2},
                     {a2, a3, a0, -a1},
                     {a3, a2, -a1, a0}};
}

std::vector<Rational> coefficient_vector(const Element& a) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();
    return {a0, a1, a2, a3};
}

Element element_of_vector(const std::vector<Rational>& v) {
    if (v.size() != 4) {
        throw std::invalid_argument("element_of_vector: need 4 coefficients");
    }
    return Element::from_rationals(v[0], v[1], v[2], v[3]);
}

RatMatrix phi_matrix(const Element& a) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();
    return RatMatrix{{a0 + a1, a2 + a3}, {a2 - a3, a0 - a1}};
}

std::optional<Element> element_of_left_matrix(const RatMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) return std::nullopt;
    Element candidate = Element::from_rationals(m.at(0, 0), m.at(1, 0),
                                                m.at(2, 0), m.at(3, 0));
    if (left_matrix(candidate) != m) return std::nullopt;
    return candidate;
}

bool structural_identities_check(const Element& a, const Element& b,
                                 std::vector<std::string>* failures) {
    const RatMatrix d = d_sign();
    const RatMatrix la = left_matrix(a);
    const RatMatrix ra = right_matrix(a);
    const RatMatrix lb = left_matrix(b);
    const RatMatrix rb = right_matrix(b);
    const Rational h2 = [&] {
        Rational h = h_map(a).as_rational();
        return Rational(h * h);
    }();

    bool ok = true;
    auto check = [&](bool holds, const char* name) {
        if (!holds) {
            ok = false;
            if (failures) failures->push_back(name);
        }
    };

    check(left_matrix(conj(a)) == d * (la.transpose() * d), "L(conj a) = D L(a)^T D");
    check(right_matrix(conj(a)) == d * (ra.transpose() * d), "R(conj a) = D R(a)^T D");
    check(left_matrix(prime(a)) == la.transpose(), "L(prime a) = L(a)^T");
    check(right_matrix(prime(a)) == ra.transpose(), "R(prime a) = R(a)^T");
    check(left_matrix(a * b) == la * lb, "L(ab) = L(a) L(b)");
    check(right_matrix(a * b) == rb * ra, "R(ab) = R(b) R(a)");
    check(la * rb == rb * la, "L(a) R(b) = R(b) L(a)");
    check(la.determinant() == h2, "det L(a) = H(a)^2");
    check(ra.determinant() == h2, "det R(a) = H(a)^2");
    return ok;
}

std::pair<std::complex<double>, std::complex<double>> EigenDescriptor::evaluate()
    const {
    std::complex<double> c(to_double(center), 0.0);
    std::complex<double> s = complex_sqrt(radicand);
    return {c + s, c - s};
}

std::vector<EigenDescriptor> lr_eigen(const Element& a) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();
    Rational g = canonical(a1 * a1 + a2 * a2 - a3 * a3);
    return {{a0, g, 2}};
}

RatMatrix f_matrix(const Element& a, const Element& b) {
    return left_matrix(a) - right_matrix(b);
}

std::complex<double> FEigenvalue::evaluate() const {
    std::complex<double> v(to_double(offset), 0.0);
    v += double(sign_a) * complex_sqrt(g_a);
    v += double(sign_b) * complex_sqrt(g_b);
    return v;
}

std::vector<FEigenvalue> f_eigen(const Element& a, const Element& b) {
    Rational offset = canonical(a.coeff(0).as_rational() - b.coeff(0).as_rational());
    Rational ga = g_map(a).as_rational();
    Rational gb = g_map(b).as_rational();
    std::vector<FEigenvalue> out;
    for (int sa : {+1, -1}) {
        for (int sb : {+1, -1}) {
            out.push_back({offset, ga, gb, sa, sb});
        }
    }
    return out;
}

int f_rank(const Element& a, const Element& b) {
    return f_matrix(a, b).rank();
}

RatMatrix w_matrix(const Element& a, const Element& b) {
    return left_matrix(a) - right_matrix(b) * u_sign();
}

std::vector<EigenDescriptor> w_eigen(const Element& a, const Element& b) {
    auto [a0, a1, a2, a3] = a.rational_coefficients();
    auto [b0, b1, b2, b3] = b.rational_coefficients();
    Rational ga = g_map(a).as_rational();
    Rational gb = g_map(b).as_rational();
    Rational hb = h_map(b).as_rational();
    Rational cross = canonical(2 * (-a1 * b1 - a2 * b2 + a3 * b3));
    return {{a0, canonical(ga + hb), 1},
            {canonical(a0 + b0), canonical(ga + gb + cross), 1}};
}

Rational w_det(const Element& a, const Element& b) {
    return w_matrix(a, b).determinant();
}

WRankCase w_rank_case(const Element& a, const Element& b) {
    if (a.is_zero() || b.is_zero()) {
        throw std::invalid_argument("w_rank_case: a and b must be nonzero");
    }
    const RatMatrix w = w_matrix(a, b);
    const int rank = w.rank();
    const Scalar ha = h_map(a);
    const Scalar hb = h_map(b);
    const Element c = conj(a) + b;

    WRankKind kind;
    int expected;
    if (ha == hb) {
        if (c.is_zero()) {
            kind = WRankKind::Rank1Conj;
            expected = 1;
        } else if (!h_map(c).is_zero()) {
            kind = WRankKind::Rank3Invertible;
            expected = 3;
        } else {
            kind = WRankKind::Rank3ZeroDivisor;
            expected = 3;
        }
    } else if (!c.is_zero() && h_map(c).is_zero()) {
        kind = WRankKind::Rank3Mixed;
        expected = 3;
    } else {
        kind = WRankKind::FullRank;
        expected = 4;
    }
    return {kind, rank, expected};
}

std::string to_string(WRankKind kind) {
    switch (kind) {
        case WRankKind::Rank1Conj: return "rank1-conj";
        case WRankKind::Rank3Invertible: return "rank3-invertible";
        case WRankKind::Rank3ZeroDivisor: return "rank3-zero-divisor";
        case WRankKind::Rank3Mixed: return "rank3-mixed";
        case WRankKind::FullRank: return "full-rank";
    }
    return "unknown";
}

}  // namespace cl2

#include "cl2/rational.hpp"

#include <stdexcept>

namespace cl2 {

Rational make_rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("make_rational: zero denominator");
    }
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

double to_double(const Rational& q) {
    return q.get_d();
}

SqrtDecomposition decompose_sqrt(const Rational& x) {
    Rational q = canonical(x);
    if (sgn(q) < 0) {
        throw std::domain_error("decompose_sqrt: negative argument");
    }
    if (sgn(q) == 0) {
        return {Rational(0), Rational(1)};
    }
    // sqrt(n/d) = sqrt(n*d) / d
    mpz_class m = q.get_num() * q.get_den();
    mpz_class s = 1;
    auto extract = [&](const mpz_class& p) {
        mpz_class p2 = p * p;
        while (mpz_divisible_p(m.get_mpz_t(), p2.get_mpz_t()) != 0) {
            m /= p2;
            s *= p;
        }
    };
    extract(2);
    // Ascending trial division: composite squares are already gone by the
    // time we reach them, so iterating over odd numbers suffices.
    for (mpz_class p = 3; p * p <= m && p < 65536; p += 2) {
        extract(p);
    }
    if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
        s *= root;
        m = 1;
    }
    Rational coefficient(s, q.get_den());
    coefficient.canonicalize();
    return {coefficient, Rational(m)};
}

}  // namespace cl2

#pragma once

#include "cl2/rational.hpp"

#include <iosfwd>
#include <string>

namespace cl2 {

// Exact scalar p + q*sqrt(r) over the rationals.  The radicand r is kept as
// a square-free nonnegative integer and is 0 whenever q == 0, so every value
// has exactly one representation and equality is coefficient-wise.  Mixing
// two distinct nonzero radicands in one operation throws RadicandMismatch;
// within any one computation here a single radicand suffices.
class Scalar {
public:
    Scalar() : p_(0), q_(0), r_(0) {}
    Scalar(const Rational& p) : p_(canonical(p)), q_(0), r_(0) {}
    Scalar(long n) : p_(n), q_(0), r_(0) {}
    Scalar(int n) : p_(n), q_(0), r_(0) {}
    Scalar(const Rational& p, const Rational& q, const Rational& r);

    // sqrt(x) for x >= 0.
    static Scalar sqrt_of(const Rational& x);

    const Rational& rational_part() const { return p_; }
    const Rational& radical_coefficient() const { return q_; }
    const Rational& radicand() const { return r_; }

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_rational() const { return sgn(q_) == 0; }

    // Exact rational value; throws IrrationalCoefficient when q != 0.
    Rational as_rational() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);

    // Multiplicative inverse; throws on zero.
    Scalar inverse() const;

    double to_double() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) {
        return !(a == b);
    }

private:
    void normalize();
    // Unify radicands before a mixed operation; throws RadicandMismatch.
    static Rational merged_radicand(const Scalar& a, const Scalar& b);

    Rational p_, q_, r_;
};

std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace cl2

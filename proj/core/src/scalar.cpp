#include "cl2/scalar.hpp"

#include "cl2/errors.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cl2 {

Scalar::Scalar(const Rational& p, const Rational& q, const Rational& r)
    : p_(canonical(p)), q_(canonical(q)), r_(canonical(r)) {
    if (sgn(r_) < 0) {
        throw std::domain_error("Scalar: negative radicand");
    }
    normalize();
}

Scalar Scalar::sqrt_of(const Rational& x) {
    if (sgn(x) < 0) {
        throw std::domain_error("Scalar::sqrt_of: negative argument");
    }
    return Scalar(Rational(0), Rational(1), x);
}

void Scalar::normalize() {
    if (sgn(q_) == 0) {
        r_ = 0;
        return;
    }
    if (sgn(r_) == 0) {
        q_ = 0;
        return;
    }
    SqrtDecomposition d = decompose_sqrt(r_);
    if (d.radicand == 1) {
        p_ += q_ * d.coefficient;
        q_ = 0;
        r_ = 0;
    } else {
        q_ *= d.coefficient;
        r_ = d.radicand;
    }
}

Rational Scalar::merged_radicand(const Scalar& a, const Scalar& b) {
    if (sgn(a.q_) == 0) return b.r_;
    if (sgn(b.q_) == 0) return a.r_;
    if (a.r_ != b.r_) {
        throw RadicandMismatchError("cannot combine sqrt(" + to_string(a.r_) +
                                    ") with sqrt(" + to_string(b.r_) + ")");
    }
    return a.r_;
}

Rational Scalar::as_rational() const {
    if (!is_rational()) {
        throw IrrationalCoefficientError("scalar " + cl2::to_string(*this) +
                                         " is not rational");
    }
    return p_;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.p_ = -s.p_;
    s.q_ = -s.q_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Rational r = merged_radicand(*this, o);
    p_ += o.p_;
    q_ += o.q_;
    r_ = sgn(q_) == 0 ? Rational(0) : r;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational r = merged_radicand(*this, o);
    Rational p = p_ * o.p_ + q_ * o.q_ * r;
    Rational q = p_ * o.q_ + q_ * o.p_;
    p_ = p;
    q_ = q;
    r_ = sgn(q_) == 0 ? Rational(0) : r;
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) {
        throw std::domain_error("Scalar::inverse: zero");
    }
    // 1/(p + q*sqrt(r)) = (p - q*sqrt(r)) / (p^2 - q^2 r); the denominator
    // cannot vanish for a nonzero value with square-free r.
    Rational den = p_ * p_ - q_ * q_ * r_;
    if (sgn(den) == 0) {
        throw std::logic_error("Scalar::inverse: non-normalized value");
    }
    return Scalar(p_ / den, -q_ / den, r_);
}

double Scalar::to_double() const {
    return cl2::to_double(p_) + cl2::to_double(q_) * std::sqrt(cl2::to_double(r_));
}

std::string to_string(const Scalar& s) {
    if (s.is_rational()) {
        return to_string(s.rational_part());
    }
    std::string out;
    if (sgn(s.rational_part()) != 0) {
        out += to_string(s.rational_part());
        if (sgn(s.radical_coefficient()) > 0) out += "+";
    }
    Rational q = s.radical_coefficient();
    if (q == -1) {
        out += "-";
    } else if (q != 1) {
        out += to_string(q) + "*";
    }
    out += "sqrt(" + to_string(s.radicand()) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << to_string(s);
}

}  // namespace cl2

#include "format.hpp"

#include <cmath>
#include <cstdio>

namespace cl2cli {

std::string render_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string render_complex(std::complex<double> v) {
    if (v.imag() == 0.0) {
        return render_double(v.real());
    }
    std::string out;
    if (v.real() != 0.0) {
        out = render_double(v.real());
        if (v.imag() > 0) out += "+";
    }
    if (v.imag() < 0) out += "-";
    out += render_double(std::abs(v.imag())) + "i";
    return out;
}

void RadicalSum::add_rational(const cl2::Rational& q) {
    rational_ += q;
}

void RadicalSum::add_sqrt(const cl2::Rational& coeff, const cl2::Rational& radicand) {
    if (sgn(coeff) == 0 || sgn(radicand) == 0) return;
    if (sgn(radicand) < 0) {
        radicals_[cl2::canonical(radicand)] += coeff;
        return;
    }
    cl2::SqrtDecomposition d = cl2::decompose_sqrt(radicand);
    if (d.radicand == 1) {
        rational_ += coeff * d.coefficient;
    } else {
        radicals_[d.radicand] += coeff * d.coefficient;
    }
}

std::string RadicalSum::text() const {
    std::string out;
    if (sgn(rational_) != 0) {
        out = cl2::to_string(rational_);
    }
    for (const auto& [radicand, coeff] : radicals_) {
        if (sgn(coeff) == 0) continue;
        std::string term;
        cl2::Rational abs_coeff = abs(coeff);
        if (abs_coeff != 1) {
            term = cl2::to_string(abs_coeff) + "*";
        }
        term += "sqrt(" + cl2::to_string(radicand) + ")";
        if (out.empty()) {
            out = (sgn(coeff) < 0 ? "-" : "") + term;
        } else {
            out += (sgn(coeff) < 0 ? "-" : "+") + term;
        }
    }
    return out.empty() ? "0" : out;
}

std::complex<double> RadicalSum::value() const {
    std::complex<double> v(cl2::to_double(rational_), 0.0);
    for (const auto& [radicand, coeff] : radicals_) {
        double r = cl2::to_double(radicand);
        double c = cl2::to_double(coeff);
        if (r >= 0) {
            v += std::complex<double>(c * std::sqrt(r), 0.0);
        } else {
            v += std::complex<double>(0.0, c * std::sqrt(-r));
        }
    }
    return v;
}

std::vector<RadicalSum> resolve_eigen(const std::vector<cl2::EigenDescriptor>& ds) {
    std::vector<RadicalSum> out;
    for (const auto& d : ds) {
        for (int sign : {+1, -1}) {
            for (int m = 0; m < d.multiplicity; ++m) {
                RadicalSum s;
                s.add_rational(d.center);
                s.add_sqrt(sign, d.radicand);
                out.push_back(s);
            }
        }
    }
    return out;
}

std::vector<RadicalSum> resolve_eigen(const std::vector<cl2::FEigenvalue>& vs) {
    std::vector<RadicalSum> out;
    for (const auto& v : vs) {
        RadicalSum s;
        s.add_rational(v.offset);
        s.add_sqrt(v.sign_a, v.g_a);
        s.add_sqrt(v.sign_b, v.g_b);
        out.push_back(s);
    }
    return out;
}

}  // namespace cl2cli

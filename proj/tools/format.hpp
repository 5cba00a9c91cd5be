#pragma once

#include <cl2/element.hpp>
#include <cl2/matrix_rep.hpp>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace cl2cli {

std::string render_double(double v);                 // %.12g
std::string render_complex(std::complex<double> v);  // "a", "bi" or "a+bi"

// Exact sum rational + sum_k coeff_k * sqrt(radicand_k) for eigenvalue
// display.  Nonnegative radicands are normalized (square factors folded,
// perfect squares turned rational); negative radicands are kept verbatim.
class RadicalSum {
public:
    void add_rational(const cl2::Rational& q);
    void add_sqrt(const cl2::Rational& coeff, const cl2::Rational& radicand);

    std::string text() const;
    std::complex<double> value() const;

private:
    cl2::Rational rational_ = 0;
    std::map<cl2::Rational, cl2::Rational> radicals_;  // radicand -> coeff
};

// Expand descriptors into one entry per eigenvalue (multiplicity honored).
std::vector<RadicalSum> resolve_eigen(const std::vector<cl2::EigenDescriptor>& ds);
std::vector<RadicalSum> resolve_eigen(const std::vector<cl2::FEigenvalue>& vs);

}  // namespace cl2cli

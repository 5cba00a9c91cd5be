#pragma once

#include "cl2/rational.hpp"

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace cl2 {

// Dense matrix over the exact rationals.  Sized for the 4x4 / 2x2 work this
// library does; all eliminations are fraction-free-correct by construction
// since every entry stays an exact Rational.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols);
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(int n);
    static RatMatrix diagonal(const std::vector<Rational>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c);
    const Rational& at(int r, int c) const;

    RatMatrix transpose() const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, RatMatrix a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) {
        return !(a == b);
    }

    // Reduced row echelon form; pivot_cols (if given) receives the pivot
    // column indices in order.
    RatMatrix rref(std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;
    Rational determinant() const;           // square only
    RatMatrix inverse() const;              // throws std::domain_error if singular
    bool is_zero() const;

    // Basis of the right null space {x : Mx = 0}, one vector per free column.
    std::vector<std::vector<Rational>> null_space() const;

    std::vector<Rational> apply(const std::vector<Rational>& x) const;

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// Full-rank factorization M = F * G with F the pivot columns of M and G the
// nonzero rows of rref(M).  rank 0 gives empty factors.
struct FullRankFactorization {
    RatMatrix f;
    RatMatrix g;
    int rank;
};
FullRankFactorization full_rank_factorization(const RatMatrix& m);

// Moore-Penrose inverse via X = G^T (F^T M G^T)^{-1} F^T; the zero matrix
// maps to the zero matrix of transposed shape.  Independent of any
// closed-form route, so it doubles as a cross-check oracle.
RatMatrix mp_oracle(const RatMatrix& m);

// Gaussian solution of A x = rhs with exact solvability decision.
struct LinearSolution {
    bool solvable = false;
    std::vector<Rational> particular;                 // empty when unsolvable
    std::vector<std::vector<Rational>> homogeneous;   // null-space basis of A
};
LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rational>& rhs);

std::string to_string(const RatMatrix& m);
std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace cl2

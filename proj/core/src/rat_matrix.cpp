#include "cl2/rat_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace cl2 {

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("RatMatrix: negative dimension");
    }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RatMatrix(static_cast<int>(rows.size()),
                rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw std::invalid_argument("RatMatrix: ragged initializer");
        }
        int c = 0;
        for (const Rational& v : row) at(r, c++) = canonical(v);
        ++r;
    }
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& entries) {
    RatMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (int i = 0; i < m.rows(); ++i) m.at(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

Rational& RatMatrix::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw std::out_of_range("RatMatrix::at");
    }
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) +
                 static_cast<size_t>(c)];
}

const Rational& RatMatrix::at(int r, int c) const {
    return const_cast<RatMatrix*>(this)->at(r, c);
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("RatMatrix: shape mismatch in +");
    }
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
        throw std::invalid_argument("RatMatrix: shape mismatch in -");
    }
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("RatMatrix: shape mismatch in *");
    }
    RatMatrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (sgn(aik) == 0) continue;
            for (int j = 0; j < b.cols_; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

RatMatrix operator*(const Rational& s, RatMatrix a) {
    for (Rational& v : a.data_) v *= s;
    return a;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RatMatrix RatMatrix::rref(std::vector<int>* pivot_cols) const {
    RatMatrix m(*this);
    if (pivot_cols) pivot_cols->clear();
    int pr = 0;
    for (int c = 0; c < cols_ && pr < rows_; ++c) {
        int pivot = -1;
        for (int r = pr; r < rows_; ++r) {
            if (sgn(m.at(r, c)) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != pr) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(pr, j));
        }
        Rational inv = 1 / m.at(pr, c);
        for (int j = c; j < cols_; ++j) m.at(pr, j) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == pr || sgn(m.at(r, c)) == 0) continue;
            Rational f = m.at(r, c);
            for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(pr, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++pr;
    }
    return m;
}

int RatMatrix::rank() const {
    std::vector<int> pivots;
    rref(&pivots);
    return static_cast<int>(pivots.size());
}

Rational RatMatrix::determinant() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("RatMatrix::determinant: not square");
    }
    RatMatrix m(*this);
    Rational det = 1;
    for (int c = 0; c < cols_; ++c) {
        int pivot = -1;
        for (int r = c; r < rows_; ++r) {
            if (sgn(m.at(r, c)) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = -det;
        }
        det *= m.at(c, c);
        for (int r = c + 1; r < rows_; ++r) {
            if (sgn(m.at(r, c)) == 0) continue;
            Rational f = m.at(r, c) / m.at(c, c);
            for (int j = c; j < cols_; ++j) m.at(r, j) -= f * m.at(c, j);
        }
    }
    return det;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) {
        throw std::invalid_argument("RatMatrix::inverse: not square");
    }
    RatMatrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    std::vector<int> pivots;
    RatMatrix red = aug.rref(&pivots);
    if (static_cast<int>(pivots.size()) < rows_ || pivots[static_cast<size_t>(rows_) - 1] >= cols_) {
        throw std::domain_error("RatMatrix::inverse: singular matrix");
    }
    RatMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = red.at(r, cols_ + c);
    return out;
}

bool RatMatrix::is_zero() const {
    for (const Rational& v : data_) {
        if (sgn(v) != 0) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> RatMatrix::null_space() const {
    std::vector<int> pivots;
    RatMatrix red = rref(&pivots);
    std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        std::vector<Rational> x(static_cast<size_t>(cols_), Rational(0));
        x[static_cast<size_t>(f)] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            x[static_cast<size_t>(pivots[i])] = -red.at(static_cast<int>(i), f);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != cols_) {
        throw std::invalid_argument("RatMatrix::apply: size mismatch");
    }
    std::vector<Rational> y(static_cast<size_t>(rows_), Rational(0));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) {
            y[static_cast<size_t>(r)] += at(r, c) * x[static_cast<size_t>(c)];
        }
    }
    return y;
}

FullRankFactorization full_rank_factorization(const RatMatrix& m) {
    std::vector<int> pivots;
    RatMatrix red = m.rref(&pivots);
    int r = static_cast<int>(pivots.size());
    RatMatrix f(m.rows(), r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < m.rows(); ++i) f.at(i, j) = m.at(i, pivots[static_cast<size_t>(j)]);
    RatMatrix g(r, m.cols());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < m.cols(); ++j) g.at(i, j) = red.at(i, j);
    return {std::move(f), std::move(g), r};
}

RatMatrix mp_oracle(const RatMatrix& m) {
    FullRankFactorization fr = full_rank_factorization(m);
    if (fr.rank == 0) {
        return RatMatrix(m.cols(), m.rows());
    }
    RatMatrix ft = fr.f.transpose();
    RatMatrix gt = fr.g.transpose();
    RatMatrix core = ft * m * gt;  // r x r, invertible for M = FG
    return gt * core.inverse() * ft;
}

LinearSolution solve_linear(const RatMatrix& a, const std::vector<Rational>& rhs) {
    if (static_cast<int>(rhs.size()) != a.rows()) {
        throw std::invalid_argument("solve_linear: rhs size mismatch");
    }
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = rhs[static_cast<size_t>(r)];
    }
    std::vector<int> pivots;
    RatMatrix red = aug.rref(&pivots);
    LinearSolution sol;
    sol.homogeneous = a.null_space();
    for (int c : pivots) {
        if (c == a.cols()) return sol;  // row [0 ... 0 | 1]: inconsistent
    }
    sol.solvable = true;
    sol.particular.assign(static_cast<size_t>(a.cols()), Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        sol.particular[static_cast<size_t>(pivots[i])] = red.at(static_cast<int>(i), a.cols());
    }
    return sol;
}

std::string to_string(const RatMatrix& m) {
    std::string out = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r > 0) out += "; ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c > 0) out += ", ";
            out += to_string(m.at(r, c));
        }
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
    return os << to_string(m);
}

}  // namespace cl2

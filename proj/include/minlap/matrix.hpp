#pragma once

// Dense matrices over an exact field, row major. Sizes in this project stay
// single digit, so no effort is spent on asymptotics.

#include <stdexcept>
#include <vector>

#include "minlap/gaussian_rational.hpp"

namespace minlap {

template <class F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {
        if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
    }
    Matrix(int rows, int cols, std::vector<F> entries) : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != static_cast<std::size_t>(rows) * cols) throw domain_error("matrix entry count mismatch");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int k = 0; k < n; ++k) m.at(k, k) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const F& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix out = x;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += y.a_[k];
        return out;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        x.check_same_shape(y);
        Matrix out = x;
        for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= y.a_[k];
        return out;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw domain_error("matrix product shape mismatch");
        Matrix out(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                const F& v = x.at(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j) out.at(i, j) += v * y.at(k, j);
            }
        return out;
    }
    friend Matrix operator*(const F& s, const Matrix& m) {
        Matrix out = m;
        for (F& x : out.a_) x = s * x;
        return out;
    }
    friend std::vector<F> operator*(const Matrix& m, const std::vector<F>& v) {
        if (static_cast<int>(v.size()) != m.cols_) throw domain_error("matrix-vector shape mismatch");
        std::vector<F> out(static_cast<std::size_t>(m.rows_), F(0));
        for (int i = 0; i < m.rows_; ++i)
            for (int j = 0; j < m.cols_; ++j) out[i] += m.at(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix operator-() const {
        Matrix out = *this;
        for (F& x : out.a_) x = -x;
        return out;
    }

    F trace() const {
        F t(0);
        for (int k = 0; k < rows_ && k < cols_; ++k) t += at(k, k);
        return t;
    }

    bool is_zero() const {
        for (const F& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix submatrix(int r0, int r1, int c0, int c1) const {
        Matrix out(r1 - r0, c1 - c0);
        for (int i = r0; i < r1; ++i)
            for (int j = c0; j < c1; ++j) out.at(i - r0, j - c0) = at(i, j);
        return out;
    }

    std::vector<F> column(int j) const {
        std::vector<F> out(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
        return out;
    }

    void set_column(int j, const std::vector<F>& v) {
        for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    template <class G, class Fn>
    Matrix<G> map(Fn&& fn) const {
        Matrix<G> out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out.at(i, j) = fn(at(i, j));
        return out;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<F> a_;
};

}  // namespace minlap

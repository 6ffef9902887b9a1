#pragma once

// Exact Gaussian elimination over a field, plus the small derived routines
// the rest of the project needs: solving, kernels, determinants and
// characteristic polynomials.

#include <optional>
#include <utility>
#include <vector>

#include "minlap/matrix.hpp"
#include "minlap/polynomial.hpp"

namespace minlap {

// Reduced row echelon form in place; returns the pivot column of each pivot
// row in order.
template <class F>
std::vector<int> rref(Matrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        F inv = F(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            F f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) {
    return static_cast<int>(rref(m).size());
}

// One exact solution of m x = b, free variables set to zero; std::nullopt if
// the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& m, const std::vector<F>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw domain_error("solve_linear shape mismatch");
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (int c : pivots)
        if (c == m.cols()) return std::nullopt;
    std::vector<F> x(static_cast<std::size_t>(m.cols()), F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols());
    return x;
}

// Basis of the right kernel of m.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
    int n = m.cols();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(static_cast<std::size_t>(n), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw domain_error("inverse of non-square matrix");
    int n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = F(1);
    }
    if (static_cast<int>(rref(aug).size()) != n) return std::nullopt;
    for (std::size_t r = 0; r < static_cast<std::size_t>(n); ++r)
        if (aug.at(static_cast<int>(r), static_cast<int>(r)).is_zero()) return std::nullopt;
    return aug.submatrix(0, n, n, 2 * n);
}

template <class F>
F det(Matrix<F> m) {
    if (m.rows() != m.cols()) throw domain_error("determinant of non-square matrix");
    F d(1);
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return F(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        F inv = F(1) / m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            F f = inv * m.at(i, col);
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return d;
}

// Characteristic polynomial det(lambda I - m) by the Faddeev-LeVerrier
// recurrence; exact over any field of characteristic zero.
template <class F>
Polynomial<F> charpoly(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw domain_error("charpoly of non-square matrix");
    int n = m.rows();
    std::vector<F> c(static_cast<std::size_t>(n) + 1, F(0));
    c[n] = F(1);
    Matrix<F> mk = Matrix<F>::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        F ck = -(F(1) / F(k)) * mk.trace();
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return Polynomial<F>(std::move(c));
}

}  // namespace minlap

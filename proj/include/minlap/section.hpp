#pragma once

// Vector-valued meromorphic sections with poles at the connection's finite
// points plus a polynomial tail: principal[j][m-1] holds the coefficient
// vector of (x - p_j)^(-m), poly[k] the coefficient vector of x^k. The
// template parameter is the coefficient field: Q(i) for fiberwise work and
// Q(i)(xi) for the symbolic reduction. Includes the twisted operator
//   f  |->  (f' + (A - xi) f + sum_j A^j f/(x - p_j)) dx
// computed with exact partial fractions.

#include <utility>
#include <vector>

#include "minlap/connection.hpp"
#include "minlap/gaussian_rational.hpp"
#include "minlap/matrix.hpp"

namespace minlap {

template <class F>
std::vector<F> zero_vec(int n) {
    return std::vector<F>(static_cast<std::size_t>(n), F(0));
}

template <class F>
bool vec_is_zero(const std::vector<F>& v) {
    for (const F& x : v)
        if (!x.is_zero()) return false;
    return true;
}

template <class F>
void vec_add_scaled(std::vector<F>& dst, const F& s, const std::vector<F>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += s * src[i];
}

// K-matrix applied to an F-vector, promoting entries on the fly
template <class F>
std::vector<F> mat_apply(const Matrix<K>& m, const std::vector<F>& v) {
    std::vector<F> out = zero_vec<F>(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero()) continue;
            out[static_cast<std::size_t>(i)] += F(m.at(i, j)) * v[static_cast<std::size_t>(j)];
        }
    return out;
}

inline K kpow(const K& base, int e) {
    K out(1);
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}

template <class F>
struct Section {
    std::vector<std::vector<std::vector<F>>> principal;  // [point][order-1] -> vector
    std::vector<std::vector<F>> poly;                    // [degree] -> vector
    int dim = 0;

    Section() = default;
    Section(int points, int dim_in) : principal(static_cast<std::size_t>(points)), dim(dim_in) {}

    int point_count() const { return static_cast<int>(principal.size()); }
    int pole_order(int j) const { return static_cast<int>(principal[static_cast<std::size_t>(j)].size()); }
    int poly_degree() const { return static_cast<int>(poly.size()) - 1; }

    std::vector<F> pole_coeff(int j, int m) const {
        const auto& pj = principal[static_cast<std::size_t>(j)];
        if (m < 1 || m > static_cast<int>(pj.size())) return zero_vec<F>(dim);
        return pj[static_cast<std::size_t>(m - 1)];
    }
    std::vector<F> poly_coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(poly.size())) return zero_vec<F>(dim);
        return poly[static_cast<std::size_t>(k)];
    }

    void add_pole(int j, int m, const F& s, const std::vector<F>& coeff) {
        auto& pj = principal[static_cast<std::size_t>(j)];
        while (static_cast<int>(pj.size()) < m) pj.push_back(zero_vec<F>(dim));
        vec_add_scaled(pj[static_cast<std::size_t>(m - 1)], s, coeff);
    }
    void add_poly(int k, const F& s, const std::vector<F>& coeff) {
        while (static_cast<int>(poly.size()) <= k) poly.push_back(zero_vec<F>(dim));
        vec_add_scaled(poly[static_cast<std::size_t>(k)], s, coeff);
    }

    void trim() {
        for (auto& pj : principal)
            while (!pj.empty() && vec_is_zero(pj.back())) pj.pop_back();
        while (!poly.empty() && vec_is_zero(poly.back())) poly.pop_back();
    }

    bool is_zero() const {
        for (const auto& pj : principal)
            for (const auto& c : pj)
                if (!vec_is_zero(c)) return false;
        for (const auto& c : poly)
            if (!vec_is_zero(c)) return false;
        return true;
    }

    Section& operator+=(const Section& o) {
        for (int j = 0; j < point_count(); ++j)
            for (int m = 1; m <= o.pole_order(j); ++m) add_pole(j, m, F(1), o.pole_coeff(j, m));
        for (int k = 0; k <= o.poly_degree(); ++k) add_poly(k, F(1), o.poly_coeff(k));
        trim();
        return *this;
    }
    Section& operator-=(const Section& o) {
        for (int j = 0; j < point_count(); ++j)
            for (int m = 1; m <= o.pole_order(j); ++m) add_pole(j, m, F(-1), o.pole_coeff(j, m));
        for (int k = 0; k <= o.poly_degree(); ++k) add_poly(k, F(-1), o.poly_coeff(k));
        trim();
        return *this;
    }

    friend bool operator==(const Section& a, const Section& b) {
        if (a.dim != b.dim || a.point_count() != b.point_count()) return false;
        Section d = a;
        d -= b;
        return d.is_zero();
    }
    friend bool operator!=(const Section& a, const Section& b) { return !(a == b); }
};

template <class F>
std::vector<F> unit_vec(int n, int i) {
    std::vector<F> v = zero_vec<F>(n);
    v[static_cast<std::size_t>(i)] = F(1);
    return v;
}

// promote a Q(i)-section into a larger coefficient field
template <class F>
Section<F> promote_section(const Section<K>& s) {
    Section<F> out(s.point_count(), s.dim);
    for (int j = 0; j < s.point_count(); ++j)
        for (int m = 1; m <= s.pole_order(j); ++m) {
            std::vector<K> c = s.pole_coeff(j, m);
            for (int i = 0; i < s.dim; ++i)
                if (!c[static_cast<std::size_t>(i)].is_zero())
                    out.add_pole(j, m, F(c[static_cast<std::size_t>(i)]), unit_vec<F>(s.dim, i));
        }
    for (int k = 0; k <= s.poly_degree(); ++k) {
        std::vector<K> c = s.poly_coeff(k);
        for (int i = 0; i < s.dim; ++i)
            if (!c[static_cast<std::size_t>(i)].is_zero())
                out.add_poly(k, F(c[static_cast<std::size_t>(i)]), unit_vec<F>(s.dim, i));
    }
    return out;
}

// nabla_xi applied to f: derivative plus (A - xi) f plus the residue terms,
// with the divisions by (x - p_j) carried out exactly.
template <class F>
Section<F> apply_twisted(const ParabolicConnection& conn, const F& xi, const Section<F>& f) {
    const int n = conn.point_count();
    const int r = conn.rank();
    Section<F> out(n, r);

    // derivative
    for (int j = 0; j < n; ++j)
        for (int m = 1; m <= f.pole_order(j); ++m) out.add_pole(j, m + 1, F(-m), f.pole_coeff(j, m));
    for (int k = 1; k <= f.poly_degree(); ++k) out.add_poly(k - 1, F(k), f.poly_coeff(k));

    // (A - xi) f, componentwise since A is diagonal
    auto add_leading = [&](const std::vector<F>& c, auto&& sink) {
        for (int i = 0; i < r; ++i) {
            F scaled = (F(conn.irregular().a_diagonal[static_cast<std::size_t>(i)]) - xi) *
                       c[static_cast<std::size_t>(i)];
            if (!scaled.is_zero()) sink(i, scaled);
        }
    };
    for (int j = 0; j < n; ++j)
        for (int m = 1; m <= f.pole_order(j); ++m)
            add_leading(f.pole_coeff(j, m), [&](int i, const F& v) { out.add_pole(j, m, v, unit_vec<F>(r, i)); });
    for (int k = 0; k <= f.poly_degree(); ++k)
        add_leading(f.poly_coeff(k), [&](int i, const F& v) { out.add_poly(k, v, unit_vec<F>(r, i)); });

    // sum over operator points q of A^q f / (x - p_q)
    for (int q = 0; q < n; ++q) {
        const Matrix<K>& aq = conn.at_point(q).residue_matrix;
        const K& pq = conn.at_point(q).point;
        // polynomial terms: x^k/(x-q) = sum_{i<k} q^(k-1-i) x^i + q^k/(x-q)
        for (int k = 0; k <= f.poly_degree(); ++k) {
            std::vector<F> g = mat_apply(aq, f.poly_coeff(k));
            if (vec_is_zero(g)) continue;
            for (int i = 0; i < k; ++i) out.add_poly(i, F(kpow(pq, k - 1 - i)), g);
            out.add_pole(q, 1, F(kpow(pq, k)), g);
        }
        // principal terms
        for (int j = 0; j < n; ++j) {
            const K& pj = conn.at_point(j).point;
            for (int m = 1; m <= f.pole_order(j); ++m) {
                std::vector<F> g = mat_apply(aq, f.pole_coeff(j, m));
                if (vec_is_zero(g)) continue;
                if (j == q) {
                    out.add_pole(j, m + 1, F(1), g);
                    continue;
                }
                // (x-p_j)^(-m)/(x-p_q): orders 1..m at p_j plus a simple pole at p_q
                K diff = pq - pj;  // q - p in the expansion below
                K inv = K(1) / diff;
                for (int mp = 1; mp <= m; ++mp) out.add_pole(j, mp, F(-kpow(inv, m - mp + 1)), g);
                out.add_pole(q, 1, F(kpow(inv, m)), g);
            }
        }
    }
    out.trim();
    return out;
}

}  // namespace minlap

#pragma once

// The transform proper: x-action matrix X(xi) on the cokernel basis, its
// specializations to numeric fibers, residue and formal-infinity readings,
// and the inverse transform (same pipeline composed with the sign flip).

#include <string>
#include <utility>
#include <vector>

#include "minlap/linalg.hpp"
#include "minlap/model.hpp"
#include "minlap/rational_function.hpp"
#include "minlap/reduce.hpp"
#include "minlap/roots.hpp"

namespace minlap {

struct TransformedConnection {
    std::vector<std::pair<int, int>> basis_labels;  // (point, eigen slot) per basis class
    Matrix<RationalFunction> x_action;              // X(xi); the connection form is -X(xi) dxi
    std::vector<K> finite_points;                   // the xi_l, in block order
};

namespace detail {

// columns of the x-action: x * v/(x - p_j) = p_j * v/(x - p_j) + v
template <class F>
Matrix<F> x_action_matrix(const GlobalSectionModel& model, const F& xi) {
    const ParabolicConnection& conn = model.connection();
    const int d = model.cokernel_dimension();
    Matrix<F> x(d, d);
    for (int idx = 0; idx < d; ++idx) {
        auto [j, k] = model.basis_labels()[static_cast<std::size_t>(idx)];
        (void)k;
        Section<F> s(conn.point_count(), conn.rank());
        const std::vector<K>& v = model.basis_vector(idx);
        for (int i = 0; i < conn.rank(); ++i)
            if (!v[static_cast<std::size_t>(i)].is_zero())
                s.add_poly(0, F(v[static_cast<std::size_t>(i)]), unit_vec<F>(conn.rank(), i));
        Reduction<F> red = reduce_section(model, s, xi);
        for (int row = 0; row < d; ++row) x.at(row, idx) = red.coords[static_cast<std::size_t>(row)];
        x.at(idx, idx) += F(conn.at_point(j).point);
    }
    return x;
}

}  // namespace detail

inline TransformedConnection transform_connection(const GlobalSectionModel& model) {
    TransformedConnection t;
    t.basis_labels = model.basis_labels();
    t.x_action = detail::x_action_matrix<RationalFunction>(model, RationalFunction::variable());
    const IrregularData& irr = model.connection().irregular();
    for (int l = 0; l < irr.block_count(); ++l) t.finite_points.push_back(irr.xi(l));
    return t;
}

struct FiberCokernel {
    int dimension;
    std::vector<std::pair<int, int>> basis_labels;
    Matrix<K> x_action;  // the x-action on the fiber at xi0
};

inline FiberCokernel fiber_cokernel(const GlobalSectionModel& model, const K& xi0) {
    const ParabolicConnection& conn = model.connection();
    for (const K& a : conn.irregular().a_diagonal)
        if (a == xi0)
            throw domain_error(
                "fiber at an eigenvalue of the leading matrix degenerates; use residue_data_at there");
    // injectivity of the twisted operator on constants at this fiber
    const int r = conn.rank();
    Matrix<K> stacked((conn.point_count() + 1) * r, r);
    for (int i = 0; i < r; ++i)
        stacked.at(i, i) = conn.irregular().a_diagonal[static_cast<std::size_t>(i)] - xi0;
    for (int j = 0; j < conn.point_count(); ++j)
        for (int i = 0; i < r; ++i)
            for (int c = 0; c < r; ++c)
                stacked.at((j + 1) * r + i, c) = conn.at_point(j).residue_matrix.at(i, c);
    if (!kernel_basis(stacked).empty()) throw domain_error("twisted operator has constant kernel at this fiber");
    FiberCokernel f;
    f.dimension = model.cokernel_dimension();
    f.basis_labels = model.basis_labels();
    f.x_action = detail::x_action_matrix<K>(model, xi0);
    return f;
}

struct ResidueData {
    Matrix<K> residue;           // residue of -X(xi) dxi at the point
    Polynomial<K> charpoly;      // characteristic polynomial of the residue
    RootList eigenvalues;        // split part and residual factor
};

inline ResidueData residue_data_at(const TransformedConnection& t, const K& xi_l,
                                   const std::vector<K>& hints = {}) {
    ResidueData out;
    out.residue = t.x_action.map<K>([&xi_l](const RationalFunction& f) { return -residue_at(f, xi_l); });
    out.charpoly = charpoly(out.residue);
    out.eigenvalues = out.residue.rows() > 0 ? extract_roots(out.charpoly, hints) : RootList{{}, Poly(K(1))};
    return out;
}

struct FormalInfinityData {
    Matrix<K> leading;  // zeta^0 coefficient of X(1/zeta)
    Matrix<K> residue;  // zeta^1 coefficient of X(1/zeta)
};

inline FormalInfinityData formal_data_at_infinity(const TransformedConnection& t) {
    FormalInfinityData out;
    const int d = t.x_action.rows();
    out.leading = Matrix<K>(d, d);
    out.residue = Matrix<K>(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<K> c = laurent_at_infinity(t.x_action.at(i, j), 0, 1);
            out.leading.at(i, j) = c[0];
            out.residue.at(i, j) = c[1];
        }
    return out;
}

// every entry regular outside the xi_l with at worst simple poles there
inline bool poles_confined(const TransformedConnection& t, std::string* detail = nullptr) {
    Poly allowed = Poly::from_roots(t.finite_points);
    for (int i = 0; i < t.x_action.rows(); ++i)
        for (int j = 0; j < t.x_action.cols(); ++j) {
            const RationalFunction& f = t.x_action.at(i, j);
            if ((allowed % f.den()).is_zero()) continue;
            if (detail)
                *detail = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") has denominator " + f.den().to_string("xi");
            return false;
        }
    return true;
}

// entries bounded at infinity, so X = leading + sum of simple-pole terms
inline bool bounded_at_infinity(const TransformedConnection& t) {
    for (int i = 0; i < t.x_action.rows(); ++i)
        for (int j = 0; j < t.x_action.cols(); ++j)
            if (t.x_action.at(i, j).num().degree() > t.x_action.at(i, j).den().degree()) return false;
    return true;
}

// Same pipeline on a datum living on the dual line; the direct and inverse
// maps differ by the substitution x = -eta, applied to the result.
inline TransformedConnection inverse_transform(const ParabolicConnection& xi_side) {
    GlobalSectionModel model = build_model(xi_side);
    TransformedConnection t = transform_connection(model);
    for (int i = 0; i < t.x_action.rows(); ++i)
        for (int j = 0; j < t.x_action.cols(); ++j)
            t.x_action.at(i, j) = -t.x_action.at(i, j).negate_arg();
    for (K& p : t.finite_points) p = -p;
    return t;
}

}  // namespace minlap

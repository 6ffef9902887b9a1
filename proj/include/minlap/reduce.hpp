#pragma once

// Pole-order reduction: rewrites a section modulo the image of the twisted
// operator until only the cokernel basis classes remain, keeping the applied
// correction as a certificate. Works over Q(i)(xi) with xi symbolic and over
// Q(i) at a numeric fiber alike.

#include <map>
#include <utility>
#include <vector>

#include "minlap/model.hpp"
#include "minlap/rational_function.hpp"
#include "minlap/section.hpp"

namespace minlap {

template <class F>
struct Reduction {
    std::vector<F> coords;   // coordinates over the cokernel basis, label order
    Section<F> correction;   // g with  s = nabla_xi(g) + sum coords * basis
};

// the section sum coords * [v^{j,k}/(x - p_j)], for certificate re-expansion
template <class F>
Section<F> expand_in_basis(const GlobalSectionModel& model, const std::vector<F>& coords) {
    const ParabolicConnection& conn = model.connection();
    Section<F> out(conn.point_count(), conn.rank());
    for (int idx = 0; idx < model.cokernel_dimension(); ++idx) {
        if (coords[static_cast<std::size_t>(idx)].is_zero()) continue;
        auto [j, k] = model.basis_labels()[static_cast<std::size_t>(idx)];
        (void)k;
        std::vector<F> v;
        for (const K& c : model.basis_vector(idx)) v.push_back(F(c));
        out.add_pole(j, 1, coords[static_cast<std::size_t>(idx)], v);
    }
    out.trim();
    return out;
}

template <class F>
Reduction<F> reduce_section(const GlobalSectionModel& model, const Section<F>& s, const F& xi) {
    const ParabolicConnection& conn = model.connection();
    const int n = conn.point_count();
    const int r = conn.rank();
    if (s.point_count() != n || s.dim != r) throw domain_error("section shape disagrees with the connection");

    Section<F> cur = s;
    cur.trim();
    Section<F> corr(n, r);
    std::map<std::pair<int, int>, Matrix<K>> shift_inv;

    // (a) clear pole orders >= 2, highest first at each point; clearing one
    // point only ever adds simple poles at the others, so one sweep suffices
    for (int j = 0; j < n; ++j) {
        while (cur.pole_order(j) >= 2) {
            int ord = cur.pole_order(j);
            auto key = std::make_pair(j, ord - 1);
            auto it = shift_inv.find(key);
            if (it == shift_inv.end()) it = shift_inv.emplace(key, model.residue_shift_inverse(j, ord - 1)).first;
            std::vector<F> t = mat_apply(it->second, cur.pole_coeff(j, ord));
            Section<F> g(n, r);
            for (int i = 0; i < r; ++i)
                if (!t[static_cast<std::size_t>(i)].is_zero())
                    g.add_pole(j, ord - 1, t[static_cast<std::size_t>(i)], unit_vec<F>(r, i));
            cur -= apply_twisted(conn, xi, g);
            corr += g;
        }
    }

    // (b) clear the polynomial tail, top degree first; the leading
    // coefficient map is A - xi, invertible componentwise
    while (cur.poly_degree() >= 0) {
        int d = cur.poly_degree();
        std::vector<F> c = cur.poly_coeff(d);
        Section<F> g(n, r);
        for (int i = 0; i < r; ++i) {
            if (c[static_cast<std::size_t>(i)].is_zero()) continue;
            F w = c[static_cast<std::size_t>(i)] /
                  (F(conn.irregular().a_diagonal[static_cast<std::size_t>(i)]) - xi);
            g.add_poly(d, w, unit_vec<F>(r, i));
        }
        cur -= apply_twisted(conn, xi, g);
        corr += g;
    }

    // (c) expand the remaining simple-pole residues over the eigen basis;
    // components along zero eigenvectors would mean the input was not a
    // section of the module
    Reduction<F> out;
    out.coords = zero_vec<F>(model.cokernel_dimension());
    for (int j = 0; j < n; ++j) {
        if (cur.pole_order(j) == 0) continue;
        std::vector<F> c = mat_apply(model.eigen_inverse(j), cur.pole_coeff(j, 1));
        for (int k = 0; k < conn.at_point(j).zero_multiplicity; ++k)
            if (!c[static_cast<std::size_t>(k)].is_zero())
                throw domain_error("section does not lie in the module: residue at point " +
                                   std::to_string(j + 1) + " escapes the image of the residue matrix");
        for (int idx = 0; idx < model.cokernel_dimension(); ++idx) {
            auto [lj, lk] = model.basis_labels()[static_cast<std::size_t>(idx)];
            if (lj == j) out.coords[static_cast<std::size_t>(idx)] = c[static_cast<std::size_t>(lk)];
        }
    }
    out.correction = std::move(corr);
    return out;
}

}  // namespace minlap

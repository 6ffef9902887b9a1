#pragma once

// Report-style validators: resonance-freeness and admissibility. Violations
// are collected as report entries, never thrown.

#include <string>
#include <vector>

#include "minlap/connection.hpp"

namespace minlap {

struct ValidationIssue {
    std::string clause;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool passed() const { return issues.empty(); }
};

namespace detail {

inline bool integer_difference(const K& a, const K& b) {
    K d = a - b;
    return d.is_integer() && !d.is_zero();
}

inline void check_resonance_finite(const ParabolicConnection& conn, ValidationReport& rep) {
    for (int j = 0; j < conn.point_count(); ++j) {
        const RegularSingularity& s = conn.at_point(j);
        for (int k = s.zero_multiplicity; k < conn.rank(); ++k) {
            const EigenDatum& e = s.eigen[static_cast<std::size_t>(k)];
            std::string where = "point " + std::to_string(j + 1) + ", eigenvalue " + e.value.to_string();
            if (e.value.real_part_integral())
                rep.issues.push_back({"Re(mu) integral at a finite point", where});
            if (e.value == K(e.weight))
                rep.issues.push_back({"eigenvalue equals its weight at a finite point", where});
            for (int m = k + 1; m < conn.rank(); ++m) {
                if (integer_difference(e.value, s.eigen[static_cast<std::size_t>(m)].value))
                    rep.issues.push_back({"eigenvalues differ by a nonzero integer at a finite point",
                                          where + " vs " + s.eigen[static_cast<std::size_t>(m)].value.to_string()});
            }
        }
    }
}

inline void check_resonance_infinity(const ParabolicConnection& conn, ValidationReport& rep) {
    const IrregularData& irr = conn.irregular();
    for (int k = 0; k < conn.rank(); ++k) {
        const K& mu = irr.c_diagonal[static_cast<std::size_t>(k)];
        std::string where = "infinity, entry " + std::to_string(k + 1) + ", eigenvalue " + mu.to_string();
        if (mu.real_part_integral()) rep.issues.push_back({"Re(mu) integral at infinity", where});
        if (mu == K(irr.weights[static_cast<std::size_t>(k)]))
            rep.issues.push_back({"eigenvalue equals its weight at infinity", where});
        for (int m = k + 1; m < irr.blocks[static_cast<std::size_t>(irr.block_of(k)) + 1]; ++m) {
            if (integer_difference(mu, irr.c_diagonal[static_cast<std::size_t>(m)]))
                rep.issues.push_back({"eigenvalues differ by a nonzero integer within a block at infinity",
                                      where + " vs " + irr.c_diagonal[static_cast<std::size_t>(m)].to_string()});
        }
    }
}

}  // namespace detail

inline ValidationReport validate_resonance_free(const ParabolicConnection& conn) {
    ValidationReport rep;
    detail::check_resonance_finite(conn, rep);
    detail::check_resonance_infinity(conn, rep);
    return rep;
}

// The finite-point clauses alone. They are what the reduction algorithm
// needs (invertibility of A^j - m Id for integers m >= 1); connections with
// vanishing residues fail the infinity clauses yet transform fine.
inline ValidationReport validate_resonance_free_finite(const ParabolicConnection& conn) {
    ValidationReport rep;
    detail::check_resonance_finite(conn, rep);
    return rep;
}

inline ValidationReport validate_admissible(const ParabolicConnection& conn) {
    ValidationReport rep;
    for (int j = 0; j < conn.point_count(); ++j) {
        const RegularSingularity& s = conn.at_point(j);
        for (int k = 0; k < s.zero_multiplicity; ++k) {
            const EigenDatum& e = s.eigen[static_cast<std::size_t>(k)];
            if (e.weight != 0)
                rep.issues.push_back({"zero eigenvector carries a nonzero weight",
                                      "point " + std::to_string(j + 1) + ", weight " + format_rational(e.weight)});
        }
    }
    return rep;
}

// Shared gate for the transform pipeline: the reduction needs the
// finite-point resonance clauses and admissibility, nothing more.
inline void require_transform_ready(const ParabolicConnection& conn) {
    std::string why;
    for (const ValidationIssue& i : validate_resonance_free_finite(conn).issues)
        why += (why.empty() ? "" : "; ") + i.clause + " (" + i.detail + ")";
    for (const ValidationIssue& i : validate_admissible(conn).issues)
        why += (why.empty() ? "" : "; ") + i.clause + " (" + i.detail + ")";
    if (!why.empty()) throw domain_error("connection rejected: " + why);
}

}  // namespace minlap

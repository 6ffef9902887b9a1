#pragma once

// Comparison layer: checks the computed transform against the predicted
// singularity data, and the round trip against the original datum. Spectra
// at finite transform-side points are compared modulo integer shifts and one
// global sign; data at infinity are compared exactly.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minlap/degree.hpp"
#include "minlap/model.hpp"
#include "minlap/predict.hpp"
#include "minlap/transform.hpp"
#include "minlap/validate.hpp"

namespace minlap {

struct ComparisonItem {
    std::string item;
    bool pass;
    std::string detail;
};

struct ComparisonReport {
    std::vector<ComparisonItem> items;
    std::string convention;
    bool all_pass() const {
        for (const ComparisonItem& i : items)
            if (!i.pass) return false;
        return true;
    }
};

inline Matrix<K> residue_matrix_at(const TransformedConnection& t, const K& xi) {
    return t.x_action.map<K>([&xi](const RationalFunction& f) { return -residue_at(f, xi); });
}

namespace detail {

struct MatchMode {
    int sign;           // +1 or -1 applied to the predicted values
    bool allow_shifts;  // integer shifts of the values permitted
    const char* label;
};

inline const MatchMode kMatchModes[] = {
    {+1, false, "spectra match the prediction exactly"},
    {+1, true, "spectra match the prediction up to integer shifts"},
    {-1, false, "spectra match the negated prediction exactly"},
    {-1, true, "spectra match the negated prediction up to integer shifts"},
};

// multiset match: each computed (value, weight) against a distinct predicted
// one, weights exact, values modulo the mode
inline bool match_spectra(const std::vector<std::pair<K, mpq_class>>& expected,
                          const std::vector<std::pair<K, mpq_class>>& got, const MatchMode& mode) {
    if (expected.size() != got.size()) return false;
    std::vector<bool> used(expected.size(), false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
        if (i == got.size()) return true;
        for (std::size_t e = 0; e < expected.size(); ++e) {
            if (used[e] || got[i].second != expected[e].second) continue;
            K target = mode.sign > 0 ? expected[e].first : -expected[e].first;
            K d = got[i].first - target;
            if (!(mode.allow_shifts ? d.is_integer() : d.is_zero())) continue;
            used[e] = true;
            if (place(i + 1)) return true;
            used[e] = false;
        }
        return false;
    };
    return place(0);
}

inline std::string spectrum_string(const std::vector<std::pair<K, mpq_class>>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += s[i].first.to_string() + " (weight " + format_rational(s[i].second) + ")";
    }
    return out + "}";
}

// one finite transform-side point under one mode: exact modes compare the
// characteristic polynomial, shift modes need the split eigenvalues
inline ComparisonItem point_spectrum_item(const TransformedConnection& t, const PredictedPoint& pt,
                                          const MatchMode& mode) {
    ComparisonItem item{"residue spectrum at xi = " + pt.point.to_string(), false, ""};
    std::vector<K> hints;
    for (const auto& [value, weight] : pt.spectrum)
        hints.push_back(mode.sign > 0 ? value : -value);
    ResidueData rd = residue_data_at(t, pt.point, hints);
    if (!mode.allow_shifts) {
        Poly expected = Poly::from_roots(hints);
        if (rd.charpoly == expected) {
            item.pass = true;
            return item;
        }
        item.detail = "characteristic polynomial " + rd.charpoly.to_string("t") + ", expected " +
                      expected.to_string("t");
        return item;
    }
    if (rd.eigenvalues.residual.degree() > 0) {
        item.detail = "spectrum does not split over the scalars; characteristic polynomial " +
                      rd.charpoly.to_string("t");
        return item;
    }
    std::vector<std::pair<K, mpq_class>> got;
    for (const auto& [root, mult] : rd.eigenvalues.roots)
        for (int i = 0; i < mult; ++i) got.emplace_back(root, mpq_class(0));
    std::vector<std::pair<K, mpq_class>> expected;
    for (const auto& [value, weight] : pt.spectrum) expected.emplace_back(value, mpq_class(0));
    item.pass = match_spectra(expected, got, mode);
    if (!item.pass) item.detail = "computed " + spectrum_string(got);
    return item;
}

// run the mode-dependent items under each mode in turn; keep the first mode
// that passes everywhere, falling back to the primary mode's diagnostics
template <class Fn>
void resolve_modes(ComparisonReport& rep, Fn&& items_under) {
    for (const MatchMode& mode : kMatchModes) {
        std::vector<ComparisonItem> items = items_under(mode);
        bool all = true;
        for (const ComparisonItem& i : items) all = all && i.pass;
        if (all) {
            rep.convention = mode.label;
            for (ComparisonItem& i : items) rep.items.push_back(std::move(i));
            return;
        }
    }
    rep.convention = kMatchModes[0].label;
    std::vector<ComparisonItem> items = items_under(kMatchModes[0]);
    for (ComparisonItem& i : items) rep.items.push_back(std::move(i));
}

}  // namespace detail

inline ComparisonReport verify_stationary_phase(const PredictedData& p, const TransformedConnection& t) {
    ComparisonReport rep;
    {
        bool ok = t.x_action.rows() == p.predicted_rank && t.x_action.cols() == p.predicted_rank;
        rep.items.push_back({"transform rank", ok,
                             "computed " + std::to_string(t.x_action.rows()) + ", predicted " +
                                 std::to_string(p.predicted_rank)});
    }
    {
        std::string where;
        bool confined = poles_confined(t, &where);
        bool bounded = bounded_at_infinity(t);
        std::string detail = confined && bounded
                                 ? std::string("all poles simple and at the predicted points")
                                 : (confined ? "entry unbounded at infinity" : where);
        rep.items.push_back({"pole locations", confined && bounded, detail});
    }
    FormalInfinityData f = formal_data_at_infinity(t);
    {
        Matrix<K> expected(p.predicted_rank, p.predicted_rank);
        for (int i = 0; i < p.predicted_rank; ++i)
            expected.at(i, i) = p.infinity_leading[static_cast<std::size_t>(i)];
        rep.items.push_back({"leading term at infinity", f.leading == expected, ""});
    }
    {
        bool ok = true;
        std::string detail;
        for (std::size_t a = 0; a < p.labels.size();) {
            std::size_t b = a;
            while (b < p.labels.size() && p.labels[b].first == p.labels[a].first) ++b;
            Matrix<K> block(static_cast<int>(b - a), static_cast<int>(b - a));
            for (std::size_t i = a; i < b; ++i)
                for (std::size_t j = a; j < b; ++j)
                    block.at(static_cast<int>(i - a), static_cast<int>(j - a)) =
                        f.residue.at(static_cast<int>(i), static_cast<int>(j));
            std::vector<K> mus;
            for (std::size_t i = a; i < b; ++i) mus.push_back(p.infinity_residue[i].first);
            if (charpoly(block) != Poly::from_roots(mus)) {
                ok = false;
                detail = "block at leading value " + p.infinity_leading[a].to_string() +
                         " has characteristic polynomial " + charpoly(block).to_string("t");
                break;
            }
            a = b;
        }
        rep.items.push_back({"residue term at infinity", ok, detail});
    }
    if (p.regular_points.empty()) {
        rep.convention = "not applicable: no finite singularities on the transform side";
        return rep;
    }
    detail::resolve_modes(rep, [&](const detail::MatchMode& mode) {
        std::vector<ComparisonItem> items;
        for (const PredictedPoint& pt : p.regular_points)
            items.push_back(detail::point_spectrum_item(t, pt, mode));
        return items;
    });
    return rep;
}

// expected residue spectra when reading a transform back as an input datum
struct HarvestExpectation {
    std::vector<std::vector<std::pair<K, mpq_class>>> nonzero_spectra;  // per finite point of T
    std::vector<mpq_class> infinity_weights;                            // per label slot
};

inline HarvestExpectation expectation_from(const PredictedData& p) {
    HarvestExpectation e;
    for (const PredictedPoint& pt : p.regular_points) {
        std::size_t nonzero = pt.spectrum.size() - static_cast<std::size_t>(pt.zero_count);
        e.nonzero_spectra.emplace_back(pt.spectrum.begin(),
                                       pt.spectrum.begin() + static_cast<long>(nonzero));
    }
    for (const auto& [value, weight] : p.infinity_residue) e.infinity_weights.push_back(weight);
    return e;
}

// Read a computed transform as an input-normal-form datum on its own line:
// leading and residue terms from the expansion at infinity, residue matrices
// at the finite points, eigen data located through the expected spectra.
inline ParabolicConnection read_as_connection(const TransformedConnection& t,
                                              const HarvestExpectation& exp) {
    const int r = t.x_action.rows();
    if (r == 0) throw domain_error("nothing to read: the transform has rank zero");
    if (!bounded_at_infinity(t)) throw domain_error("transform entries unbounded at infinity");
    std::string where;
    if (!poles_confined(t, &where)) throw domain_error("transform poles not confined: " + where);
    if (exp.nonzero_spectra.size() != t.finite_points.size() ||
        static_cast<int>(exp.infinity_weights.size()) != r)
        throw domain_error("expectation shape does not match the transform");

    FormalInfinityData f = formal_data_at_infinity(t);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j && !f.leading.at(i, j).is_zero())
                throw domain_error("leading term at infinity is not diagonal");

    IrregularData irr;
    irr.blocks.push_back(0);
    for (int i = 0; i < r; ++i) {
        irr.a_diagonal.push_back(-f.leading.at(i, i));
        irr.c_diagonal.push_back(f.residue.at(i, i));
        irr.weights.push_back(exp.infinity_weights[static_cast<std::size_t>(i)]);
        if (i + 1 == r || f.leading.at(i + 1, i + 1) != f.leading.at(i, i)) irr.blocks.push_back(i + 1);
    }

    std::vector<RegularSingularity> sings;
    for (std::size_t l = 0; l < t.finite_points.size(); ++l) {
        const std::vector<std::pair<K, mpq_class>>& expected = exp.nonzero_spectra[l];
        Matrix<K> res = residue_matrix_at(t, t.finite_points[l]);
        if (expected.empty()) {
            if (res.is_zero()) continue;
            throw domain_error("unexpected residue at xi = " + t.finite_points[l].to_string());
        }
        RegularSingularity s;
        s.point = t.finite_points[l];
        s.residue_matrix = res;
        const int zeros = r - static_cast<int>(expected.size());
        std::vector<std::vector<K>> kb = kernel_basis(res);
        if (static_cast<int>(kb.size()) != zeros)
            throw domain_error("zero multiplicity mismatch at xi = " + t.finite_points[l].to_string());
        for (const std::vector<K>& v : kb) s.eigen.push_back({K(0), mpq_class(0), v});
        for (std::size_t a = 0; a < expected.size();) {
            std::size_t b = a;
            mpq_class weight = expected[a].second;
            while (b < expected.size() && expected[b].first == expected[a].first) {
                if (expected[b].second != weight)
                    throw domain_error("equal eigenvalues with unequal weights at xi = " +
                                       t.finite_points[l].to_string() + "; assignment is ambiguous");
                ++b;
            }
            Matrix<K> shifted = res;
            for (int i = 0; i < r; ++i) shifted.at(i, i) -= expected[a].first;
            std::vector<std::vector<K>> eb = kernel_basis(shifted);
            if (eb.size() != b - a)
                throw domain_error("eigenvalue multiplicity mismatch at xi = " +
                                   t.finite_points[l].to_string() + " for value " +
                                   expected[a].first.to_string());
            for (const std::vector<K>& v : eb) s.eigen.push_back({expected[a].first, weight, v});
            a = b;
        }
        sings.push_back(std::move(s));
    }
    return ParabolicConnection(r, std::move(sings), std::move(irr));
}

namespace detail {

inline std::vector<std::pair<K, mpq_class>> nonzero_eigen_pairs(const RegularSingularity& s, int rank) {
    std::vector<std::pair<K, mpq_class>> out;
    for (int k = s.zero_multiplicity; k < rank; ++k)
        out.emplace_back(s.eigen[static_cast<std::size_t>(k)].value,
                         s.eigen[static_cast<std::size_t>(k)].weight);
    return out;
}

}  // namespace detail

inline ComparisonReport verify_involution(const ParabolicConnection& conn) {
    ComparisonReport rep;
    GlobalSectionModel model = build_model(conn);
    TransformedConnection t = transform_connection(model);
    PredictedData p = predict(conn);
    if (p.predicted_rank == 0) {
        rep.items.push_back({"round trip", true, "vacuous: the transform has rank zero"});
        rep.convention = "not applicable: nothing to recover";
        return rep;
    }

    std::optional<ParabolicConnection> harvested;
    try {
        harvested.emplace(read_as_connection(t, expectation_from(p)));
    } catch (const domain_error& e) {
        rep.items.push_back({"transform reads as an input datum", false, e.what()});
        rep.convention = "not applicable: harvest failed";
        return rep;
    }
    rep.items.push_back({"transform reads as an input datum", true, ""});

    {
        ValidationReport v = validate_resonance_free(*harvested);
        ValidationReport a = validate_admissible(*harvested);
        std::string detail;
        for (const ValidationIssue& i : v.issues) detail += i.clause + " (" + i.detail + "); ";
        for (const ValidationIssue& i : a.issues) detail += i.clause + " (" + i.detail + "); ";
        rep.items.push_back({"harvested datum validates", v.passed() && a.passed(), detail});
        if (!(v.passed() && a.passed())) {
            rep.convention = "not applicable: harvested datum invalid";
            return rep;
        }
    }

    TransformedConnection back = inverse_transform(*harvested);
    PredictedData p2 = predict(*harvested);
    std::optional<ParabolicConnection> recovered;
    try {
        recovered.emplace(read_as_connection(back, expectation_from(p2)));
    } catch (const domain_error& e) {
        rep.items.push_back({"round trip reads as an input datum", false, e.what()});
        rep.convention = "not applicable: round trip failed";
        return rep;
    }
    rep.items.push_back({"round trip reads as an input datum", true, ""});

    rep.items.push_back({"rank recovered", recovered->rank() == conn.rank(),
                         "recovered " + std::to_string(recovered->rank()) + ", original " +
                             std::to_string(conn.rank())});

    // original singular points that actually carry a residue
    std::vector<int> original_points;
    for (int j = 0; j < conn.point_count(); ++j)
        if (!conn.at_point(j).residue_matrix.is_zero()) original_points.push_back(j);
    {
        std::vector<K> expect, got;
        for (int j : original_points) expect.push_back(conn.at_point(j).point);
        for (int j = 0; j < recovered->point_count(); ++j) got.push_back(recovered->at_point(j).point);
        std::sort(expect.begin(), expect.end());
        std::sort(got.begin(), got.end());
        rep.items.push_back({"singular points recovered", expect == got, ""});
        if (expect != got) {
            rep.convention = "not applicable: point sets differ";
            return rep;
        }
    }

    detail::resolve_modes(rep, [&](const detail::MatchMode& mode) {
        std::vector<ComparisonItem> items;
        for (int j : original_points) {
            const RegularSingularity& orig = conn.at_point(j);
            const RegularSingularity* rec = nullptr;
            for (int i = 0; i < recovered->point_count(); ++i)
                if (recovered->at_point(i).point == orig.point) rec = &recovered->at_point(i);
            ComparisonItem item{"residue data at x = " + orig.point.to_string(), false, ""};
            if (rec && rec->zero_multiplicity == orig.zero_multiplicity) {
                auto expect = detail::nonzero_eigen_pairs(orig, conn.rank());
                auto got = detail::nonzero_eigen_pairs(*rec, recovered->rank());
                item.pass = detail::match_spectra(expect, got, mode);
                if (!item.pass) item.detail = "recovered " + detail::spectrum_string(got);
            } else {
                item.detail = "zero multiplicity differs";
            }
            items.push_back(std::move(item));
        }
        {
            ComparisonItem item{"irregular data recovered", false, ""};
            std::vector<K> ea = conn.irregular().a_diagonal, ga = recovered->irregular().a_diagonal;
            std::sort(ea.begin(), ea.end());
            std::sort(ga.begin(), ga.end());
            std::vector<std::pair<K, mpq_class>> ec, gc;
            for (std::size_t i = 0; i < conn.irregular().c_diagonal.size(); ++i)
                ec.emplace_back(conn.irregular().c_diagonal[i], conn.irregular().weights[i]);
            for (std::size_t i = 0; i < recovered->irregular().c_diagonal.size(); ++i)
                gc.emplace_back(recovered->irregular().c_diagonal[i], recovered->irregular().weights[i]);
            item.pass = ea == ga && detail::match_spectra(ec, gc, mode);
            if (!item.pass) item.detail = "leading or residue data at infinity differ";
            items.push_back(std::move(item));
        }
        return items;
    });

    {
        K expect = dmodule_degrees(conn).pdeg;
        K got = dmodule_degrees(*recovered).pdeg;
        rep.items.push_back({"parabolic degree recovered", expect == got,
                             "recovered " + got.to_string() + ", original " + expect.to_string()});
    }
    return rep;
}

}  // namespace minlap

#pragma once

// Deterministic run reports: one JSON document per input, every quantity an
// exact string, no timing or environment data inside the document.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minlap/compare.hpp"
#include "minlap/degree.hpp"
#include "minlap/document.hpp"
#include "minlap/model.hpp"
#include "minlap/predict.hpp"
#include "minlap/transform.hpp"
#include "minlap/validate.hpp"

namespace minlap {

inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

inline ordered_json validation_to_json(const ValidationReport& v) {
    ordered_json out;
    out["passed"] = v.passed();
    out["issues"] = ordered_json::array();
    for (const ValidationIssue& i : v.issues)
        out["issues"].push_back({{"clause", i.clause}, {"detail", i.detail}});
    return out;
}

inline ordered_json comparison_to_json(const ComparisonReport& r) {
    ordered_json out;
    out["all_pass"] = r.all_pass();
    out["convention"] = r.convention;
    out["items"] = ordered_json::array();
    for (const ComparisonItem& i : r.items)
        out["items"].push_back({{"item", i.item}, {"pass", i.pass}, {"detail", i.detail}});
    return out;
}

inline ordered_json prediction_to_json(const PredictedData& p) {
    ordered_json out;
    out["predicted_rank"] = p.predicted_rank;
    out["regular_points"] = ordered_json::array();
    for (const PredictedPoint& pt : p.regular_points) {
        ordered_json pj;
        pj["point"] = pt.point.to_string();
        pj["spectrum"] = ordered_json::array();
        for (const auto& [value, weight] : pt.spectrum)
            pj["spectrum"].push_back({{"value", value.to_string()}, {"weight", format_rational(weight)}});
        out["regular_points"].push_back(std::move(pj));
    }
    out["infinity"] = ordered_json::array();
    for (std::size_t i = 0; i < p.labels.size(); ++i)
        out["infinity"].push_back({{"leading", p.infinity_leading[i].to_string()},
                                   {"value", p.infinity_residue[i].first.to_string()},
                                   {"weight", format_rational(p.infinity_residue[i].second)},
                                   {"lambda", p.lambda[i].to_string()}});
    out["predicted_pdeg"] = p.predicted_pdeg.to_string();
    return out;
}

struct ReportOptions {
    bool predict_only = false;
    bool full = false;        // include the X(xi) entries
    bool involution = false;  // append the round-trip verdicts
};

inline ordered_json run_report(const ParabolicConnection& conn, const ReportOptions& opt) {
    ordered_json rep;
    rep["input_digest"] = fnv1a_hex(connection_to_json(conn).dump());
    rep["validation"] = {{"resonance_free", validation_to_json(validate_resonance_free(conn))},
                         {"admissible", validation_to_json(validate_admissible(conn))}};
    DModuleDegrees deg = dmodule_degrees(conn);
    rep["degrees"] = {{"deg", deg.deg.to_string()},
                      {"pdeg", deg.pdeg.to_string()},
                      {"slope", deg.slope.to_string()},
                      {"bundle_parabolic_degree", format_rational(parabolic_degree(conn))}};

    PredictedData p = predict(conn);
    rep["prediction"] = prediction_to_json(p);
    rep["prediction"]["pdeg_preserved"] = p.predicted_pdeg == deg.pdeg;
    rep["prediction"]["resonance_free"] = validation_to_json(predicted_resonance_free(p));

    if (!opt.predict_only) {
        GlobalSectionModel model = build_model(conn);
        TransformedConnection t = transform_connection(model);
        ordered_json tj;
        tj["rank"] = t.x_action.rows();
        tj["basis_labels"] = ordered_json::array();
        for (const auto& [j, k] : t.basis_labels) tj["basis_labels"].push_back({j + 1, k + 1});
        if (opt.full) {
            ordered_json rows = ordered_json::array();
            for (int i = 0; i < t.x_action.rows(); ++i) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < t.x_action.cols(); ++c)
                    row.push_back(t.x_action.at(i, c).to_string("xi"));
                rows.push_back(std::move(row));
            }
            tj["x_action"] = std::move(rows);
            tj["connection_form"] = "-X(xi) dxi";
        }
        rep["transform"] = std::move(tj);
        rep["comparison"] = comparison_to_json(verify_stationary_phase(p, t));
        if (opt.involution) rep["involution"] = comparison_to_json(verify_involution(conn));
    }
    return rep;
}

}  // namespace minlap

#pragma once

// Stationary-phase predictor: singularity data of the transform computed
// from the input datum alone, plus the resonance check on predicted data.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "minlap/connection.hpp"
#include "minlap/validate.hpp"

namespace minlap {

struct PredictedPoint {
    K point;                                      // xi_l
    std::vector<std::pair<K, mpq_class>> spectrum;  // nonzero part from the infinity block, then zeros
    int zero_count;                               // appended (0, 0) entries
};

struct PredictedData {
    int predicted_rank;
    std::vector<PredictedPoint> regular_points;
    std::vector<std::pair<int, int>> labels;                 // (point, eigen slot), basis order
    std::vector<K> infinity_leading;                         // p_j per label
    std::vector<std::pair<K, mpq_class>> infinity_residue;   // (mu, beta) per label
    std::vector<K> lambda;                                   // (mu - beta)/2 per label
    K predicted_pdeg;
};

inline PredictedData predict(const ParabolicConnection& conn) {
    require_transform_ready(conn);
    PredictedData out;
    out.predicted_rank = conn.transformed_rank();
    if (out.predicted_rank == 0) {
        out.predicted_pdeg = K(0);
        return out;
    }
    const IrregularData& irr = conn.irregular();
    K sum_values(0);
    mpq_class sum_weights(0);
    for (int l = 0; l < irr.block_count(); ++l) {
        PredictedPoint pt;
        pt.point = irr.xi(l);
        for (int k = irr.blocks[static_cast<std::size_t>(l)]; k < irr.blocks[static_cast<std::size_t>(l) + 1]; ++k)
            pt.spectrum.emplace_back(irr.c_diagonal[static_cast<std::size_t>(k)],
                                     irr.weights[static_cast<std::size_t>(k)]);
        pt.zero_count = out.predicted_rank - static_cast<int>(pt.spectrum.size());
        for (int z = 0; z < pt.zero_count; ++z) pt.spectrum.emplace_back(K(0), mpq_class(0));
        for (const auto& [value, weight] : pt.spectrum) {
            sum_values += value;
            sum_weights += weight;
        }
        out.regular_points.push_back(std::move(pt));
    }
    for (int j = 0; j < conn.point_count(); ++j) {
        const RegularSingularity& sing = conn.at_point(j);
        for (int k = sing.zero_multiplicity; k < conn.rank(); ++k) {
            const EigenDatum& e = sing.eigen[static_cast<std::size_t>(k)];
            out.labels.emplace_back(j, k);
            out.infinity_leading.push_back(sing.point);
            out.infinity_residue.emplace_back(e.value, e.weight);
            out.lambda.push_back((e.value - K(e.weight)) / K(mpq_class(2)));
            sum_values += e.value;
            sum_weights += e.weight;
        }
    }
    out.predicted_pdeg = -sum_values + K(sum_weights);
    return out;
}

// the resonance clauses evaluated on the predicted transform-side data
inline ValidationReport predicted_resonance_free(const PredictedData& p) {
    ValidationReport report;
    auto value_clauses = [&report](const std::string& where, const K& value, const mpq_class& weight) {
        if (value.real_part_integral())
            report.issues.push_back({"integer real part", where + ": eigenvalue " + value.to_string()});
        if (value == K(weight))
            report.issues.push_back({"eigenvalue equals weight", where + ": " + value.to_string()});
    };
    for (std::size_t l = 0; l < p.regular_points.size(); ++l) {
        const PredictedPoint& pt = p.regular_points[l];
        const std::size_t nonzero = pt.spectrum.size() - static_cast<std::size_t>(pt.zero_count);
        std::string where = "predicted point " + std::to_string(l + 1);
        for (std::size_t k = 0; k < nonzero; ++k) {
            value_clauses(where, pt.spectrum[k].first, pt.spectrum[k].second);
            for (std::size_t m = k + 1; m < nonzero; ++m)
                if (detail::integer_difference(pt.spectrum[k].first, pt.spectrum[m].first))
                    report.issues.push_back({"integer eigenvalue difference",
                                             where + ": " + pt.spectrum[k].first.to_string() + " and " +
                                                 pt.spectrum[m].first.to_string()});
        }
    }
    // infinity blocks of the transform are the label groups sharing one p_j
    for (std::size_t a = 0; a < p.labels.size();) {
        std::size_t b = a;
        while (b < p.labels.size() && p.labels[b].first == p.labels[a].first) ++b;
        std::string where = "predicted infinity block " + std::to_string(p.labels[a].first + 1);
        for (std::size_t k = a; k < b; ++k) {
            value_clauses(where, p.infinity_residue[k].first, p.infinity_residue[k].second);
            for (std::size_t m = k + 1; m < b; ++m)
                if (detail::integer_difference(p.infinity_residue[k].first, p.infinity_residue[m].first))
                    report.issues.push_back({"integer eigenvalue difference",
                                             where + ": " + p.infinity_residue[k].first.to_string() +
                                                 " and " + p.infinity_residue[m].first.to_string()});
        }
        a = b;
    }
    return report;
}

}  // namespace minlap

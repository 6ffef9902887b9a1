#pragma once

// Degree bookkeeping: parabolic degree and slope of a datum, the same for
// selected sub-data, and the filtration-shift rule for a single eigenvalue.

#include <gmpxx.h>

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minlap/connection.hpp"

namespace minlap {

// parabolic degree of the underlying bundle: degree 0 plus the weight sum
inline mpq_class parabolic_degree(const ParabolicConnection& conn) {
    mpq_class sum(0);
    for (int j = 0; j < conn.point_count(); ++j)
        for (const EigenDatum& e : conn.at_point(j).eigen) sum += e.weight;
    for (const mpq_class& w : conn.irregular().weights) sum += w;
    return sum;
}

struct DModuleDegrees {
    K deg;
    K pdeg;
    K slope;
};

inline DModuleDegrees dmodule_degrees(const ParabolicConnection& conn) {
    K sum_values(0);
    mpq_class sum_weights(0);
    for (int j = 0; j < conn.point_count(); ++j)
        for (const EigenDatum& e : conn.at_point(j).eigen) {
            sum_values += e.value;
            sum_weights += e.weight;
        }
    for (const K& c : conn.irregular().c_diagonal) sum_values += c;
    for (const mpq_class& w : conn.irregular().weights) sum_weights += w;
    DModuleDegrees out;
    out.deg = -sum_values;
    out.pdeg = out.deg + K(sum_weights);
    out.slope = out.pdeg / K(mpq_class(conn.rank()));
    return out;
}

// shift one filtration step by an integer level: the weight moves with it
inline std::pair<K, mpq_class> extend_filtration(const K& alpha, const K& mu, const mpq_class& beta,
                                                 long n) {
    if (alpha - mu != K(mpq_class(n)))
        throw std::invalid_argument("filtration shift requires alpha - mu = " + std::to_string(n) +
                                    ", got " + (alpha - mu).to_string());
    return {alpha, beta + n};
}

// index selection for a sub-datum: one slot list per finite point plus one
// for the infinity slots, all of a common size d
struct SubData {
    std::vector<std::vector<int>> finite;
    std::vector<int> infinity;
};

inline K slope_of_subdata(const ParabolicConnection& conn, const SubData& sub) {
    const int d = static_cast<int>(sub.infinity.size());
    if (d < 1) throw std::invalid_argument("sub-datum must select at least one slot");
    if (static_cast<int>(sub.finite.size()) != conn.point_count())
        throw std::invalid_argument("sub-datum needs one slot list per finite singularity");
    auto check = [&](const std::vector<int>& idx, int bound, const char* where) {
        if (static_cast<int>(idx.size()) != d)
            throw std::invalid_argument(std::string("sub-datum slot lists must share one size: ") + where);
        std::set<int> seen;
        for (int i : idx) {
            if (i < 0 || i >= bound)
                throw std::invalid_argument(std::string("slot index out of range: ") + where);
            if (!seen.insert(i).second)
                throw std::invalid_argument(std::string("duplicate slot index: ") + where);
        }
    };
    K sum_values(0);
    mpq_class sum_weights(0);
    for (int j = 0; j < conn.point_count(); ++j) {
        check(sub.finite[static_cast<std::size_t>(j)], conn.rank(), "finite point");
        for (int k : sub.finite[static_cast<std::size_t>(j)]) {
            const EigenDatum& e = conn.at_point(j).eigen[static_cast<std::size_t>(k)];
            sum_values += e.value;
            sum_weights += e.weight;
        }
    }
    check(sub.infinity, conn.rank(), "infinity");
    for (int k : sub.infinity) {
        sum_values += conn.irregular().c_diagonal[static_cast<std::size_t>(k)];
        sum_weights += conn.irregular().weights[static_cast<std::size_t>(k)];
    }
    return (-sum_values + K(sum_weights)) / K(mpq_class(d));
}

}  // namespace minlap

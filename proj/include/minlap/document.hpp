#pragma once

// Connection-data documents: JSON with every scalar an exact fraction
// string, "a/b" for rationals and "a/b+c/d*i" for Gaussian rationals.
// Decimal numbers are rejected.

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "minlap/connection.hpp"

namespace minlap {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline const ordered_json& field(const ordered_json& o, const char* name) {
    if (!o.is_object()) throw parse_error(std::string("expected an object around field ") + name);
    auto it = o.find(name);
    if (it == o.end()) throw parse_error(std::string("missing field: ") + name);
    return *it;
}

inline std::string exact_string(const ordered_json& v, const std::string& what) {
    if (!v.is_string()) throw parse_error(what + " must be an exact fraction string, never a number");
    return v.get<std::string>();
}

inline K gaussian_field(const ordered_json& v, const std::string& what) {
    try {
        return K::from_string(exact_string(v, what));
    } catch (const parse_error& e) {
        throw parse_error(what + ": " + e.what());
    }
}

inline mpq_class rational_field(const ordered_json& v, const std::string& what) {
    try {
        return parse_rational(exact_string(v, what));
    } catch (const parse_error& e) {
        throw parse_error(what + ": " + e.what());
    }
}

inline const ordered_json& array_field(const ordered_json& o, const char* name) {
    const ordered_json& v = field(o, name);
    if (!v.is_array()) throw parse_error(std::string(name) + " must be an array");
    return v;
}

}  // namespace detail

inline ParabolicConnection parse_connection(const ordered_json& doc) {
    const ordered_json& rank_v = detail::field(doc, "rank");
    if (!rank_v.is_number_integer()) throw parse_error("rank must be an integer");
    const int r = rank_v.get<int>();

    std::vector<RegularSingularity> sings;
    for (const ordered_json& sj : detail::array_field(doc, "regular_singularities")) {
        RegularSingularity s;
        const ordered_json& pt = detail::field(sj, "point");
        if (!pt.is_array() || pt.size() != 2) throw parse_error("point must be a [re, im] pair");
        s.point = K(detail::rational_field(pt[0], "point re"), detail::rational_field(pt[1], "point im"));
        const ordered_json& rm = detail::field(sj, "residue_matrix");
        if (!rm.is_array() || static_cast<int>(rm.size()) != r)
            throw parse_error("residue_matrix must have one row per rank");
        s.residue_matrix = Matrix<K>(r, r);
        for (int i = 0; i < r; ++i) {
            if (!rm[static_cast<std::size_t>(i)].is_array() ||
                static_cast<int>(rm[static_cast<std::size_t>(i)].size()) != r)
                throw parse_error("residue_matrix rows must have one entry per rank");
            for (int c = 0; c < r; ++c)
                s.residue_matrix.at(i, c) = detail::gaussian_field(
                    rm[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], "residue_matrix entry");
        }
        for (const ordered_json& ej : detail::array_field(sj, "eigen")) {
            EigenDatum e;
            e.value = detail::gaussian_field(detail::field(ej, "value"), "eigen value");
            e.weight = detail::rational_field(detail::field(ej, "weight"), "eigen weight");
            for (const ordered_json& vj : detail::array_field(ej, "vector"))
                e.vector.push_back(detail::gaussian_field(vj, "eigen vector entry"));
            s.eigen.push_back(std::move(e));
        }
        sings.push_back(std::move(s));
    }

    const ordered_json& ij = detail::field(doc, "irregular");
    IrregularData irr;
    for (const ordered_json& v : detail::array_field(ij, "A_diagonal"))
        irr.a_diagonal.push_back(detail::gaussian_field(v, "A_diagonal entry"));
    for (const ordered_json& v : detail::array_field(ij, "blocks")) {
        if (!v.is_number_integer()) throw parse_error("blocks entries must be integers");
        irr.blocks.push_back(v.get<int>());
    }
    for (const ordered_json& v : detail::array_field(ij, "C_diagonal"))
        irr.c_diagonal.push_back(detail::gaussian_field(v, "C_diagonal entry"));
    for (const ordered_json& v : detail::array_field(ij, "weights"))
        irr.weights.push_back(detail::rational_field(v, "irregular weight"));

    return ParabolicConnection(r, std::move(sings), std::move(irr));
}

inline ParabolicConnection parse_connection_text(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(e.what());
    }
    return parse_connection(doc);
}

inline ordered_json connection_to_json(const ParabolicConnection& conn) {
    ordered_json doc;
    doc["rank"] = conn.rank();
    doc["regular_singularities"] = ordered_json::array();
    for (int j = 0; j < conn.point_count(); ++j) {
        const RegularSingularity& s = conn.at_point(j);
        ordered_json sj;
        sj["point"] = {format_rational(s.point.re()), format_rational(s.point.im())};
        ordered_json rm = ordered_json::array();
        for (int i = 0; i < conn.rank(); ++i) {
            ordered_json row = ordered_json::array();
            for (int c = 0; c < conn.rank(); ++c) row.push_back(s.residue_matrix.at(i, c).to_string());
            rm.push_back(std::move(row));
        }
        sj["residue_matrix"] = std::move(rm);
        ordered_json eigen = ordered_json::array();
        for (const EigenDatum& e : s.eigen) {
            ordered_json ej;
            ej["value"] = e.value.to_string();
            ej["weight"] = format_rational(e.weight);
            ordered_json vec = ordered_json::array();
            for (const K& x : e.vector) vec.push_back(x.to_string());
            ej["vector"] = std::move(vec);
            eigen.push_back(std::move(ej));
        }
        sj["eigen"] = std::move(eigen);
        doc["regular_singularities"].push_back(std::move(sj));
    }
    ordered_json ij;
    ordered_json a = ordered_json::array(), c = ordered_json::array(), w = ordered_json::array();
    for (const K& x : conn.irregular().a_diagonal) a.push_back(x.to_string());
    for (const K& x : conn.irregular().c_diagonal) c.push_back(x.to_string());
    for (const mpq_class& x : conn.irregular().weights) w.push_back(format_rational(x));
    ij["A_diagonal"] = std::move(a);
    ij["blocks"] = conn.irregular().blocks;
    ij["C_diagonal"] = std::move(c);
    ij["weights"] = std::move(w);
    doc["irregular"] = std::move(ij);
    return doc;
}

}  // namespace minlap

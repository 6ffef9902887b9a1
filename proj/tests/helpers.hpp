#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "minlap/minlap.hpp"

namespace testdata {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline minlap::ParabolicConnection load_fixture(const std::string& name) {
    return minlap::parse_connection_text(read_file(std::string(MINLAP_FIXTURE_DIR) + "/" + name));
}

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = {
        "f01_rank1.json",       "f02_rank1_gaussian.json", "f03_rank1_twopoints.json",
        "f04_rank1_fivepoints.json", "f05_rank2_block.json", "f06_rank2_kernel.json",
        "f07_rank2_null.json",  "f08_rank3_mixed.json",    "f09_rank6_stress.json"};
    return names;
}

// rank-1 connection with one finite point
inline minlap::ParabolicConnection rank1(const minlap::K& p, const minlap::K& mu, const mpq_class& w,
                                         const minlap::K& xi, const mpq_class& w_inf) {
    using namespace minlap;
    RegularSingularity s;
    s.point = p;
    s.residue_matrix = Matrix<K>(1, 1, {mu});
    s.eigen = {{mu, w, {K(1)}}};
    IrregularData irr;
    irr.a_diagonal = {xi};
    irr.blocks = {0, 1};
    irr.c_diagonal = {-mu};
    irr.weights = {w_inf};
    return ParabolicConnection(1, {s}, irr);
}

}  // namespace testdata

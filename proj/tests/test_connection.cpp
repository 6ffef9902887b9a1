#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "minlap/minlap.hpp"

using namespace minlap;
using testdata::load_fixture;
using testdata::rank1;

namespace {
ParabolicConnection two_point_rank2(const mpq_class& w1, const mpq_class& w2, const mpq_class& wi1,
                                    const mpq_class& wi2) {
    // diagonal rank-1 residues at 0 and 1, zero eigenvalues first
    RegularSingularity s1;
    s1.point = K(0);
    s1.residue_matrix = Matrix<K>(2, 2, {K(mpq_class(1, 5)), K(0), K(0), K(0)});
    s1.eigen = {{K(0), mpq_class(0), {K(0), K(1)}}, {K(mpq_class(1, 5)), w1, {K(1), K(0)}}};
    RegularSingularity s2;
    s2.point = K(1);
    s2.residue_matrix = Matrix<K>(2, 2, {K(0), K(0), K(0), K(mpq_class(1, 7))});
    s2.eigen = {{K(0), mpq_class(0), {K(1), K(0)}}, {K(mpq_class(1, 7)), w2, {K(0), K(1)}}};
    IrregularData irr;
    irr.a_diagonal = {K(1), K(2)};
    irr.blocks = {0, 1, 2};
    irr.c_diagonal = {K(mpq_class(-1, 5)), K(mpq_class(-1, 7))};
    irr.weights = {wi1, wi2};
    return ParabolicConnection(2, {s1, s2}, irr);
}
}  // namespace

TEST_CASE("construction enforces the input normal form") {
    REQUIRE_NOTHROW(rank1(K(2), K(mpq_class(1, 2)), mpq_class(1, 4), K(1), mpq_class(1, 3)));

    // listed value is not an eigenvalue of the residue matrix
    RegularSingularity s;
    s.point = K(0);
    s.residue_matrix = Matrix<K>(1, 1, {K(mpq_class(1, 2))});
    s.eigen = {{K(mpq_class(1, 3)), mpq_class(0), {K(1)}}};
    IrregularData irr;
    irr.a_diagonal = {K(1)};
    irr.blocks = {0, 1};
    irr.c_diagonal = {K(mpq_class(-1, 2))};
    irr.weights = {mpq_class(0)};
    REQUIRE_THROWS_AS(ParabolicConnection(1, {s}, irr), domain_error);

    // zero eigenvector
    s.eigen = {{K(mpq_class(1, 2)), mpq_class(0), {K(0)}}};
    REQUIRE_THROWS_AS(ParabolicConnection(1, {s}, irr), domain_error);

    // residue at infinity must be minus the block diagonal of the residue sum
    s.eigen = {{K(mpq_class(1, 2)), mpq_class(0), {K(1)}}};
    irr.c_diagonal = {K(mpq_class(1, 2))};
    REQUIRE_THROWS_AS(ParabolicConnection(1, {s}, irr), domain_error);

    // weight outside [0,1)
    irr.c_diagonal = {K(mpq_class(-1, 2))};
    irr.weights = {mpq_class(3, 2)};
    REQUIRE_THROWS_AS(ParabolicConnection(1, {s}, irr), domain_error);

    // duplicate singular points
    irr.weights = {mpq_class(0)};
    REQUIRE_THROWS_AS(ParabolicConnection(1, {s, s}, irr), domain_error);
}

TEST_CASE("zero eigenvalues must be listed first") {
    RegularSingularity s;
    s.point = K(0);
    s.residue_matrix = Matrix<K>(2, 2, {K(mpq_class(1, 3)), K(0), K(0), K(0)});
    s.eigen = {{K(mpq_class(1, 3)), mpq_class(0), {K(1), K(0)}}, {K(0), mpq_class(0), {K(0), K(1)}}};
    IrregularData irr;
    irr.a_diagonal = {K(1), K(1)};
    irr.blocks = {0, 2};
    irr.c_diagonal = {K(mpq_class(-1, 3)), K(0)};
    irr.weights = {mpq_class(0), mpq_class(0)};
    REQUIRE_THROWS_AS(ParabolicConnection(2, {s}, irr), domain_error);
    std::swap(s.eigen[0], s.eigen[1]);
    ParabolicConnection conn(2, {s}, irr);
    REQUIRE(conn.at_point(0).zero_multiplicity == 1);
    REQUIRE(conn.transformed_rank() == 1);
}

TEST_CASE("resonance-free validation clauses") {
    auto ok = rank1(K(2), K(mpq_class(1, 2)), mpq_class(0), K(1), mpq_class(1, 3));
    REQUIRE(validate_resonance_free(ok).passed());

    // integral real part
    auto bad1 = rank1(K(2), K(1), mpq_class(1, 4), K(1), mpq_class(1, 3));
    auto rep1 = validate_resonance_free(bad1);
    REQUIRE_FALSE(rep1.passed());
    bool named = false;
    for (const auto& issue : rep1.issues) named = named || issue.clause.find("Re(mu)") != std::string::npos;
    REQUIRE(named);

    // eigenvalue equal to its weight
    auto bad2 = rank1(K(2), K(mpq_class(1, 4)), mpq_class(1, 4), K(1), mpq_class(1, 3));
    auto rep2 = validate_resonance_free(bad2);
    REQUIRE_FALSE(rep2.passed());
    bool clause2 = false;
    for (const auto& issue : rep2.issues)
        clause2 = clause2 || issue.clause.find("weight") != std::string::npos;
    REQUIRE(clause2);

    // in-block difference at infinity in Z \ {0}
    RegularSingularity s;
    s.point = K(0);
    s.residue_matrix = Matrix<K>(2, 2, {K(mpq_class(1, 2)), K(0), K(0), K(mpq_class(3, 2))});
    s.eigen = {{K(mpq_class(1, 2)), mpq_class(0), {K(1), K(0)}},
               {K(mpq_class(3, 2)), mpq_class(0), {K(0), K(1)}}};
    IrregularData irr;
    irr.a_diagonal = {K(1), K(1)};
    irr.blocks = {0, 2};
    irr.c_diagonal = {K(mpq_class(-1, 2)), K(mpq_class(-3, 2))};
    irr.weights = {mpq_class(0), mpq_class(0)};
    ParabolicConnection bad3(2, {s}, irr);
    auto rep3 = validate_resonance_free(bad3);
    REQUIRE_FALSE(rep3.passed());
    bool diff_clause = false;
    for (const auto& issue : rep3.issues)
        diff_clause = diff_clause || issue.clause.find("differ") != std::string::npos;
    REQUIRE(diff_clause);
    // the finite-side clauses alone flag the same pair at p_1
    REQUIRE_FALSE(validate_resonance_free_finite(bad3).passed());
}

TEST_CASE("admissibility ties zero eigenvectors to weight zero") {
    auto conn = two_point_rank2(mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 2), mpq_class(0));
    REQUIRE(validate_admissible(conn).passed());

    RegularSingularity s1;
    s1.point = K(0);
    s1.residue_matrix = Matrix<K>(2, 2, {K(mpq_class(1, 5)), K(0), K(0), K(0)});
    s1.eigen = {{K(0), mpq_class(1, 4), {K(0), K(1)}},
                {K(mpq_class(1, 5)), mpq_class(1, 4), {K(1), K(0)}}};
    IrregularData irr;
    irr.a_diagonal = {K(1), K(2)};
    irr.blocks = {0, 1, 2};
    irr.c_diagonal = {K(mpq_class(-1, 5)), K(0)};
    irr.weights = {mpq_class(0), mpq_class(0)};
    ParabolicConnection bad(2, {s1}, irr);
    auto rep = validate_admissible(bad);
    REQUIRE_FALSE(rep.passed());
    REQUIRE(rep.issues.size() == 1);
}

TEST_CASE("fixture corpus validation status") {
    for (const auto& name : testdata::fixture_names()) {
        auto conn = load_fixture(name);
        bool full = validate_resonance_free(conn).passed() && validate_admissible(conn).passed();
        if (name == "f07_rank2_null.json") {
            REQUIRE_FALSE(full);
            // still transformable: finite side resonance-free and admissible
            REQUIRE_NOTHROW(require_transform_ready(conn));
        } else {
            REQUIRE(full);
        }
    }
    auto resonant = rank1(K(2), K(1), mpq_class(1, 4), K(1), mpq_class(1, 3));
    REQUIRE_THROWS_AS(require_transform_ready(resonant), domain_error);
}

TEST_CASE("parabolic degree is the total weight sum") {
    auto zero = rank1(K(2), K(mpq_class(1, 2)), mpq_class(0), K(1), mpq_class(0));
    REQUIRE(parabolic_degree(zero) == 0);

    // weights {1/3, 2/3} at p_1 and {0, 0} at infinity
    RegularSingularity s;
    s.point = K(0);
    s.residue_matrix = Matrix<K>(2, 2, {K(mpq_class(1, 5)), K(0), K(0), K(mpq_class(1, 7))});
    s.eigen = {{K(mpq_class(1, 5)), mpq_class(1, 3), {K(1), K(0)}},
               {K(mpq_class(1, 7)), mpq_class(2, 3), {K(0), K(1)}}};
    IrregularData irr;
    irr.a_diagonal = {K(1), K(1)};
    irr.blocks = {0, 2};
    irr.c_diagonal = {K(mpq_class(-1, 5)), K(mpq_class(-1, 7))};
    irr.weights = {mpq_class(0), mpq_class(0)};
    REQUIRE(parabolic_degree(ParabolicConnection(2, {s}, irr)) == 1);

    // weights {1/4} at each of two points and {1/2, 0} at infinity
    auto conn = two_point_rank2(mpq_class(1, 4), mpq_class(1, 4), mpq_class(1, 2), mpq_class(0));
    REQUIRE(parabolic_degree(conn) == 1);
}

TEST_CASE("d-module degree, parabolic degree, slope") {
    // rank 1, mu = 1/2 at p_1, mu at infinity -1/2: degree 0
    auto conn = rank1(K(2), K(mpq_class(1, 2)), mpq_class(1, 4), K(1), mpq_class(1, 3));
    auto d = dmodule_degrees(conn);
    REQUIRE(d.deg == K(0));
    REQUIRE(d.pdeg == K(mpq_class(7, 12)));
    REQUIRE(d.slope == K(mpq_class(7, 12)));

    // the trivial-bundle normal form pins deg to zero corpus-wide
    struct Frozen {
        const char* name;
        mpq_class pdeg;
    };
    const Frozen frozen[] = {
        {"f01_rank1.json", mpq_class(7, 12)},
        {"f02_rank1_gaussian.json", mpq_class(12, 35)},
        {"f03_rank1_twopoints.json", mpq_class(167, 385)},
        {"f04_rank1_fivepoints.json", mpq_class(745945, 2800733)},
        {"f05_rank2_block.json", mpq_class(733, 792)},
        {"f06_rank2_kernel.json", mpq_class(2435, 3432)},
        {"f07_rank2_null.json", mpq_class(0)},
        {"f08_rank3_mixed.json", mpq_class(7379, 6120)},
        {"f09_rank6_stress.json", mpq_class(21073, 8568)},
    };
    for (const auto& f : frozen) {
        auto c = load_fixture(f.name);
        auto dd = dmodule_degrees(c);
        REQUIRE(dd.deg == K(0));
        REQUIRE(dd.pdeg == K(f.pdeg));
        REQUIRE(dd.slope == K(f.pdeg / c.rank()));
        REQUIRE(parabolic_degree(c) == f.pdeg);
    }
}

TEST_CASE("filtration shifts move the weight by the level") {
    K half(mpq_class(1, 2));
    auto id = extend_filtration(half, half, mpq_class(1, 4), 0);
    REQUIRE(id.first == half);
    REQUIRE(id.second == mpq_class(1, 4));

    auto up = extend_filtration(K(mpq_class(5, 2)), half, mpq_class(1, 4), 2);
    REQUIRE(up.first == K(mpq_class(5, 2)));
    REQUIRE(up.second == mpq_class(9, 4));

    auto down = extend_filtration(K(mpq_class(-4, 3)), K(mpq_class(-1, 3)), mpq_class(0), -1);
    REQUIRE(down.first == K(mpq_class(-4, 3)));
    REQUIRE(down.second == mpq_class(-1));

    // transport by n then m equals transport by n + m
    K mu(mpq_class(1, 3));
    mpq_class beta(1, 5);
    auto first = extend_filtration(mu + K(2), mu, beta, 2);
    auto second = extend_filtration(first.first + K(3), first.first, first.second, 3);
    auto direct = extend_filtration(mu + K(5), mu, beta, 5);
    REQUIRE(second == direct);

    REQUIRE_THROWS_AS(extend_filtration(K(mpq_class(1, 2)), K(mpq_class(1, 4)), mpq_class(0), 0),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(extend_filtration(K(mpq_class(3, 2)), half, mpq_class(0), 2),
                      std::invalid_argument);
}

TEST_CASE("slope of eigenvector-spanned sub-data") {
    // whole space reproduces the connection slope
    auto f05 = load_fixture("f05_rank2_block.json");
    SubData whole{{{0, 1}, {0, 1}}, {0, 1}};
    REQUIRE(slope_of_subdata(f05, whole) == dmodule_degrees(f05).slope);

    // rank-1 line (mu = 1/2, beta = 1/4) with (mu_inf, beta_inf) = (-1/2, 0)
    auto line = rank1(K(0), K(mpq_class(1, 2)), mpq_class(1, 4), K(3), mpq_class(0));
    REQUIRE(slope_of_subdata(line, SubData{{{0}}, {0}}) == K(mpq_class(1, 4)));

    // proper sub-line of the rank-2 fixture
    SubData sub{{{0}, {0}}, {0}};
    REQUIRE(slope_of_subdata(f05, sub) == K(mpq_class(101, 264)));

    REQUIRE_THROWS_AS(slope_of_subdata(f05, SubData{{{}, {}}, {}}), std::invalid_argument);
    REQUIRE_THROWS_AS(slope_of_subdata(f05, SubData{{{0}}, {0}}), std::invalid_argument);
    REQUIRE_THROWS_AS(slope_of_subdata(f05, SubData{{{0, 0}, {0, 1}}, {0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(slope_of_subdata(f05, SubData{{{0, 2}, {0, 1}}, {0, 1}}), std::invalid_argument);
    REQUIRE_THROWS_AS(slope_of_subdata(f05, SubData{{{0}, {0}}, {0, 1}}), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "minlap/minlap.hpp"

using namespace minlap;
using testdata::load_fixture;
using RF = RationalFunction;

namespace {
Section<RF> basis_combination(const GlobalSectionModel& model, const std::vector<RF>& coords) {
    return expand_in_basis<RF>(model, coords);
}
}  // namespace

TEST_CASE("model dimensions follow the rank formula") {
    struct Dim {
        const char* name;
        int cokernel;
    };
    const Dim dims[] = {
        {"f01_rank1.json", 1}, {"f02_rank1_gaussian.json", 1}, {"f03_rank1_twopoints.json", 2},
        {"f04_rank1_fivepoints.json", 5}, {"f05_rank2_block.json", 4}, {"f06_rank2_kernel.json", 3},
        {"f07_rank2_null.json", 0}, {"f08_rank3_mixed.json", 5}, {"f09_rank6_stress.json", 8},
    };
    for (const auto& d : dims) {
        auto conn = load_fixture(d.name);
        auto model = build_model(conn);
        REQUIRE(model.cokernel_dimension() == d.cokernel);
        REQUIRE(model.cokernel_dimension() == conn.transformed_rank());
        REQUIRE(model.h0f_dimension() == conn.rank() + d.cokernel);
        // labels are (point, nonzero eigen slot), point-major and slot-ordered
        int seen = 0;
        for (int j = 0; j < conn.point_count(); ++j) {
            int zeros = conn.at_point(j).zero_multiplicity;
            for (int k = zeros; k < conn.rank(); ++k) {
                REQUIRE(model.basis_labels()[seen] == std::make_pair(j, k));
                ++seen;
            }
        }
        REQUIRE(seen == d.cokernel);
    }
}

TEST_CASE("build_model rejects what the gate rejects") {
    auto resonant = testdata::rank1(K(2), K(1), mpq_class(1, 4), K(1), mpq_class(1, 3));
    REQUIRE_THROWS_AS(build_model(resonant), domain_error);
}

TEST_CASE("reducing dx lands on mu/(xi - xi_1) times the residue class") {
    auto conn = load_fixture("f01_rank1.json");
    auto model = build_model(conn);
    RF xi = RF::variable();

    Section<RF> s(conn.point_count(), conn.rank());
    s.add_poly(0, RF(K(1)), {RF(K(1))});
    auto red = reduce_section(model, s, xi);

    RF expected = RF(K(mpq_class(1, 2))) / (xi - RF(K(1)));
    REQUIRE(red.coords == std::vector<RF>{expected});

    // certificate: s = nabla(correction) + coords * basis
    Section<RF> rhs = apply_twisted(conn, xi, red.correction);
    rhs += basis_combination(model, red.coords);
    REQUIRE(rhs == s);
}

TEST_CASE("double poles reduce through the residue shift") {
    auto conn = load_fixture("f01_rank1.json");
    auto model = build_model(conn);
    RF xi = RF::variable();

    Section<RF> s(conn.point_count(), conn.rank());
    s.add_pole(0, 2, RF(K(1)), {RF(K(1))});
    auto red = reduce_section(model, s, xi);

    REQUIRE(red.coords == std::vector<RF>{RF(Poly(std::vector<K>{K(2), K(-2)}))});
    Section<RF> rhs = apply_twisted(conn, xi, red.correction);
    rhs += basis_combination(model, red.coords);
    REQUIRE(rhs == s);
}

TEST_CASE("sections already in basis form read off directly") {
    auto conn = load_fixture("f03_rank1_twopoints.json");
    auto model = build_model(conn);
    RF xi = RF::variable();

    Section<RF> s(conn.point_count(), conn.rank());
    s.add_pole(0, 1, RF(K(3)), {RF(K(1))});
    s.add_pole(1, 1, RF(K(-7)), {RF(K(1))});
    auto red = reduce_section(model, s, xi);
    REQUIRE(red.coords == std::vector<RF>{RF(K(3)), RF(K(-7))});
    REQUIRE(red.correction.is_zero());
}

TEST_CASE("images of the twisted operator reduce to zero") {
    for (const char* name : {"f05_rank2_block.json", "f06_rank2_kernel.json", "f08_rank3_mixed.json"}) {
        auto conn = load_fixture(name);
        auto model = build_model(conn);
        RF xi = RF::variable();

        Section<RF> g(conn.point_count(), conn.rank());
        g.add_pole(0, 2, RF(K(5)), unit_vec<RF>(conn.rank(), 0));
        g.add_pole(conn.point_count() - 1, 1, RF(K(mpq_class(2, 3))),
                   unit_vec<RF>(conn.rank(), conn.rank() - 1));
        g.add_poly(3, RF(K(-2)), unit_vec<RF>(conn.rank(), 0));
        g.add_poly(0, RF(K::i()), unit_vec<RF>(conn.rank(), conn.rank() - 1));

        auto red = reduce_section(model, apply_twisted(conn, xi, g), xi);
        for (const RF& c : red.coords) REQUIRE(c.is_zero());
    }
}

TEST_CASE("sections outside the module are refused") {
    auto conn = load_fixture("f06_rank2_kernel.json");
    auto model = build_model(conn);
    RF xi = RF::variable();

    // residue (1,0) at p_1 is not in im A^1 = span (1,1)
    Section<RF> s(conn.point_count(), conn.rank());
    s.add_pole(0, 1, RF(K(1)), {RF(K(1)), RF(K(0))});
    REQUIRE_THROWS_AS(reduce_section(model, s, xi), domain_error);
    REQUIRE_THROWS_WITH(reduce_section(model, s, xi),
                        Catch::Matchers::ContainsSubstring("does not lie in the module"));

    // the in-module direction along (1,1) reduces fine
    Section<RF> t(conn.point_count(), conn.rank());
    t.add_pole(0, 1, RF(K(1)), {RF(K(1)), RF(K(1))});
    REQUIRE_NOTHROW(reduce_section(model, t, xi));
}

TEST_CASE("numeric fiber reduction matches the symbolic one") {
    auto conn = load_fixture("f05_rank2_block.json");
    auto model = build_model(conn);
    RF xi = RF::variable();
    K xi0(mpq_class(7, 3));

    Section<RF> s(conn.point_count(), conn.rank());
    s.add_pole(0, 2, RF(K(1)), {RF(K(1)), RF(K(2))});
    s.add_poly(1, RF(K(3)), {RF(K(0)), RF(K(1))});
    auto sym = reduce_section(model, s, xi);

    Section<K> sk(conn.point_count(), conn.rank());
    sk.add_pole(0, 2, K(1), {K(1), K(2)});
    sk.add_poly(1, K(3), {K(0), K(1)});
    auto num = reduce_section(model, sk, xi0);

    REQUIRE(sym.coords.size() == num.coords.size());
    for (std::size_t k = 0; k < num.coords.size(); ++k)
        REQUIRE(sym.coords[k].eval(xi0) == num.coords[k]);

    Section<K> rhs = apply_twisted(conn, xi0, num.correction);
    rhs += expand_in_basis<K>(model, num.coords);
    REQUIRE(rhs == sk);
}

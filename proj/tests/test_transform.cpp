#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "minlap/minlap.hpp"

using namespace minlap;
using testdata::load_fixture;
using RF = RationalFunction;

TEST_CASE("rank-1 transform has the closed form p_1 + mu/(xi - xi_1)") {
    auto conn = load_fixture("f01_rank1.json");
    auto t = transform_connection(build_model(conn));
    REQUIRE(t.x_action.rows() == 1);
    RF xi = RF::variable();
    RF expected = RF(K(2)) + RF(K(mpq_class(1, 2))) / (xi - RF(K(1)));
    REQUIRE(t.x_action.at(0, 0) == expected);
    REQUIRE(t.basis_labels == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(t.finite_points == std::vector<K>{K(1)});
}

TEST_CASE("two-point rank-1 transform freezes exactly") {
    auto conn = load_fixture("f03_rank1_twopoints.json");
    auto t = transform_connection(build_model(conn));
    REQUIRE(t.x_action.rows() == 2);
    RF xi = RF::variable();
    RF pole = RF(K(1)) / (xi - RF(K(2)));
    K half(mpq_class(1, 2)), third(mpq_class(1, 3));
    // row j carries residue mu_j in every column, diagonal adds p_j
    REQUIRE(t.x_action.at(0, 0) == RF(K(-1)) + RF(half) * pole);
    REQUIRE(t.x_action.at(0, 1) == RF(half) * pole);
    REQUIRE(t.x_action.at(1, 0) == RF(third) * pole);
    REQUIRE(t.x_action.at(1, 1) == RF(K(1)) + RF(third) * pole);
}

TEST_CASE("poles are confined to the leading-matrix spectrum and stay simple") {
    for (const auto& name : testdata::fixture_names()) {
        auto conn = load_fixture(name);
        auto t = transform_connection(build_model(conn));
        REQUIRE(poles_confined(t));
        REQUIRE(bounded_at_infinity(t));
        for (int i = 0; i < t.x_action.rows(); ++i)
            for (int j = 0; j < t.x_action.cols(); ++j)
                for (const K& xi_l : t.finite_points)
                    REQUIRE(t.x_action.at(i, j).pole_order(xi_l) <= 1);
    }
}

TEST_CASE("residue data at a transform-side point") {
    auto conn = load_fixture("f03_rank1_twopoints.json");
    auto t = transform_connection(build_model(conn));
    auto rd = residue_data_at(t, K(2));
    // residue of -X(xi)dxi at xi_1 = 2 has eigenvalues {-5/6, 0} = {mu_inf, 0}
    REQUIRE(rd.charpoly == Poly::from_roots({K(mpq_class(-5, 6)), K(0)}));
    REQUIRE(rd.residue.at(0, 0) == K(mpq_class(-1, 2)));
    REQUIRE(rd.residue.at(1, 1) == K(mpq_class(-1, 3)));

    // a regular point of the transform has zero residue
    auto zero = residue_data_at(t, K(77));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) REQUIRE(zero.residue.at(i, j) == K(0));
}

TEST_CASE("formal data at infinity match the polar-part rule") {
    auto conn = load_fixture("f03_rank1_twopoints.json");
    auto t = transform_connection(build_model(conn));
    auto fd = formal_data_at_infinity(t);
    // leading term diag(p_j); the block diagonal of the residue term carries
    // the mu^j_k, off-block entries are unconstrained
    REQUIRE(fd.leading == Matrix<K>(2, 2, {K(-1), K(0), K(0), K(1)}));
    K half(mpq_class(1, 2)), third(mpq_class(1, 3));
    REQUIRE(fd.residue == Matrix<K>(2, 2, {half, half, third, third}));
    REQUIRE(fd.residue.at(0, 0) == half);
    REQUIRE(fd.residue.at(1, 1) == third);

    auto f05 = load_fixture("f05_rank2_block.json");
    auto t5 = transform_connection(build_model(f05));
    auto fd5 = formal_data_at_infinity(t5);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            K want = (i == j) ? (i < 2 ? K(0) : K(1)) : K(0);
            REQUIRE(fd5.leading.at(i, j) == want);
        }
}

TEST_CASE("fiber cokernel specializes the symbolic transform") {
    for (const char* name : {"f01_rank1.json", "f05_rank2_block.json", "f06_rank2_kernel.json"}) {
        auto conn = load_fixture(name);
        auto model = build_model(conn);
        auto t = transform_connection(model);
        for (int v : {3, 5, 9}) {
            K xi0(v);
            auto fib = fiber_cokernel(model, xi0);
            REQUIRE(fib.dimension == conn.transformed_rank());
            REQUIRE(fib.basis_labels == t.basis_labels);
            for (int i = 0; i < fib.x_action.rows(); ++i)
                for (int j = 0; j < fib.x_action.cols(); ++j)
                    REQUIRE(fib.x_action.at(i, j) == t.x_action.at(i, j).eval(xi0));
        }
    }
}

TEST_CASE("fiber at a leading eigenvalue is refused") {
    auto conn = load_fixture("f01_rank1.json");
    auto model = build_model(conn);
    REQUIRE_THROWS_AS(fiber_cokernel(model, K(1)), domain_error);
    REQUIRE_THROWS_WITH(fiber_cokernel(model, K(1)),
                        Catch::Matchers::ContainsSubstring("residue_data_at"));
}

TEST_CASE("null transform is the empty matrix") {
    auto conn = load_fixture("f07_rank2_null.json");
    auto t = transform_connection(build_model(conn));
    REQUIRE(t.x_action.rows() == 0);
    REQUIRE(t.x_action.cols() == 0);
    REQUIRE(t.basis_labels.empty());
    // candidate points are listed per diagonal block even when the rank is zero
    REQUIRE(t.finite_points == std::vector<K>{K(1)});
}

TEST_CASE("inverse transform flips the variable and the points") {
    auto conn = load_fixture("f01_rank1.json");
    auto t = transform_connection(build_model(conn));
    auto pred = predict(conn);
    auto exp = expectation_from(pred);
    auto harvested = read_as_connection(t, exp);
    auto back = inverse_transform(harvested);
    // the recovered singular point is p_1 = 2 again
    REQUIRE(back.finite_points == std::vector<K>{K(2)});
    auto rd = residue_data_at(back, K(2));
    REQUIRE(rd.charpoly == Poly::from_roots({K(mpq_class(1, 2))}));
}

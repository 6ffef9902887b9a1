#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "minlap/minlap.hpp"

using namespace minlap;
using testdata::load_fixture;

namespace {
std::pair<K, mpq_class> pr(int vn, int vd, int wn, int wd) {
    return {K(mpq_class(vn, vd)), mpq_class(wn, wd)};
}
}  // namespace

TEST_CASE("rank-1 prediction places the infinity block at xi_1") {
    auto conn = load_fixture("f01_rank1.json");
    auto p = predict(conn);
    REQUIRE(p.predicted_rank == 1);
    REQUIRE(p.regular_points.size() == 1);
    REQUIRE(p.regular_points[0].point == K(1));
    REQUIRE(p.regular_points[0].spectrum ==
            std::vector<std::pair<K, mpq_class>>{pr(-1, 2, 1, 3)});
    REQUIRE(p.regular_points[0].zero_count == 0);
    REQUIRE(p.labels == std::vector<std::pair<int, int>>{{0, 0}});
    REQUIRE(p.infinity_leading == std::vector<K>{K(2)});
    REQUIRE(p.infinity_residue ==
            std::vector<std::pair<K, mpq_class>>{pr(1, 2, 1, 4)});
    REQUIRE(p.lambda == std::vector<K>{K(mpq_class(1, 8))});
    REQUIRE(p.predicted_pdeg == K(mpq_class(7, 12)));
}

TEST_CASE("block prediction copies the infinity block and pads zeros") {
    auto p = predict(load_fixture("f05_rank2_block.json"));
    REQUIRE(p.predicted_rank == 4);
    REQUIRE(p.regular_points.size() == 1);
    REQUIRE(p.regular_points[0].point == K(1));
    REQUIRE(p.regular_points[0].spectrum ==
            std::vector<std::pair<K, mpq_class>>{pr(-7, 10, 1, 11), pr(-10, 21, 2, 11),
                                                 pr(0, 1, 0, 1), pr(0, 1, 0, 1)});
    REQUIRE(p.regular_points[0].zero_count == 2);
    REQUIRE(p.infinity_leading == std::vector<K>{K(0), K(0), K(1), K(1)});
    REQUIRE(p.infinity_residue ==
            std::vector<std::pair<K, mpq_class>>{pr(1, 2, 1, 6), pr(1, 3, 1, 4), pr(1, 5, 1, 8),
                                                 pr(1, 7, 1, 9)});
    REQUIRE(p.lambda == std::vector<K>{K(mpq_class(1, 6)), K(mpq_class(1, 24)),
                                       K(mpq_class(3, 80)), K(mpq_class(1, 63))});
    REQUIRE(p.predicted_pdeg == K(mpq_class(733, 792)));
}

TEST_CASE("kernel fixture prediction skips the zero slots") {
    auto p = predict(load_fixture("f06_rank2_kernel.json"));
    REQUIRE(p.predicted_rank == 3);
    REQUIRE(p.regular_points.size() == 2);
    REQUIRE(p.regular_points[0].point == K(2));
    REQUIRE(p.regular_points[0].spectrum ==
            std::vector<std::pair<K, mpq_class>>{pr(-1, 5, 1, 11), pr(0, 1, 0, 1), pr(0, 1, 0, 1)});
    REQUIRE(p.regular_points[1].point == K(-2));
    REQUIRE(p.regular_points[1].spectrum ==
            std::vector<std::pair<K, mpq_class>>{pr(-4, 21, 1, 13), pr(0, 1, 0, 1), pr(0, 1, 0, 1)});
    REQUIRE(p.labels == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {1, 1}});
    REQUIRE(p.infinity_leading == std::vector<K>{K(1), K(-1), K(-1)});
    REQUIRE(p.lambda == std::vector<K>{K(mpq_class(1, 24)), K(mpq_class(1, 60)),
                                       K(mpq_class(-15, 112))});
    REQUIRE(p.predicted_pdeg == K(mpq_class(2435, 3432)));
}

TEST_CASE("null input predicts an empty transform") {
    auto p = predict(load_fixture("f07_rank2_null.json"));
    REQUIRE(p.predicted_rank == 0);
    REQUIRE(p.regular_points.empty());
    REQUIRE(p.labels.empty());
    REQUIRE(p.predicted_pdeg == K(0));
    REQUIRE(predicted_resonance_free(p).passed());
}

TEST_CASE("predicted parabolic degree equals the input parabolic degree") {
    for (const auto& name : testdata::fixture_names()) {
        auto conn = load_fixture(name);
        auto p = predict(conn);
        REQUIRE(p.predicted_pdeg == dmodule_degrees(conn).pdeg);
    }
}

TEST_CASE("resonance-freeness transports to the predicted data") {
    for (const auto& name : testdata::fixture_names()) {
        auto conn = load_fixture(name);
        if (!validate_resonance_free(conn).passed()) continue;
        REQUIRE(predicted_resonance_free(predict(conn)).passed());
    }
}

TEST_CASE("lambda is nonzero exactly on the nonzero eigenvalues") {
    for (const auto& name : testdata::fixture_names()) {
        auto p = predict(load_fixture(name));
        for (std::size_t k = 0; k < p.lambda.size(); ++k) {
            const auto& [mu, beta] = p.infinity_residue[k];
            REQUIRE(p.lambda[k] == (mu - K(beta)) / K(2));
            REQUIRE(!mu.is_zero());
            REQUIRE(!p.lambda[k].is_zero());
        }
    }
}

TEST_CASE("stationary phase verification passes corpus-wide") {
    for (const auto& name : testdata::fixture_names()) {
        auto conn = load_fixture(name);
        auto t = transform_connection(build_model(conn));
        auto rep = verify_stationary_phase(predict(conn), t);
        INFO(name);
        for (const auto& item : rep.items) {
            INFO(item.item + ": " + item.detail);
            REQUIRE(item.pass);
        }
        REQUIRE(rep.all_pass());
        if (name == "f07_rank2_null.json")
            REQUIRE(rep.convention == "not applicable: no finite singularities on the transform side");
        else
            REQUIRE(rep.convention == "spectra match the prediction exactly");
    }
}

TEST_CASE("the transform followed by its inverse recovers the input") {
    for (const auto& name : testdata::fixture_names()) {
        auto conn = load_fixture(name);
        auto rep = verify_involution(conn);
        INFO(name);
        for (const auto& item : rep.items) {
            INFO(item.item + ": " + item.detail);
            REQUIRE(item.pass);
        }
        REQUIRE(rep.all_pass());
    }
    auto vac = verify_involution(load_fixture("f07_rank2_null.json"));
    REQUIRE(vac.items.size() == 1);
    REQUIRE(vac.items[0].item == "round trip");
    REQUIRE(vac.convention == "not applicable: nothing to recover");
}

TEST_CASE("harvested transform-side data validate in full") {
    auto conn = load_fixture("f05_rank2_block.json");
    auto t = transform_connection(build_model(conn));
    auto harvested = read_as_connection(t, expectation_from(predict(conn)));
    REQUIRE(validate_resonance_free(harvested).passed());
    REQUIRE(validate_admissible(harvested).passed());
    REQUIRE(harvested.rank() == 4);
    REQUIRE(harvested.point_count() == 1);
    REQUIRE(harvested.at_point(0).point == K(1));
    // leading data at infinity on the xi-side are minus the original points
    REQUIRE(harvested.irregular().a_diagonal ==
            std::vector<K>{K(0), K(0), K(-1), K(-1)});
    REQUIRE(harvested.irregular().blocks == std::vector<int>{0, 2, 4});
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "minlap/minlap.hpp"

using namespace minlap;
using testdata::read_file;

TEST_CASE("documents round trip byte-stably") {
    for (const auto& name : testdata::fixture_names()) {
        std::string text = read_file(std::string(MINLAP_FIXTURE_DIR) + "/" + name);
        ParabolicConnection conn = parse_connection_text(text);
        ordered_json once = connection_to_json(conn);
        ParabolicConnection again = parse_connection_text(once.dump());
        ordered_json twice = connection_to_json(again);
        REQUIRE(once.dump(2) == twice.dump(2));
        REQUIRE(again.rank() == conn.rank());
        REQUIRE(again.point_count() == conn.point_count());
    }
}

TEST_CASE("numbers are rejected where exact fraction strings are required") {
    std::string text = read_file(std::string(MINLAP_TEST_DATA_DIR) + "/bad_parse.json");
    REQUIRE_THROWS_AS(parse_connection_text(text), parse_error);
    REQUIRE_THROWS_WITH(parse_connection_text(text),
                        Catch::Matchers::ContainsSubstring("never a number"));
}

TEST_CASE("malformed documents name the offending field") {
    REQUIRE_THROWS_AS(parse_connection_text("not json at all"), parse_error);
    REQUIRE_THROWS_AS(parse_connection_text("{}"), parse_error);
    REQUIRE_THROWS_AS(parse_connection_text(R"({"rank": 1})"), parse_error);

    // missing weights array inside the irregular block
    std::string no_weights = R"({
      "rank": 1,
      "regular_singularities": [
        {"point": ["2", "0"],
         "residue_matrix": [["1/2"]],
         "eigen": [{"value": "1/2", "weight": "1/4", "vector": ["1"]}]}
      ],
      "irregular": {"A_diagonal": ["1"], "blocks": [0, 1], "C_diagonal": ["-1/2"]}
    })";
    REQUIRE_THROWS_AS(parse_connection_text(no_weights), parse_error);

    // structurally sound JSON whose data fail construction surfaces the
    // domain error, not a parse error
    std::string bad_eigen = read_file(std::string(MINLAP_TEST_DATA_DIR) + "/bad_eigen.json");
    REQUIRE_THROWS_AS(parse_connection_text(bad_eigen), domain_error);
}

TEST_CASE("gaussian entries parse from component pairs") {
    auto conn = testdata::load_fixture("f02_rank1_gaussian.json");
    REQUIRE(conn.at_point(0).point == K::i());
    REQUIRE(conn.at_point(0).eigen[0].value == K(mpq_class(1, 2), mpq_class(1, 3)));
    REQUIRE(conn.irregular().a_diagonal[0] == K(mpq_class(2), mpq_class(1)));
    ordered_json doc = connection_to_json(conn);
    REQUIRE(doc["regular_singularities"][0]["point"][0] == "0/1");
    REQUIRE(doc["regular_singularities"][0]["point"][1] == "1/1");
}

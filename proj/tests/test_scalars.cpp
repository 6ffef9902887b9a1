#include <catch2/catch_amalgamated.hpp>

#include "minlap/minlap.hpp"

using namespace minlap;

TEST_CASE("rational literals parse and format in lowest terms") {
    REQUIRE(parse_rational("3/4") == mpq_class(3, 4));
    REQUIRE(parse_rational("-1/2") == mpq_class(-1, 2));
    REQUIRE(parse_rational("5") == 5);
    REQUIRE(parse_rational("6/4") == mpq_class(3, 2));
    REQUIRE(format_rational(parse_rational("6/4")) == "3/2");
    REQUIRE(format_rational(mpq_class(0)) == "0/1");
    REQUIRE_THROWS_AS(parse_rational(""), parse_error);
    REQUIRE_THROWS_AS(parse_rational("0.25"), parse_error);
    REQUIRE_THROWS_AS(parse_rational("1/0"), parse_error);
    REQUIRE_THROWS_AS(parse_rational("abc"), parse_error);
    REQUIRE_THROWS_AS(parse_rational("1/-2"), parse_error);
}

TEST_CASE("gaussian rational field arithmetic is exact") {
    K one_plus_i(mpq_class(1), mpq_class(1));
    K one_minus_i = one_plus_i.conj();
    REQUIRE(one_plus_i * one_minus_i == K(2));
    REQUIRE(one_plus_i.norm() == 2);
    REQUIRE(K::i() * K::i() == K(-1));
    REQUIRE(K(1) / one_plus_i == K(mpq_class(1, 2), mpq_class(-1, 2)));
    K a(mpq_class(2, 3), mpq_class(-1, 5));
    K b(mpq_class(7, 11), mpq_class(4, 9));
    REQUIRE((a + b) - b == a);
    REQUIRE((a * b) / b == a);
    REQUIRE(a + (-a) == K(0));
    REQUIRE_THROWS_AS(a / K(0), domain_error);
}

TEST_CASE("gaussian rational predicates") {
    REQUIRE(K(3).is_integer());
    REQUIRE_FALSE(K(mpq_class(1, 2)).is_integer());
    REQUIRE_FALSE(K(mpq_class(1), mpq_class(1)).is_integer());
    REQUIRE(K(mpq_class(2), mpq_class(1, 3)).real_part_integral());
    REQUIRE(K(mpq_class(1, 2)).is_real());
    REQUIRE(K(0).is_zero());
    REQUIRE(K(1).is_one());
}

TEST_CASE("gaussian rational string round trip") {
    K a(mpq_class(-3, 4), mpq_class(5, 7));
    REQUIRE(a.to_string() == "-3/4+5/7*i");
    REQUIRE(K::from_string("-3/4+5/7*i") == a);
    REQUIRE(K::from_string(K(2).to_string()) == K(2));
    REQUIRE(K(mpq_class(1, 2), mpq_class(-1, 3)).to_string() == "1/2-1/3*i");
    REQUIRE(K::from_string("1/2-1/3*i") == K(mpq_class(1, 2), mpq_class(-1, 3)));
    REQUIRE_THROWS_AS(K::from_string("0.5+1*i"), parse_error);
    REQUIRE_THROWS_AS(K::from_string(""), parse_error);
}

TEST_CASE("exact square roots in Q(i)") {
    REQUIRE(sqrt_exact(K(mpq_class(9, 4))).value() == K(mpq_class(3, 2)));
    REQUIRE(sqrt_exact(K(-1)).value() * sqrt_exact(K(-1)).value() == K(-1));
    K two_i(mpq_class(0), mpq_class(2));
    auto s = sqrt_exact(two_i);
    REQUIRE(s.has_value());
    REQUIRE(*s * *s == two_i);
    REQUIRE_FALSE(sqrt_exact(K(2)).has_value());
    REQUIRE_FALSE(sqrt_exact(K::i()).has_value());
    REQUIRE(sqrt_exact(K(0)).value() == K(0));
    K z(mpq_class(-5, 9), mpq_class(12, 9));
    auto sz = sqrt_exact(z);
    REQUIRE(sz.has_value());
    REQUIRE(*sz * *sz == z);
}

TEST_CASE("lexicographic order is a strict total order on samples") {
    std::vector<K> v = {K(0), K(1), K(-1), K::i(), -K::i(), K(mpq_class(1, 2), mpq_class(1, 3))};
    for (const K& x : v)
        for (const K& y : v) {
            int lt = x < y, gt = y < x, eq = x == y;
            REQUIRE(lt + gt + eq == 1);
        }
}

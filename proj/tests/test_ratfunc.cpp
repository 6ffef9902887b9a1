#include <catch2/catch_amalgamated.hpp>

#include "minlap/minlap.hpp"

using namespace minlap;

namespace {
Poly P(std::vector<int> c) {
    std::vector<K> v;
    for (int x : c) v.push_back(K(x));
    return Poly(std::move(v));
}
using RF = RationalFunction;
}  // namespace

TEST_CASE("rational functions normalize to coprime with monic denominator") {
    RF f(P({0, 2}), P({0, 0, 4}));  // 2x / 4x^2 = (1/2)/x
    REQUIRE(f.den() == P({0, 1}));
    REQUIRE(f.num() == Poly(K(mpq_class(1, 2))));
    REQUIRE(RF(P({0}), P({1})).is_zero());
    REQUIRE_THROWS_AS(RF(P({1}), Poly()), domain_error);
}

TEST_CASE("rational function field arithmetic round trips") {
    RF x = RF::variable();
    RF f = RF(K(1)) / (x - RF(K(1)));
    RF g = (x * x + RF(K(3))) / (x + RF(K(2)));
    REQUIRE((f + g) - g == f);
    REQUIRE((f * g) / g == f);
    REQUIRE(f - f == RF());
    REQUIRE(-(-f) == f);
    REQUIRE_THROWS_AS(f / RF(), domain_error);
    REQUIRE(f.eval(K(2)) == K(1));
    REQUIRE(f.eval(K(3)) == K(mpq_class(1, 2)));
}

TEST_CASE("negate_arg substitutes -x") {
    RF x = RF::variable();
    RF f = (x + RF(K(1))) / (x * x - x + RF(K(2)));
    RF g = f.negate_arg();
    REQUIRE(g == (-x + RF(K(1))) / (x * x + x + RF(K(2))));
    REQUIRE(g.negate_arg() == f);
    REQUIRE(g.eval(K(5)) == f.eval(K(-5)));
}

TEST_CASE("laurent coefficients at a finite point") {
    RF x = RF::variable();
    // (3x^2+1)/(x-2) = 13/(x-2) + 12 + 3(x-2)
    RF f = (RF(K(3)) * x * x + RF(K(1))) / (x - RF(K(2)));
    auto c = laurent_coefficients(f, K(2), -1, 2);
    REQUIRE(c == std::vector<K>{K(13), K(12), K(3), K(0)});

    // orders below the pole order come back as zeros
    RF g = RF(K(1)) / ((x - RF(K(1))) * (x - RF(K(1))));
    auto d = laurent_coefficients(g, K(1), -3, -1);
    REQUIRE(d == std::vector<K>{K(0), K(1), K(0)});

    // constants have no residue anywhere
    REQUIRE(residue_at(RF(K(7)), K(3)) == K(0));
    REQUIRE(residue_at(RF(K(1)) / (x - RF(K(4))), K(4)) == K(1));
    // 1/(x(x-1)): residue -1 at 0, +1 at 1
    RF h = RF(K(1)) / (x * (x - RF(K(1))));
    REQUIRE(residue_at(h, K(0)) == K(-1));
    REQUIRE(residue_at(h, K(1)) == K(1));
}

TEST_CASE("laurent expansion at infinity in 1/x") {
    RF x = RF::variable();
    // (2x^2+3x+5)/(x^2+1) = 2 + 3/x + 3/x^2 - 3/x^3 + ...
    RF f = (RF(K(2)) * x * x + RF(K(3)) * x + RF(K(5))) / (x * x + RF(K(1)));
    auto c = laurent_at_infinity(f, 0, 3);
    REQUIRE(c == std::vector<K>{K(2), K(3), K(3), K(-3)});

    // mu/(x - a) starts at order 1 with coefficient mu
    K mu(mpq_class(1, 2)), a(7);
    RF g = RF(mu) / (x - RF(a));
    auto d = laurent_at_infinity(g, 0, 2);
    REQUIRE(d == std::vector<K>{K(0), mu, mu * a});

    // a polynomial has positive orders at infinity
    auto e = laurent_at_infinity(x * x, -2, 0);
    REQUIRE(e == std::vector<K>{K(1), K(0), K(0)});
}

TEST_CASE("rational function string form") {
    RF x = RF::variable();
    RF f = (RF(K(2)) * x - RF(K(mpq_class(3, 2)))) / (x - RF(K(1)));
    REQUIRE(f.to_string("xi") == "(-3/2+0/1*i+(2/1+0/1*i)*xi)/(-1/1+0/1*i+(1/1+0/1*i)*xi)");
    REQUIRE(RF().to_string("x") == "0/1+0/1*i");
    REQUIRE(RF(K(5)).to_string("x") == "5/1+0/1*i");
}

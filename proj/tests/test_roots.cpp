#include <catch2/catch_amalgamated.hpp>

#include "minlap/minlap.hpp"

using namespace minlap;

namespace {
bool has_root(const RootList& rl, const K& r, int mult) {
    for (const auto& [root, m] : rl.roots)
        if (root == r) return m == mult;
    return false;
}
}  // namespace

TEST_CASE("linear and quadratic factors split") {
    Poly p = Poly::from_roots({K(mpq_class(1, 2)), K(mpq_class(-2, 3))});
    RootList rl = extract_roots(p);
    REQUIRE(rl.residual == Poly(K(1)));
    REQUIRE(has_root(rl, K(mpq_class(1, 2)), 1));
    REQUIRE(has_root(rl, K(mpq_class(-2, 3)), 1));

    RootList lin = extract_roots(Poly(std::vector<K>{K(5), K(2)}));
    REQUIRE(lin.residual == Poly(K(1)));
    REQUIRE(has_root(lin, K(mpq_class(-5, 2)), 1));
}

TEST_CASE("gaussian roots of quadratics") {
    Poly p = Poly(std::vector<K>{K(1), K(0), K(1)});  // t^2 + 1
    RootList rl = extract_roots(p);
    REQUIRE(rl.residual == Poly(K(1)));
    REQUIRE(has_root(rl, K::i(), 1));
    REQUIRE(has_root(rl, -K::i(), 1));

    // (t - (1+i))(t - (1-i)) = t^2 - 2t + 2
    RootList gl = extract_roots(Poly(std::vector<K>{K(2), K(-2), K(1)}));
    REQUIRE(has_root(gl, K(mpq_class(1), mpq_class(1)), 1));
    REQUIRE(has_root(gl, K(mpq_class(1), mpq_class(-1)), 1));
}

TEST_CASE("irreducible factors stay in the residual") {
    Poly p = Poly(std::vector<K>{K(-2), K(0), K(1)});  // t^2 - 2
    RootList rl = extract_roots(p);
    REQUIRE(rl.roots.empty());
    REQUIRE(rl.residual == p.monic());

    // (t^2 - 2)(t - 3): the rational root splits off, the rest stays
    Poly q = p * Poly::from_roots({K(3)});
    RootList ql = extract_roots(q);
    REQUIRE(has_root(ql, K(3), 1));
    REQUIRE(ql.residual.degree() == 2);
}

TEST_CASE("multiplicities and zero roots") {
    Poly p = Poly::from_roots({K(0), K(0), K(mpq_class(1, 3)), K(mpq_class(1, 3))});
    RootList rl = extract_roots(p);
    REQUIRE(rl.residual == Poly(K(1)));
    REQUIRE(has_root(rl, K(0), 2));
    REQUIRE(has_root(rl, K(mpq_class(1, 3)), 2));
}

TEST_CASE("hints split factors the divisor search would miss") {
    K mu(mpq_class(22, 7), mpq_class(5, 3));
    Poly p = Poly::from_roots({mu, K(mpq_class(1, 2)), K(mpq_class(2, 5))});
    RootList rl = extract_roots(p, {mu});
    REQUIRE(rl.residual == Poly(K(1)));
    REQUIRE(has_root(rl, mu, 1));
    REQUIRE(has_root(rl, K(mpq_class(1, 2)), 1));
    REQUIRE(has_root(rl, K(mpq_class(2, 5)), 1));
    // the divisor search finds the same roots without the hint
    REQUIRE(extract_roots(p).residual == Poly(K(1)));
}

TEST_CASE("higher-degree products over Q(i) split via divisor search") {
    std::vector<K> roots = {K(1), K(-2), K::i(), K(mpq_class(3, 2))};
    Poly p = Poly::from_roots(roots);
    RootList rl = extract_roots(p);
    REQUIRE(rl.residual == Poly(K(1)));
    for (const K& r : roots) REQUIRE(has_root(rl, r, 1));
    REQUIRE_THROWS_AS(extract_roots(Poly()), domain_error);
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "minlap/minlap.hpp"

using namespace minlap;

namespace {
Matrix<K> M2(int a, int b, int c, int d) {
    return Matrix<K>(2, 2, {K(a), K(b), K(c), K(d)});
}
}  // namespace

TEST_CASE("rref and rank") {
    Matrix<K> m = M2(1, 2, 2, 4);
    REQUIRE(rank(m) == 1);
    REQUIRE(rank(Matrix<K>::identity(3)) == 3);
    REQUIRE(rank(Matrix<K>(2, 2)) == 0);
    Matrix<K> r = m;
    auto pivots = rref(r);
    REQUIRE(pivots == std::vector<int>{0});
    REQUIRE(r.at(0, 0) == K(1));
    REQUIRE(r.at(0, 1) == K(2));
    REQUIRE(r.at(1, 0) == K(0));
}

TEST_CASE("solve_linear finds exact solutions and flags inconsistency") {
    auto s = solve_linear(Matrix<K>::identity(2), {K(3), K(4)});
    REQUIRE(s.value() == std::vector<K>{K(3), K(4)});
    auto t = solve_linear(M2(2, 0, 0, 2), {K(1), K(1)});
    REQUIRE(t.value() == std::vector<K>{K(mpq_class(1, 2)), K(mpq_class(1, 2))});
    REQUIRE_FALSE(solve_linear(M2(1, 1, 1, 1), {K(0), K(1)}).has_value());
    REQUIRE_THROWS_AS(solve_linear(M2(1, 0, 0, 1), {K(1)}), domain_error);

    // single-entry system over Q(i)(xi): (xi - 2) v = 1
    using RF = RationalFunction;
    RF x = RF::variable();
    Matrix<RF> m(1, 1, {x - RF(K(2))});
    auto v = solve_linear(m, std::vector<RF>{RF(K(1))});
    REQUIRE(v.has_value());
    REQUIRE((m.at(0, 0) * (*v)[0]) == RF(K(1)));
}

TEST_CASE("kernel_basis spans the right kernel") {
    auto z = kernel_basis(Matrix<K>(2, 2));
    REQUIRE(z.size() == 2);
    REQUIRE(z[0] == std::vector<K>{K(1), K(0)});
    REQUIRE(z[1] == std::vector<K>{K(0), K(1)});
    REQUIRE(kernel_basis(Matrix<K>::identity(2)).empty());
    auto k = kernel_basis(M2(1, 1, 1, 1));
    REQUIRE(k.size() == 1);
    REQUIRE(k[0] == std::vector<K>{K(-1), K(1)});
}

TEST_CASE("inverse and determinant") {
    Matrix<K> m = M2(1, 2, 3, 4);
    REQUIRE(det(m) == K(-2));
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    REQUIRE(*inv * m == Matrix<K>::identity(2));
    REQUIRE(m * *inv == Matrix<K>::identity(2));
    REQUIRE_FALSE(inverse(M2(1, 2, 2, 4)).has_value());
    REQUIRE(det(M2(1, 2, 2, 4)) == K(0));
    REQUIRE(det(Matrix<K>::identity(3)) == K(1));
}

TEST_CASE("charpoly matches det(tI - M) at sample points") {
    Matrix<K> m = M2(1, 2, 3, 4);
    Poly p = charpoly(m);
    REQUIRE(p == Poly(std::vector<K>{K(-2), K(-5), K(1)}));  // t^2 - 5t - 2

    std::mt19937_64 rng(12345);
    Matrix<K> a(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            a.at(i, j) = K(mpq_class(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)));
    Poly cp = charpoly(a);
    for (int t : {0, 1, 7, -3}) {
        Matrix<K> tid = K(t) * Matrix<K>::identity(4);
        REQUIRE(cp.eval(K(t)) == det(tid - a));
    }
    REQUIRE(cp.degree() == 4);
    REQUIRE(cp.coeff(4) == K(1));
    REQUIRE(cp.coeff(3) == -a.trace());
}

TEST_CASE("charpoly of a diagonal matrix is the product of linear factors") {
    Matrix<K> d(3, 3);
    d.at(0, 0) = K(mpq_class(1, 2));
    d.at(1, 1) = K(mpq_class(1, 3));
    d.at(2, 2) = K::i();
    REQUIRE(charpoly(d) == Poly::from_roots({K(mpq_class(1, 2)), K(mpq_class(1, 3)), K::i()}));
}

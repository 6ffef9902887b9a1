#pragma once

// Root extraction for polynomials over Q(i). Deflates caller-supplied hints
// first, solves linear and quadratic factors in closed form, and otherwise
// enumerates Gaussian-integer divisor candidates per the rational root
// theorem. Whatever does not split over Q(i) is returned as a monic residual
// factor.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "minlap/gaussian_rational.hpp"
#include "minlap/polynomial.hpp"
#include "minlap/rational_function.hpp"

namespace minlap {
namespace detail {

struct GInt {
    mpz_class a, b;  // a + b*i
};

inline bool gi_is_zero(const GInt& z) { return z.a == 0 && z.b == 0; }

inline GInt gi_mul(const GInt& x, const GInt& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a};
}

inline GInt gi_conj(const GInt& z) { return {z.a, -z.b}; }

inline mpz_class gi_norm(const GInt& z) { return z.a * z.a + z.b * z.b; }

inline mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r >= b) q += 1;
    return q;
}

inline std::optional<GInt> gi_divexact(const GInt& z, const GInt& w) {
    mpz_class n = gi_norm(w);
    if (n == 0) return std::nullopt;
    GInt t = gi_mul(z, gi_conj(w));
    if (!mpz_divisible_p(t.a.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(t.b.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    return GInt{t.a / n, t.b / n};
}

inline GInt gi_gcd(GInt x, GInt y) {
    while (!gi_is_zero(y)) {
        mpz_class n = gi_norm(y);
        GInt t = gi_mul(x, gi_conj(y));
        GInt q{round_div(t.a, n), round_div(t.b, n)};
        GInt r{x.a - (q.a * y.a - q.b * y.b), x.b - (q.a * y.b + q.b * y.a)};
        x = y;
        y = r;
    }
    return x;
}

// Pollard rho with a deterministic parameter sweep; returns 0 on failure.
inline mpz_class rho_factor(const mpz_class& n) {
    for (int c = 1; c <= 16; ++c) {
        mpz_class x = 2, y = 2, d = 1, diff;
        long iter = 0;
        const long limit = 1L << 21;
        while (iter < limit) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            diff = x - y;
            if (diff == 0) break;
            if (diff < 0) diff = -diff;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            if (d != 1) break;
            ++iter;
        }
        if (d != 1 && d != n) return d;
    }
    return 0;
}

// Prime factorization of n >= 1; false when a composite cofactor resists.
inline bool factor_natural(mpz_class n, std::map<mpz_class, int>& out) {
    if (n < 1) return false;
    for (mpz_class d = 2; d <= 100000 && d * d <= n; d == 2 ? d = 3 : d += 2) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            ++out[d];
            n /= d;
        }
    }
    std::vector<mpz_class> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        mpz_class m = stack.back();
        stack.pop_back();
        if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
            ++out[m];
            continue;
        }
        if (mpz_sizeinbase(m.get_mpz_t(), 2) > 128) return false;
        mpz_class f = rho_factor(m);
        if (f == 0) return false;
        stack.push_back(f);
        stack.push_back(m / f);
    }
    return true;
}

// s with s^2 = -1 mod p, for prime p = 1 mod 4.
inline mpz_class sqrt_minus_one_mod(const mpz_class& p) {
    mpz_class e2 = (p - 1) / 2, e4 = (p - 1) / 4;
    for (mpz_class a = 2; a < p; ++a) {
        mpz_class ls;
        mpz_powm(ls.get_mpz_t(), a.get_mpz_t(), e2.get_mpz_t(), p.get_mpz_t());
        if (ls == p - 1) {
            mpz_class s;
            mpz_powm(s.get_mpz_t(), a.get_mpz_t(), e4.get_mpz_t(), p.get_mpz_t());
            return s;
        }
    }
    return 0;  // unreachable for prime p = 1 mod 4
}

// All divisors of g up to units; false when factoring fails or the list
// would exceed cap.
inline bool gaussian_divisors(const GInt& g, std::vector<GInt>& out, std::size_t cap) {
    std::map<mpz_class, int> nf;
    if (!factor_natural(gi_norm(g), nf)) return false;
    std::vector<std::pair<GInt, int>> primes;
    for (const auto& [p, e] : nf) {
        if (p == 2) {
            primes.push_back({GInt{1, 1}, e});
        } else if (p % 4 == 3) {
            if (e % 2 != 0) return false;
            primes.push_back({GInt{p, 0}, e / 2});
        } else {
            mpz_class s = sqrt_minus_one_mod(p);
            GInt pi = gi_gcd(GInt{p, 0}, GInt{s, 1});
            int u = 0;
            GInt rest = g;
            while (auto q = gi_divexact(rest, pi)) {
                rest = *q;
                ++u;
            }
            if (u > 0) primes.push_back({pi, u});
            if (e - u > 0) primes.push_back({gi_conj(pi), e - u});
        }
    }
    out.assign(1, GInt{1, 0});
    for (const auto& [pi, e] : primes) {
        std::size_t base = out.size();
        if (base * (e + 1) > cap) return false;
        out.reserve(base * (e + 1));
        for (int k = 1; k <= e; ++k)
            for (std::size_t j = 0; j < base; ++j) out.push_back(gi_mul(out[(k - 1) * base + j], pi));
    }
    return true;
}

inline K gi_to_k(const GInt& z) { return {mpq_class(z.a), mpq_class(z.b)}; }

}  // namespace detail

struct RootList {
    std::vector<std::pair<K, int>> roots;  // (root, multiplicity), sorted
    Poly residual;                         // monic factor that did not split
};

// Multiplicity of r in q; divides the factor out of q.
inline int deflate_root(Poly& q, const K& r) {
    int m = q.root_multiplicity(r);
    if (m > 0) {
        Poly lin(std::vector<K>{-r, K(1)});
        for (int k = 0; k < m; ++k) q = q / lin;
    }
    return m;
}

inline RootList extract_roots(const Poly& p, const std::vector<K>& hints = {}) {
    if (p.is_zero()) throw domain_error("roots of the zero polynomial");
    Poly q = p.monic();
    std::map<K, int> found;
    for (const K& h : hints) {
        int m = deflate_root(q, h);
        if (m > 0) found[h] += m;
    }
    if (int m = deflate_root(q, K(0)); m > 0) found[K(0)] += m;

    if (q.degree() >= 3) {
        // clear denominators, then test z = unit * a / b for a | c_0, b | c_n
        mpz_class lc(1);
        for (const K& c : q.coeffs()) {
            mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), c.re().get_den().get_mpz_t());
            mpz_lcm(lc.get_mpz_t(), lc.get_mpz_t(), c.im().get_den().get_mpz_t());
        }
        auto as_gint = [&lc](const K& c) {
            mpq_class ra = c.re() * lc, ia = c.im() * lc;
            return detail::GInt{ra.get_num(), ia.get_num()};
        };
        std::vector<detail::GInt> num_divs, den_divs;
        const std::size_t cap = 100000;
        bool feasible = detail::gaussian_divisors(as_gint(q.coeff(0)), num_divs, cap) &&
                        detail::gaussian_divisors(as_gint(q.coeff(q.degree())), den_divs, cap) &&
                        num_divs.size() * den_divs.size() * 4 <= cap * 4;
        if (feasible) {
            const K units[4] = {K(1), K::i(), K(-1), -K::i()};
            for (const auto& a : num_divs) {
                if (q.degree() < 3) break;
                for (const auto& b : den_divs) {
                    if (q.degree() < 3) break;
                    K base = detail::gi_to_k(a) / detail::gi_to_k(b);
                    for (const K& u : units) {
                        K z = u * base;
                        if (!q.eval(z).is_zero()) continue;
                        found[z] += deflate_root(q, z);
                        if (q.degree() < 3) break;
                    }
                }
            }
        }
    }

    if (q.degree() == 2) {
        K b = q.coeff(1), c = q.coeff(0);
        K disc = b * b - K(4) * c;
        if (auto sd = sqrt_exact(disc)) {
            K half = K(1) / K(2);
            K r1 = (-b + *sd) * half, r2 = (-b - *sd) * half;
            ++found[r1];
            ++found[r2];
            q = Poly(K(1));
        }
    }
    if (q.degree() == 1) {
        ++found[-q.coeff(0)];
        q = Poly(K(1));
    }

    RootList out;
    out.residual = q;
    for (const auto& [r, m] : found) out.roots.push_back({r, m});
    return out;
}

}  // namespace minlap

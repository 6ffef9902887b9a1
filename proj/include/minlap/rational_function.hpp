#pragma once

// Elements of Q(i)(xi): reduced fractions of polynomials over Q(i) with a
// monic denominator. Includes exact Laurent expansion at finite points and
// at infinity.

#include <string>
#include <utility>
#include <vector>

#include "minlap/gaussian_rational.hpp"
#include "minlap/polynomial.hpp"

namespace minlap {

using Poly = Polynomial<K>;

class RationalFunction {
public:
    RationalFunction() : num_(), den_(std::vector<K>{K(1)}) {}
    RationalFunction(int n) : RationalFunction(K(n)) {}
    RationalFunction(const K& c) : num_(c), den_(std::vector<K>{K(1)}) {}
    RationalFunction(const Poly& p) : num_(p), den_(std::vector<K>{K(1)}) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.coeff(0).is_one(); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw domain_error("division by zero in Q(i)(xi)");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    // evaluation; throws at a pole
    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d.is_zero()) throw domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

    // f(-xi)
    RationalFunction negate_arg() const {
        return RationalFunction(num_.scale_arg(K(-1)), den_.scale_arg(K(-1)));
    }

    // pole order at a finite point (0 if regular there)
    int pole_order(const K& a) const { return den_.root_multiplicity(a); }

    std::string to_string(const std::string& var) const {
        if (is_polynomial()) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw domain_error("zero denominator in Q(i)(xi)");
        if (num_.is_zero()) {
            den_ = Poly(std::vector<K>{K(1)});
            return;
        }
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        K lead = den_.leading();
        if (!lead.is_one()) {
            K inv = K(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    Poly num_, den_;
};

// Coefficients of the Laurent expansion of f at the finite point a, for
// orders from_order..to_order inclusive.
inline std::vector<K> laurent_coefficients(const RationalFunction& f, const K& a, int from_order,
                                           int to_order) {
    if (from_order > to_order) throw domain_error("empty Laurent order range");
    std::vector<K> out;
    if (f.is_zero()) {
        out.assign(static_cast<std::size_t>(to_order - from_order + 1), K(0));
        return out;
    }
    // recentre at 0 and strip the common power of the local parameter
    Poly num = f.num().shift(a);
    Poly den = f.den().shift(a);
    int vnum = 0, vden = 0;
    while (num.coeff(vnum).is_zero()) ++vnum;
    while (den.coeff(vden).is_zero()) ++vden;
    int ord = vnum - vden;  // leading order of f at a
    std::vector<K> u(num.coeffs().begin() + vnum, num.coeffs().end());
    std::vector<K> w(den.coeffs().begin() + vden, den.coeffs().end());
    // power series of u/w by the division recurrence; w[0] != 0
    int terms = to_order - ord + 1;
    std::vector<K> series;
    for (int k = 0; k < terms; ++k) {
        K acc = k < static_cast<int>(u.size()) ? u[k] : K(0);
        for (int j = 1; j <= k && j < static_cast<int>(w.size()); ++j)
            acc -= w[j] * series[static_cast<std::size_t>(k - j)];
        series.push_back(acc / w[0]);
    }
    for (int m = from_order; m <= to_order; ++m) {
        int idx = m - ord;
        out.push_back(idx >= 0 && idx < static_cast<int>(series.size()) ? series[idx] : K(0));
    }
    return out;
}

// Coefficients of f(1/zeta) as a series in zeta, for zeta-orders
// from_order..to_order inclusive. Order 0 is the value at infinity.
inline std::vector<K> laurent_at_infinity(const RationalFunction& f, int from_order, int to_order) {
    if (f.is_zero()) {
        return std::vector<K>(static_cast<std::size_t>(to_order - from_order + 1), K(0));
    }
    // f(1/z) = z^(deg den - deg num) * rev(num)(z) / rev(den)(z)
    Poly rnum = f.num().reversed();
    Poly rden = f.den().reversed();
    int shift = f.den().degree() - f.num().degree();
    RationalFunction g(rnum, rden);  // rden(0) = monic leading = 1, so regular at 0
    return laurent_coefficients(g, K(0), from_order - shift, to_order - shift);
}

inline K residue_at(const RationalFunction& f, const K& a) {
    return laurent_coefficients(f, a, -1, -1)[0];
}

}  // namespace minlap

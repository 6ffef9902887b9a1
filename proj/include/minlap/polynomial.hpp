#pragma once

// Dense univariate polynomials over an exact field. Coefficients ascending,
// no trailing zeros; the zero polynomial has an empty coefficient vector.

#include <string>
#include <utility>
#include <vector>

#include "minlap/gaussian_rational.hpp"

namespace minlap {

template <class F>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(const F& c0) : c_{c0} { trim(); }

    static Polynomial variable() { return Polynomial(std::vector<F>{F(0), F(1)}); }

    static Polynomial from_roots(const std::vector<F>& roots) {
        Polynomial p(std::vector<F>{F(1)});
        for (const F& r : roots) p = p * Polynomial(std::vector<F>{-r, F(1)});
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
        return c_[k];
    }
    const F& leading() const {
        if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (F& x : r.c_) x = -x;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<F> out(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t j = 0; j < a.c_.size(); ++j)
            for (std::size_t k = 0; k < b.c_.size(); ++k) out[j + k] += a.c_[j] * b.c_[k];
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(const F& s, const Polynomial& p) {
        Polynomial r = p;
        for (F& x : r.c_) x = s * x;
        r.trim();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // euclidean division; divisor must be nonzero
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw domain_error("polynomial division by zero");
        std::vector<F> rem = a.c_;
        int db = b.degree();
        if (a.degree() < db) return {Polynomial(), a};
        std::vector<F> quo(a.degree() - db + 1, F(0));
        for (int k = a.degree(); k >= db; --k) {
            F q = rem[k] / b.c_[db];
            if (q.is_zero()) continue;
            quo[k - db] = q;
            for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    F eval(const F& x) const {
        F acc(0);
        for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<F> out(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = F(static_cast<int>(k)) * c_[k];
        return Polynomial(std::move(out));
    }

    // p(x + a), by synthetic Horner steps
    Polynomial shift(const F& a) const {
        Polynomial acc;
        Polynomial lin(std::vector<F>{a, F(1)});
        for (int k = degree(); k >= 0; --k) acc = acc * lin + Polynomial(c_[k]);
        return acc;
    }

    // p(s * x)
    Polynomial scale_arg(const F& s) const {
        std::vector<F> out = c_;
        F pw(1);
        for (std::size_t k = 1; k < out.size(); ++k) {
            pw = pw * s;
            out[k] = out[k] * pw;
        }
        return Polynomial(std::move(out));
    }

    // x^deg * p(1/x); used for expansions at infinity
    Polynomial reversed() const {
        std::vector<F> out(c_.rbegin(), c_.rend());
        return Polynomial(std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        F inv = F(1) / c_.back();
        return inv * (*this);
    }

    // multiplicity of `a` as a root
    int root_multiplicity(const F& a) const {
        Polynomial lin(std::vector<F>{-a, F(1)});
        Polynomial p = *this;
        int m = 0;
        while (!p.is_zero()) {
            auto [q, r] = divmod(p, lin);
            if (!r.is_zero()) break;
            ++m;
            p = q;
        }
        return m;
    }

    std::string to_string(const std::string& var) const {
        if (is_zero()) return coeff_str(F(0));
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k].is_zero() && c_.size() > 1) continue;
            if (!out.empty()) out += "+";
            if (k == 0) {
                out += coeff_str(c_[k]);
            } else {
                out += "(" + coeff_str(c_[k]) + ")*" + var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    static std::string coeff_str(const F& c) { return c.to_string(); }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r).monic();
    }
    return a.monic();
}

}  // namespace minlap

#pragma once

// Exact scalar arithmetic over Q(i). Both components are GMP rationals,
// canonicalized on entry so comparisons and gcd-based routines stay exact.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace minlap {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    std::size_t pos = 0;
    if (s[pos] == '-') ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') { ++pos; ++digits; }
    if (digits == 0) throw parse_error("bad rational literal: " + s);
    std::string num = s.substr(0, pos);
    std::string den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') throw parse_error("bad rational literal: " + s);
        den = s.substr(pos + 1);
        if (den.empty()) throw parse_error("bad rational literal: " + s);
        for (char c : den)
            if (c < '0' || c > '9') throw parse_error("bad rational literal: " + s);
    }
    mpz_class d(den);
    if (d == 0) throw parse_error("zero denominator: " + s);
    mpq_class q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

inline std::string format_rational(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(int n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return im_ == 0 && re_ == 1; }

    // true iff the value lies in Z (used by integrality clauses)
    bool is_integer() const { return im_ == 0 && re_.get_den() == 1; }
    bool real_part_integral() const { return re_.get_den() == 1; }

    GaussianRational conj() const { return {re_, mpq_class(-im_)}; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {mpq_class(-re_), mpq_class(-im_)}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw domain_error("division by zero in Q(i)");
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // lexicographic order; only used to sort multisets canonically
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    std::string to_string() const {
        std::string out = format_rational(re_);
        if (sgn(im_) < 0) {
            out += "-" + format_rational(mpq_class(-im_)) + "*i";
        } else {
            out += "+" + format_rational(im_) + "*i";
        }
        return out;
    }

    static GaussianRational from_string(const std::string& s) {
        if (s.empty()) throw parse_error("empty Gaussian rational literal");
        // split at the last sign that separates the two components: it must
        // follow a digit (signs of numerators only occur at part starts)
        std::size_t split = std::string::npos;
        for (std::size_t k = 1; k < s.size(); ++k) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] >= '0' && s[k - 1] <= '9')
                split = k;
        }
        auto parse_im = [](std::string part) -> mpq_class {
            if (part.size() < 2 || part.substr(part.size() - 2) != "*i")
                throw parse_error("imaginary part must end in *i: " + part);
            return parse_rational(part.substr(0, part.size() - 2));
        };
        if (split == std::string::npos) {
            if (s.size() >= 2 && s.substr(s.size() - 2) == "*i")
                return {mpq_class(0), parse_im(s)};
            return {parse_rational(s), mpq_class(0)};
        }
        mpq_class re = parse_rational(s.substr(0, split));
        std::string rest = s.substr(split);  // keeps the sign
        char sign = rest[0];
        mpq_class im = parse_im(rest.substr(1));
        if (sign == '-') im = -im;
        return {re, im};
    }

private:
    mpq_class re_, im_;
};

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return mpq_class(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return mpq_class(sn, sd);
}

// Exact square root in Q(i) when one exists. For a+bi with b != 0 a root
// s+ti satisfies s^2 = (a + |z|)/2 and t = b/(2s), so existence reduces to
// two rational-square tests.
inline std::optional<GaussianRational> sqrt_exact(const GaussianRational& z) {
    if (z.is_real()) {
        if (auto s = rational_sqrt(z.re())) return GaussianRational(*s);
        if (auto t = rational_sqrt(mpq_class(-z.re()))) return GaussianRational(mpq_class(0), *t);
        return std::nullopt;
    }
    auto q = rational_sqrt(z.norm());
    if (!q) return std::nullopt;
    auto s = rational_sqrt(mpq_class((z.re() + *q) / 2));
    if (!s || *s == 0) return std::nullopt;
    mpq_class t = z.im() / (2 * (*s));
    GaussianRational root(*s, t);
    if (!(root * root == z)) return std::nullopt;
    return root;
}

using K = GaussianRational;

}  // namespace minlap

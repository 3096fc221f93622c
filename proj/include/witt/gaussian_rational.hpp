#pragma once

/**
 * Exact complex rationals p/q + (r/s) i over GMP rationals.
 *
 * Both parts are kept canonical (lowest terms, positive denominator, zero
 * as 0/1), so structural equality is value equality.
 *
 * Text form: "p/q", "p/q+r/si", "r/si"; a zero part is omitted and an
 * integer part prints without "/1". The parser also accepts "i", "-i" and
 * "+i" for unit imaginary parts.
 */

#include <gmpxx.h>

#include <cctype>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

#include "witt/error.hpp"

namespace witt {

using Rational = mpq_class;
using Integer = mpz_class;

namespace detail {

inline bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

// Parses "[+-]p" or "[+-]p/q" with q != 0.
inline Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw parse_error("malformed rational literal '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

} // namespace detail

class GaussianRational {
public:
    GaussianRational() = default;
    template <std::signed_integral T>
    GaussianRational(T v) : re_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    template <std::unsigned_integral T>
    GaussianRational(T v) : re_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational fraction(long num, long den) {
        if (den == 0) throw domain_error("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }
    static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    // |z|^2
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero");
        Rational n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussianRational operator-() const { return {-re_, -im_}; }

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
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::string to_string() const {
        const bool has_re = sgn(re_) != 0;
        const bool has_im = sgn(im_) != 0;
        if (!has_im) return re_.get_str();
        std::string out;
        if (has_re) out = re_.get_str();
        std::string im = im_.get_str();
        if (im == "1") im.clear();
        else if (im == "-1") im = "-";
        if (has_re && sgn(im_) > 0) out += '+';
        out += im;
        out += 'i';
        return out;
    }

    static GaussianRational parse(std::string_view text) {
        std::string s;
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
        if (s.empty()) throw parse_error("empty scalar literal");
        if (s.back() != 'i') return GaussianRational(detail::parse_rational(s));

        s.pop_back();
        // Split at the last sign that is not leading; that sign belongs to the imaginary part.
        std::size_t split = std::string::npos;
        for (std::size_t k = s.size(); k-- > 1;) {
            if (s[k] == '+' || s[k] == '-') {
                split = k;
                break;
            }
        }
        std::string re_text = split == std::string::npos ? std::string{} : s.substr(0, split);
        std::string im_text = split == std::string::npos ? s : s.substr(split);
        if (im_text.empty() || im_text == "+") im_text = "1";
        else if (im_text == "-") im_text = "-1";
        Rational re = re_text.empty() ? Rational(0) : detail::parse_rational(re_text);
        return {re, detail::parse_rational(im_text)};
    }

private:
    Rational re_{0};
    Rational im_{0};
};

using Scalar = GaussianRational;

// 2^k as an exact scalar (k >= 0).
inline Scalar power_of_two(int k) {
    Integer v = 1;
    v <<= static_cast<unsigned long>(k);
    return Scalar(Rational(v));
}

} // namespace witt

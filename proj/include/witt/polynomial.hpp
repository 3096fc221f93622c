#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/gaussian_rational.hpp"
#include "witt/matrix.hpp"

namespace witt {

/// Univariate polynomial, coefficients lowest degree first, trailing zeros trimmed.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPolynomial x() { return RationalPolynomial({0, 1}); }
    static RationalPolynomial constant(Scalar v) { return RationalPolynomial({std::move(v)}); }
    // (x - r)
    static RationalPolynomial linear_factor(const Scalar& root) { return RationalPolynomial({-root, 1}); }
    static RationalPolynomial from_roots(const std::vector<Scalar>& roots) {
        RationalPolynomial p = constant(1);
        for (const auto& r : roots) p = p * linear_factor(r);
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar{}; }
    const Scalar& leading() const {
        if (c_.empty()) throw domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_real() const {
        return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
    }

    RationalPolynomial monic() const {
        if (c_.empty()) return *this;
        const Scalar inv = c_.back().inverse();
        std::vector<Scalar> out = c_;
        for (auto& v : out) v *= inv;
        return RationalPolynomial(std::move(out));
    }

    Scalar evaluate(const Scalar& at) const {
        Scalar acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
        return acc;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
        return RationalPolynomial(std::move(out));
    }
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Scalar> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
        return RationalPolynomial(std::move(out));
    }
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return RationalPolynomial(std::move(out));
    }
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& d) const {
        if (d.is_zero()) throw domain_error("polynomial division by zero");
        std::vector<Scalar> rem = c_;
        const std::size_t dd = d.c_.size() - 1;
        if (rem.size() <= dd) return {RationalPolynomial{}, *this};
        std::vector<Scalar> quot(rem.size() - dd);
        const Scalar inv_lead = d.c_.back().inverse();
        for (std::size_t k = rem.size(); k-- > dd;) {
            const Scalar q = rem[k] * inv_lead;
            quot[k - dd] = q;
            if (q.is_zero()) continue;
            for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.c_[j];
        }
        return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const Scalar& a = c_[k];
            if (a.is_zero()) continue;
            std::string coef;
            bool negative = false;
            if (a.is_real()) {
                negative = sgn(a.re()) < 0;
                coef = negative ? Rational(-a.re()).get_str() : a.re().get_str();
            } else {
                coef = "(" + a.to_string() + ")";
            }
            if (out.empty()) out = negative ? "-" : "";
            else out += negative ? " - " : " + ";
            const bool unit = coef == "1";
            if (k == 0) out += coef;
            else {
                if (!unit) out += coef;
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

/// Horner evaluation p(A).
inline ExactMatrix eval_poly(const RationalPolynomial& p, const ExactMatrix& a) {
    if (!a.is_square()) throw dimension_error("eval_poly needs a square matrix");
    const std::size_t n = a.rows();
    ExactMatrix acc(n, n);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * a;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

/// Minimal polynomial: the first power A^k that is a linear combination of
/// I, A, ..., A^{k-1}, found on the full vectorised matrices.
inline RationalPolynomial min_poly(const ExactMatrix& a) {
    if (!a.is_square()) throw dimension_error("min_poly needs a square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return RationalPolynomial::constant(1);

    std::vector<ExactMatrix> powers{vectorize(ExactMatrix::identity(n))};
    ExactMatrix current = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        current = current * a;
        powers.push_back(vectorize(current));
        const auto null = nullspace(hstack(powers));
        if (null.empty()) continue;
        // Powers 0..k-1 are independent, so the dependency is unique up to scale
        // and has a nonzero A^k coefficient.
        const ExactMatrix& v = null.front();
        std::vector<Scalar> coeffs(k + 1);
        for (std::size_t j = 0; j <= k; ++j) coeffs[j] = v(j, 0);
        return RationalPolynomial(std::move(coeffs)).monic();
    }
    throw domain_error("no annihilating polynomial up to degree n (unreachable by Cayley-Hamilton)");
}

/// Splitting of a polynomial into rational linear factors and an unfactored rest.
struct RationalFactorization {
    Scalar content;                                   // leading coefficient
    std::vector<std::pair<Scalar, int>> roots;        // (root, multiplicity), ascending
    RationalPolynomial remainder;                     // monic, no rational roots
};

namespace detail {

inline std::vector<Integer> positive_divisors(const Integer& value, const Integer& limit) {
    std::vector<Integer> out;
    if (value > limit) return out;
    for (Integer d = 1; d * d <= value; ++d) {
        if (value % d == 0) {
            out.push_back(d);
            if (d * d != value) out.push_back(Integer(value / d));
        }
    }
    return out;
}

} // namespace detail

/// Rational-root splitting. Polynomials with non-real coefficients, or whose
/// constant/leading integer coefficients exceed 10^12, are left unfactored.
inline RationalFactorization factor_rational_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw domain_error("cannot factor the zero polynomial");
    RationalFactorization out{p.leading(), {}, p.monic()};
    if (!p.is_real()) return out;

    auto add_root = [&](const Scalar& r) {
        for (auto& [root, mult] : out.roots)
            if (root == r) {
                ++mult;
                return;
            }
        out.roots.emplace_back(r, 1);
    };

    RationalPolynomial rest = out.remainder;
    while (rest.degree() >= 1 && rest.coeff(0).is_zero()) {
        add_root(Scalar(0));
        rest = rest.divmod(RationalPolynomial::x()).first;
    }

    bool found = true;
    while (found && rest.degree() >= 1) {
        found = false;
        Integer lcm = 1;
        for (const auto& c : rest.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
        const Integer lead = abs(Integer(Rational(rest.leading().re() * lcm).get_num()));
        const Integer cst = abs(Integer(Rational(rest.coeff(0).re() * lcm).get_num()));
        const Integer limit("1000000000000");
        const auto num_div = detail::positive_divisors(cst, limit);
        const auto den_div = detail::positive_divisors(lead, limit);
        for (const auto& q : den_div) {
            for (const auto& pn : num_div) {
                for (int sign : {1, -1}) {
                    Rational cand(Integer(sign * pn), q);
                    cand.canonicalize();
                    if (!rest.evaluate(Scalar(cand)).is_zero()) continue;
                    add_root(Scalar(cand));
                    rest = rest.divmod(RationalPolynomial::linear_factor(Scalar(cand))).first;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first.re() < b.first.re(); });
    out.remainder = rest;
    return out;
}

/// Human-readable factored form, e.g. "(x + 1)(x - 3)".
inline std::string factored_string(const RationalFactorization& f) {
    std::string out;
    if (!f.content.is_one()) out += f.content.to_string() + "·";
    for (const auto& [root, mult] : f.roots) {
        std::string factor;
        if (root.is_zero()) factor = "x";
        else if (sgn(root.re()) > 0) factor = "(x - " + root.re().get_str() + ")";
        else factor = "(x + " + Rational(-root.re()).get_str() + ")";
        out += factor;
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    if (f.remainder.degree() >= 1) out += "(" + f.remainder.to_string() + ")";
    if (out.empty()) out = "1";
    return out;
}

} // namespace witt

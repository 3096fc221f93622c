#pragma once

/**
 * Elements of the neutral-signature algebra G(n,n) written in the Witt basis
 * of null vectors a_1, b_1, ..., a_n, b_n with
 *
 *   a_i^2 = b_i^2 = 0,   a_i b_i + b_i a_i = 1,
 *
 * and anticommutation between generators of distinct index. Every element is
 * a unique combination of the 4^n canonical words (see WittMonomial).
 *
 * Complexification is carried by the coefficients: a complexified element
 * has Gaussian-rational coefficients and the imaginary unit is treated as a
 * central scalar of odd grade 2n+1.
 */

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/gaussian_rational.hpp"
#include "witt/monomial.hpp"

namespace witt {

class Multivector {
public:
    using TermMap = std::map<WittMonomial, Scalar>;

    Multivector() = default;
    explicit Multivector(int n, bool complexified = false) : n_(n), complex_(complexified) {
        if (n < 0 || n > max_rank) throw dimension_error("rank " + std::to_string(n) + " outside [0, 16]");
    }

    static Multivector scalar(int n, const Scalar& c) { return monomial(n, {}, c); }
    static Multivector monomial(int n, WittMonomial m, const Scalar& c = 1) {
        Multivector g(n, !c.is_real());
        g.add_term(m, c);
        return g;
    }
    static Multivector a(int i, int n) { return monomial(n, {checked_bit(i, n), 0}); }
    static Multivector b(int i, int n) { return monomial(n, {0, checked_bit(i, n)}); }
    // u_i = a_i b_i
    static Multivector u(int i, int n) {
        const Mask m = checked_bit(i, n);
        return monomial(n, {m, m});
    }
    // u_i^dagger = b_i a_i = 1 - u_i
    static Multivector u_dagger(int i, int n) { return scalar(n, 1) - u(i, n); }
    // e_i = a_i + b_i squares to +1, f_i = a_i - b_i squares to -1.
    static Multivector e(int i, int n) { return a(i, n) + b(i, n); }
    static Multivector f(int i, int n) { return a(i, n) - b(i, n); }
    // u_{1...n}: the primitive idempotent a_1 b_1 ... a_n b_n.
    static Multivector u_all(int n) { return monomial(n, {full_mask(n), full_mask(n)}); }
    // u^dagger_{1...n} = (1 - u_1) ... (1 - u_n), expanded.
    static Multivector u_dagger_all(int n) {
        Multivector g(n);
        const Mask full = full_mask(n);
        for (Mask s = 0;; s = (s - full) & full) {  // subsets of `full`
            g.add_term({s, s}, (popcount(s) & 1) ? -1 : 1);
            if (s == full) break;
        }
        return g;
    }

    int rank() const { return n_; }
    bool complexified() const { return complex_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const WittMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar{} : it->second;
    }
    // Coefficient of the empty word; for pure scalars this is the value.
    Scalar scalar_coeff() const { return coeff({}); }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity()); }

    /// Adds c*m; drops the term when it cancels. A non-real coefficient
    /// promotes the element to complexified.
    void add_term(const WittMonomial& m, const Scalar& c) {
        const Mask full = full_mask(n_);
        if ((m.a & ~full) || (m.b & ~full))
            throw dimension_error("monomial " + to_string(m) + " exceeds rank " + std::to_string(n_));
        if (c.is_zero()) return;
        if (!c.is_real()) complex_ = true;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Multivector complexify() const {
        Multivector g = *this;
        g.complex_ = true;
        return g;
    }

    Multivector operator-() const {
        Multivector g = *this;
        for (auto& [m, c] : g.terms_) c = -c;
        return g;
    }
    Multivector& operator+=(const Multivector& o) {
        require_same_rank(o);
        complex_ = complex_ || o.complex_;
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        require_same_rank(o);
        complex_ = complex_ || o.complex_;
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Multivector& operator*=(const Scalar& s) {
        if (!s.is_real()) complex_ = true;
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Multivector operator+(Multivector x, const Multivector& y) { return x += y; }
    friend Multivector operator-(Multivector x, const Multivector& y) { return x -= y; }
    friend Multivector operator*(Multivector x, const Scalar& s) { return x *= s; }
    friend Multivector operator*(const Scalar& s, Multivector x) { return x *= s; }
    friend Multivector operator*(const Multivector& x, const Multivector& y);

    // Value equality; the complexified flag is metadata and does not take part.
    friend bool operator==(const Multivector& x, const Multivector& y) {
        return x.n_ == y.n_ && x.terms_ == y.terms_;
    }

    void require_same_rank(const Multivector& o) const {
        if (n_ != o.n_)
            throw dimension_error("rank mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }

private:
    static Mask checked_bit(int i, int n) {
        if (i < 1 || i > n)
            throw dimension_error("generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
        return bit_of(i);
    }

    int n_ = 0;
    bool complex_ = false;
    TermMap terms_;
};

inline Multivector operator+(Multivector x, const Scalar& s) {
    x.add_term({}, s);
    return x;
}
inline Multivector operator-(Multivector x, const Scalar& s) {
    x.add_term({}, -s);
    return x;
}

// ---------------------------------------------------------------------------
// Multiplication kernel

namespace detail {

// Per-index factor codes: bit 0 = a_i present, bit 1 = b_i present; 3 is u_i = a_i b_i.
inline int code_at(const WittMonomial& m, int k) {
    return static_cast<int>(((m.a >> k) & 1u) | (((m.b >> k) & 1u) << 1));
}

struct CodeTerm {
    int sign;
    int code;
};

struct CodeProduct {
    int count;
    CodeTerm terms[2];
};

// Products of single-index factors {1, a, b, ab} in G(1,1):
// a a = 0, a b = ab, a ab = 0, b a = 1 - ab, b b = 0, b ab = b,
// ab a = a, ab b = 0, ab ab = ab.
inline constexpr CodeProduct index_product(int x, int y) {
    if (x == 0) return {1, {{1, y}, {}}};
    if (y == 0) return {1, {{1, x}, {}}};
    constexpr CodeProduct table[3][3] = {
        // y = a          y = b                    y = ab
        {{0, {}},        {1, {{1, 3}, {}}},       {0, {}}},           // x = a
        {{2, {{1, 0}, {-1, 3}}}, {0, {}},         {1, {{1, 2}, {}}}}, // x = b
        {{1, {{1, 1}, {}}}, {0, {}},              {1, {{1, 3}, {}}}}, // x = ab
    };
    return table[x - 1][y - 1];
}

struct SignedMonomial {
    int sign;
    WittMonomial m;
};

/// x*y as signed canonical monomials (empty when the product vanishes).
/// Moving each odd factor of y left past the odd factors of x with larger
/// index collects the sign; the per-index G(1,1) products are then
/// parity-homogeneous, so the canonical word is their ascending concatenation.
inline void monomial_product(const WittMonomial& x, const WittMonomial& y, int n, std::vector<SignedMonomial>& out) {
    out.clear();
    int swaps = 0;
    const Mask xo = x.odd_mask();
    for (Mask yo = y.odd_mask(); yo; yo &= yo - 1) swaps += detail::count_above(xo, std::countr_zero(yo));
    out.push_back({(swaps & 1) ? -1 : 1, {}});

    for (int k = 0; k < n; ++k) {
        const int cx = code_at(x, k);
        const int cy = code_at(y, k);
        if ((cx | cy) == 0) continue;
        const CodeProduct p = index_product(cx, cy);
        if (p.count == 0) {
            out.clear();
            return;
        }
        const Mask bit = Mask{1} << k;
        auto apply = [bit](SignedMonomial& t, const CodeTerm& ct) {
            t.sign *= ct.sign;
            if (ct.code & 1) t.m.a |= bit;
            if (ct.code & 2) t.m.b |= bit;
        };
        if (p.count == 1) {
            for (auto& t : out) apply(t, p.terms[0]);
        } else {
            const std::size_t len = out.size();
            for (std::size_t j = 0; j < len; ++j) {
                SignedMonomial copy = out[j];
                apply(out[j], p.terms[0]);
                apply(copy, p.terms[1]);
                out.push_back(copy);
            }
        }
    }
}

/// Accumulates (monomial, coefficient) contributions, densely for small ranks.
class TermAccumulator {
public:
    explicit TermAccumulator(int n) : n_(n) {
        if (n_ <= 8) dense_.resize(std::size_t{1} << (2 * n_));
    }
    void add(const WittMonomial& m, const Scalar& c, int sign) {
        Scalar& slot = n_ <= 8 ? dense_[(static_cast<std::size_t>(m.a) << n_) | m.b] : sparse_[m];
        if (sign > 0) slot += c;
        else slot -= c;
    }
    Multivector finish(bool complexified) {
        Multivector g(n_, complexified);
        if (n_ <= 8) {
            const Mask low = full_mask(n_);
            for (std::size_t k = 0; k < dense_.size(); ++k)
                if (!dense_[k].is_zero())
                    g.add_term({static_cast<Mask>(k >> n_), static_cast<Mask>(k) & low}, dense_[k]);
        } else {
            for (const auto& [m, c] : sparse_) g.add_term(m, c);
        }
        return g;
    }

private:
    int n_;
    std::vector<Scalar> dense_;
    std::map<WittMonomial, Scalar> sparse_;
};

} // namespace detail

inline Multivector mul(const Multivector& x, const Multivector& y) {
    x.require_same_rank(y);
    const int n = x.rank();
    detail::TermAccumulator acc(n);
    std::vector<detail::SignedMonomial> prod;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            detail::monomial_product(mx, my, n, prod);
            if (prod.empty()) continue;
            const Scalar c = cx * cy;
            for (const auto& t : prod) acc.add(t.m, c, t.sign);
        }
    }
    return acc.finish(x.complexified() || y.complexified());
}

inline Multivector operator*(const Multivector& x, const Multivector& y) { return mul(x, y); }

/**
 * Normal form of coeff * w_1 w_2 ... w_k by term rewriting:
 *  - adjacent equal generators annihilate the term (a^2 = b^2 = 0);
 *  - adjacent b_i a_i becomes 1 - a_i b_i, splitting the term;
 *  - adjacent generators of distinct index out of order are swapped with a sign flip.
 * The rewriting terminates and its normal form is independent of the order of
 * rule application; this routine always rewrites the leftmost offending pair.
 */
inline Multivector reduce_word(const std::vector<Generator>& word, const Scalar& coeff, int n) {
    struct Pending {
        Scalar c;
        std::vector<Generator> w;
    };
    auto key = [](const Generator& g) { return 2 * g.index + (g.kind == Generator::Kind::b ? 1 : 0); };

    Scalar start = coeff;
    std::vector<Generator> letters;
    letters.reserve(word.size());
    for (const auto& g : word) {
        if (g.index < 1 || g.index > n)
            throw dimension_error("generator index " + std::to_string(g.index) + " outside 1.." + std::to_string(n));
        if (g.negated) start = -start;
        letters.push_back({g.kind, g.index, false});
    }

    Multivector out(n, !coeff.is_real());
    std::vector<Pending> stack;
    stack.push_back({start, std::move(letters)});
    while (!stack.empty()) {
        Pending t = std::move(stack.back());
        stack.pop_back();
        if (t.c.is_zero()) continue;
        bool rewritten = false;
        for (std::size_t k = 0; k + 1 < t.w.size(); ++k) {
            const Generator& l = t.w[k];
            const Generator& r = t.w[k + 1];
            const int kl = key(l);
            const int kr = key(r);
            if (kl < kr) continue;
            rewritten = true;
            if (kl == kr) break;  // N1: the whole term vanishes
            if (l.index == r.index) {
                // b_i a_i -> 1 - a_i b_i
                Pending dropped{t.c, {}};
                dropped.w.insert(dropped.w.end(), t.w.begin(), t.w.begin() + static_cast<std::ptrdiff_t>(k));
                dropped.w.insert(dropped.w.end(), t.w.begin() + static_cast<std::ptrdiff_t>(k + 2), t.w.end());
                Pending swapped{-t.c, t.w};
                std::swap(swapped.w[k], swapped.w[k + 1]);
                stack.push_back(std::move(dropped));
                stack.push_back(std::move(swapped));
            } else {
                std::swap(t.w[k], t.w[k + 1]);
                t.c = -t.c;
                stack.push_back(std::move(t));
            }
            break;
        }
        if (rewritten) continue;
        WittMonomial m;
        for (const auto& g : t.w) (g.kind == Generator::Kind::a ? m.a : m.b) |= bit_of(g.index);
        out.add_term(m, t.c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Involutions

/// Reversion: the anti-automorphism fixing every a_i, b_i. On complexified
/// elements i^dagger = (-1)^n i, i.e. coefficients are conjugated for odd n.
inline Multivector reverse(const Multivector& g) {
    const int n = g.rank();
    const bool conj = g.complexified() && (n & 1);
    Multivector out(n, g.complexified());
    for (const auto& [m, c] : g.terms()) {
        // Reversing k odd per-index factors costs (-1)^{k(k-1)/2}; even
        // factors commute with everything of another index. Within an index
        // a, b are fixed and ab reverses to ba = 1 - ab.
        const int k = popcount(m.odd_mask());
        const Scalar base = (((k * (k - 1)) / 2) & 1 ? -1 : 1) * (conj ? c.conj() : c);
        const Mask both = m.a & m.b;
        const Mask rest_a = m.a & ~both;
        const Mask rest_b = m.b & ~both;
        for (Mask s = 0;; s = (s - both) & both) {
            // s: the u-positions that keep their u after expanding (1 - u).
            out.add_term({rest_a | s, rest_b | s}, (popcount(s) & 1) ? -base : base);
            if (s == both) break;
        }
    }
    return out;
}

/// Grade involution: the automorphism negating vectors; i -> -i on complexified elements.
inline Multivector grade_involution(const Multivector& g) {
    Multivector out(g.rank(), g.complexified());
    for (const auto& [m, c] : g.terms()) {
        const Scalar v = g.complexified() ? c.conj() : c;
        out.add_term(m, m.odd() ? -v : v);
    }
    return out;
}

/// Reverse-inversion g*: reverse composed with grade involution (they commute).
inline Multivector clifford_conj(const Multivector& g) { return reverse(grade_involution(g)); }

// ---------------------------------------------------------------------------
// Blade (e, f) basis

struct BladeMultivector {
    int n = 0;
    bool complexified = false;
    std::map<BladeMonomial, Scalar> terms;

    void add_term(const BladeMonomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    friend bool operator==(const BladeMultivector& x, const BladeMultivector& y) {
        return x.n == y.n && x.terms == y.terms;
    }
};

namespace detail {

// Sign of reordering the index-interleaved word (e_1? f_1? e_2? f_2? ...) into
// e-factors ascending followed by f-factors ascending.
inline int blade_reorder_sign(Mask e, Mask f) {
    int inversions = 0;
    for (Mask fs = f; fs; fs &= fs - 1) inversions += count_above(e, std::countr_zero(fs));
    return (inversions & 1) ? -1 : 1;
}

} // namespace detail

/// Change of basis using a_i = (e_i + f_i)/2, b_i = (e_i - f_i)/2, hence
/// a_i b_i = 1/2 - e_i f_i / 2.
inline BladeMultivector to_blade_basis(const Multivector& g) {
    BladeMultivector out{g.rank(), g.complexified(), {}};
    const Rational half(1, 2);
    struct Branch {
        Rational c;
        Mask e, f;
    };
    std::vector<Branch> branches;
    for (const auto& [m, c] : g.terms()) {
        branches.assign(1, {Rational(1), 0, 0});
        for (int k = 0; k < g.rank(); ++k) {
            const int code = detail::code_at(m, k);
            if (code == 0) continue;
            const Mask bit = Mask{1} << k;
            const std::size_t len = branches.size();
            for (std::size_t j = 0; j < len; ++j) {
                Branch second = branches[j];
                Branch& first = branches[j];
                first.c *= half;
                second.c *= half;
                if (code == 3) {  // 1/2 - 1/2 e f
                    second.c = -second.c;
                    second.e |= bit;
                    second.f |= bit;
                } else {          // a: (e + f)/2, b: (e - f)/2
                    first.e |= bit;
                    second.f |= bit;
                    if (code == 2) second.c = -second.c;
                }
                branches.push_back(second);
            }
        }
        for (const auto& br : branches)
            out.add_term({br.e, br.f}, c * Scalar(Rational(br.c * detail::blade_reorder_sign(br.e, br.f))));
    }
    return out;
}

/// Inverse change of basis: e_i = a_i + b_i, f_i = a_i - b_i, e_i f_i = 1 - 2 a_i b_i.
inline Multivector from_blade_basis(const BladeMultivector& x) {
    Multivector out(x.n, x.complexified);
    struct Branch {
        int c;
        WittMonomial m;
    };
    std::vector<Branch> branches;
    for (const auto& [blade, coef] : x.terms) {
        const Mask full = full_mask(x.n);
        if ((blade.e & ~full) || (blade.f & ~full)) throw dimension_error("blade exceeds rank");
        branches.assign(1, {detail::blade_reorder_sign(blade.e, blade.f), {}});
        for (int k = 0; k < x.n; ++k) {
            const Mask bit = Mask{1} << k;
            const bool has_e = blade.e & bit;
            const bool has_f = blade.f & bit;
            if (!has_e && !has_f) continue;
            const std::size_t len = branches.size();
            for (std::size_t j = 0; j < len; ++j) {
                Branch second = branches[j];
                Branch& first = branches[j];
                if (has_e && has_f) {  // 1 - 2u
                    second.c *= -2;
                    second.m.a |= bit;
                    second.m.b |= bit;
                } else {               // a +- b
                    first.m.a |= bit;
                    second.m.b |= bit;
                    if (has_f) second.c = -second.c;
                }
                branches.push_back(second);
            }
        }
        for (const auto& br : branches) out.add_term(br.m, coef * Scalar(br.c));
    }
    return out;
}

/// Grade-k part, measured in the (e, f) blade basis. Empty outside 0..2n.
inline Multivector grade_project(const Multivector& g, int k) {
    BladeMultivector bl = to_blade_basis(g);
    std::erase_if(bl.terms, [k](const auto& kv) { return kv.first.grade() != k; });
    return from_blade_basis(bl);
}

/// <g>_0. Only words made of u_i's carry a scalar part, (1/2)^{#u} each.
inline Scalar scalar_part(const Multivector& g) {
    Scalar s;
    for (const auto& [m, c] : g.terms()) {
        if (m.a != m.b) continue;
        s += c * power_of_two(popcount(m.a)).inverse();
    }
    return s;
}

/// a_i ^ b_i = (a_i b_i - b_i a_i)/2 = a_i b_i - 1/2.
inline Multivector wedge_ab(int i, int n) { return Multivector::u(i, n) - Scalar::fraction(1, 2); }

} // namespace witt

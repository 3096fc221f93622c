#pragma once

/**
 * The isomorphism G(n,n) ~ Mat_{2^n}: spectral units
 *
 *   E_{rc} = (b_{i1} b_{i2} ...) u_{1...n} (... a_{j2} a_{j1}),
 *
 * with the b's ascending over the set bits of r and the a's descending over
 * the set bits of c (bit k <-> index k+1). They satisfy
 * E_{rc} E_{r'c'} = delta_{cr'} E_{rc'}, and g = sum_{rc} [g]_{rc} E_{rc}.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "witt/error.hpp"
#include "witt/matrix.hpp"
#include "witt/multivector.hpp"

namespace witt {

struct SpectralIndex {
    int n = 0;
    std::size_t row = 0;
    std::size_t col = 0;
};

inline std::size_t spectral_dim(int n) { return std::size_t{1} << n; }

inline Multivector spectral_unit(const SpectralIndex& idx) {
    const int n = idx.n;
    const std::size_t dim = spectral_dim(n);
    if (idx.row >= dim || idx.col >= dim) throw dimension_error("spectral index outside 0..2^n-1");
    Multivector left = Multivector::scalar(n, 1);
    for (int i = 1; i <= n; ++i)
        if (idx.row & bit_of(i)) left = left * Multivector::b(i, n);
    Multivector right = Multivector::scalar(n, 1);
    for (int j = n; j >= 1; --j)
        if (idx.col & bit_of(j)) right = right * Multivector::a(j, n);
    return left * Multivector::u_all(n) * right;
}

namespace detail {

// Matrix with at most one nonzero (+-1) per column: row_of[c] < 0 means an empty column.
struct SignedPartialPermutation {
    std::vector<int> row_of;
    std::vector<std::int8_t> sign;
};

class SpectralCache {
public:
    explicit SpectralCache(int n) : n_(n), dim_(spectral_dim(n)) {
        units_.reserve(dim_ * dim_);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c) units_.push_back(spectral_unit({n, r, c}));
        build_generators();
        build_monomials();
    }

    int rank() const { return n_; }
    std::size_t dim() const { return dim_; }
    const Multivector& unit(std::size_t r, std::size_t c) const { return units_[r * dim_ + c]; }
    const SignedPartialPermutation& monomial_matrix(const WittMonomial& m) const {
        return monomials_[(static_cast<std::size_t>(m.a) << n_) | m.b];
    }

private:
    // [g]_{rc} is the coefficient of u_{1..n} = E_{00} in E_{0r} g E_{c0}.
    SignedPartialPermutation generator_matrix(const Multivector& gen) const {
        SignedPartialPermutation p{std::vector<int>(dim_, -1), std::vector<std::int8_t>(dim_, 0)};
        const Multivector top = Multivector::u_all(n_);
        const WittMonomial top_word{full_mask(n_), full_mask(n_)};
        for (std::size_t c = 0; c < dim_; ++c) {
            const Multivector col = gen * unit(c, 0);
            if (col.is_zero()) continue;
            for (std::size_t r = 0; r < dim_; ++r) {
                const Multivector z = unit(0, r) * col;
                if (z.is_zero()) continue;
                const Scalar s = z.coeff(top_word);
                if (p.row_of[c] >= 0 || z != top * s || !(s == Scalar(1) || s == Scalar(-1)))
                    throw std::logic_error("generator matrix is not a signed partial permutation");
                p.row_of[c] = static_cast<int>(r);
                p.sign[c] = s == Scalar(1) ? 1 : -1;
            }
        }
        return p;
    }

    void build_generators() {
        for (int i = 1; i <= n_; ++i) {
            gen_a_.push_back(generator_matrix(Multivector::a(i, n_)));
            gen_b_.push_back(generator_matrix(Multivector::b(i, n_)));
        }
    }

    // Monomial matrices are products of the generator matrices along the canonical word.
    void build_monomials() {
        const std::size_t count = std::size_t{1} << (2 * n_);
        monomials_.resize(count);
        const Mask low = full_mask(n_);
        for (std::size_t k = 0; k < count; ++k) {
            const WittMonomial m{static_cast<Mask>(k >> n_), static_cast<Mask>(k) & low};
            std::vector<const SignedPartialPermutation*> letters;
            for (int i = 1; i <= n_; ++i) {
                if (m.a & bit_of(i)) letters.push_back(&gen_a_[i - 1]);
                if (m.b & bit_of(i)) letters.push_back(&gen_b_[i - 1]);
            }
            SignedPartialPermutation& p = monomials_[k];
            p.row_of.assign(dim_, -1);
            p.sign.assign(dim_, 0);
            for (std::size_t c = 0; c < dim_; ++c) {
                int row = static_cast<int>(c);
                int sign = 1;
                for (auto it = letters.rbegin(); it != letters.rend() && row >= 0; ++it) {
                    sign *= (*it)->sign[row];
                    row = (*it)->row_of[row];
                }
                if (row < 0) continue;
                p.row_of[c] = row;
                p.sign[c] = static_cast<std::int8_t>(sign);
            }
        }
    }

    int n_;
    std::size_t dim_;
    std::vector<Multivector> units_;
    std::vector<SignedPartialPermutation> gen_a_, gen_b_;
    std::vector<SignedPartialPermutation> monomials_;
};

// One cache per rank, built on first use and shared read-only afterwards.
inline const SpectralCache& spectral_cache(int n) {
    static std::mutex lock;
    static std::map<int, std::unique_ptr<const SpectralCache>> caches;
    std::lock_guard guard(lock);
    auto& slot = caches[n];
    if (!slot) slot = std::make_unique<const SpectralCache>(n);
    return *slot;
}

} // namespace detail

inline ExactMatrix to_matrix(const Multivector& g) {
    const auto& cache = detail::spectral_cache(g.rank());
    const std::size_t dim = cache.dim();
    ExactMatrix m(dim, dim);
    for (const auto& [word, c] : g.terms()) {
        const auto& p = cache.monomial_matrix(word);
        for (std::size_t col = 0; col < dim; ++col) {
            if (p.row_of[col] < 0) continue;
            Scalar& slot = m(static_cast<std::size_t>(p.row_of[col]), col);
            if (p.sign[col] > 0) slot += c;
            else slot -= c;
        }
    }
    return m;
}

// log2 of a power-of-two matrix size, else dimension_error.
inline int rank_for_size(std::size_t rows, std::size_t cols) {
    if (rows != cols || rows == 0 || (rows & (rows - 1)) != 0)
        throw dimension_error("matrix size " + std::to_string(rows) + "x" + std::to_string(cols) +
                              " is not a square power of two");
    return std::countr_zero(rows);
}

inline Multivector from_matrix(const ExactMatrix& m, int n) {
    if (n < 0 || n > max_rank || m.rows() != spectral_dim(n) || m.cols() != spectral_dim(n))
        throw dimension_error("expected a " + std::to_string(spectral_dim(n)) + "x" +
                              std::to_string(spectral_dim(n)) + " matrix for rank " + std::to_string(n));
    const auto& cache = detail::spectral_cache(n);
    Multivector g(n);
    for (std::size_t r = 0; r < cache.dim(); ++r) {
        for (std::size_t c = 0; c < cache.dim(); ++c) {
            const Scalar& v = m(r, c);
            if (v.is_zero()) continue;
            for (const auto& [word, coef] : cache.unit(r, c).terms()) g.add_term(word, v * coef);
        }
    }
    return g;
}

inline Multivector from_matrix(const ExactMatrix& m) { return from_matrix(m, rank_for_size(m.rows(), m.cols())); }

using SpectralTable = std::vector<std::vector<Multivector>>;

inline SpectralTable spectral_table(int n) {
    const auto& cache = detail::spectral_cache(n);
    SpectralTable t(cache.dim());
    for (std::size_t r = 0; r < cache.dim(); ++r)
        for (std::size_t c = 0; c < cache.dim(); ++c) t[r].push_back(cache.unit(r, c));
    return t;
}

// ---------------------------------------------------------------------------
// 2x2 blocks over the rank n-1 algebra on indices 2..n (relabelled 1..n-1).

namespace detail {

inline Multivector lift_indices(const Multivector& h) {
    Multivector g(h.rank() + 1, h.complexified());
    for (const auto& [m, c] : h.terms()) g.add_term({m.a << 1, m.b << 1}, c);
    return g;
}

} // namespace detail

/// (h1, h2, h3, h4) with g = u_1 h1 + a_1 h2^- + b_1 h3^- + u_1^dagger h4,
/// where ^- is the grade involution and the h's are relabelled down by one.
inline std::array<Multivector, 4> block_split(const Multivector& g) {
    const int n = g.rank();
    if (n < 1) throw dimension_error("block_split needs rank >= 1");
    const bool cx = g.complexified();
    Multivector h1(n - 1, cx), h2m(n - 1, cx), h3m(n - 1, cx), h4(n - 1, cx);
    for (const auto& [m, c] : g.terms()) {
        const WittMonomial rest{m.a >> 1, m.b >> 1};
        switch (detail::code_at(m, 0)) {
        case 0:  // 1 = u_1 + u_1^dagger
            h1.add_term(rest, c);
            h4.add_term(rest, c);
            break;
        case 1: h2m.add_term(rest, c); break;
        case 2: h3m.add_term(rest, c); break;
        default: h1.add_term(rest, c); break;
        }
    }
    return {std::move(h1), grade_involution(h2m), grade_involution(h3m), std::move(h4)};
}

inline Multivector block_assemble(const std::array<Multivector, 4>& h) {
    const int n = h[0].rank() + 1;
    for (const auto& x : h) h[0].require_same_rank(x);
    return Multivector::u(1, n) * detail::lift_indices(h[0]) +
           Multivector::a(1, n) * detail::lift_indices(grade_involution(h[1])) +
           Multivector::b(1, n) * detail::lift_indices(grade_involution(h[2])) +
           Multivector::u_dagger(1, n) * detail::lift_indices(h[3]);
}

/// det[g] = g g* for rank-1 elements (complexified or not).
inline Scalar det2(const Multivector& g) {
    if (g.rank() != 1) throw dimension_error("det2 is defined for rank 1 only");
    const Multivector p = g * clifford_conj(g);
    if (!p.is_scalar()) throw std::logic_error("g g* is not a scalar");
    return p.scalar_coeff();
}

} // namespace witt

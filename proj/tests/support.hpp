#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "witt/witt.hpp"

namespace witt_test {

using witt::ExactMatrix;
using witt::Mask;
using witt::Multivector;
using witt::Scalar;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240531);
    return gen;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// Small rationals, about a quarter of them zero.
inline Scalar random_rational(int span = 9, int max_den = 4) {
    if (uniform_int(0, 3) == 0) return Scalar(0);
    return Scalar::fraction(uniform_int(-span, span), uniform_int(1, max_den));
}

inline Scalar random_gaussian() { return Scalar(random_rational().re(), random_rational().re()); }

inline Multivector random_mv(int n, bool complexified = false, int max_terms = -1) {
    Multivector g(n, complexified);
    const Mask full = witt::full_mask(n);
    if (max_terms < 0) {
        for (Mask a = 0; a <= full; ++a)
            for (Mask b = 0; b <= full; ++b) g.add_term({a, b}, complexified ? random_gaussian() : random_rational());
    } else {
        for (int k = 0; k < max_terms; ++k) {
            const Mask a = static_cast<Mask>(uniform_int(0, static_cast<int>(full)));
            const Mask b = static_cast<Mask>(uniform_int(0, static_cast<int>(full)));
            g.add_term({a, b}, complexified ? random_gaussian() : random_rational());
        }
    }
    return g;
}

inline ExactMatrix random_matrix(std::size_t rows, std::size_t cols, bool complexified = false) {
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = complexified ? random_gaussian() : random_rational();
    return m;
}

inline std::array<Scalar, 6> random_x() {
    std::array<Scalar, 6> x;
    for (auto& v : x) v = random_rational(12, 5);
    return x;
}

inline ExactMatrix naive_product(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j) {
            Scalar s;
            for (std::size_t k = 0; k < x.cols(); ++k) s += x(i, k) * y(k, j);
            out(i, j) = s;
        }
    return out;
}

/**
 * Clifford product on blades of 2n orthonormal vectors: bits 0..n-1 are
 * e_1..e_n (square +1), bits n..2n-1 are f_1..f_n (square -1). A blade is the
 * ascending product of its vectors, which is the e's-then-f's order.
 */
struct BladeOracle {
    int n;

    int swap_sign(unsigned x, unsigned y) const {
        int swaps = 0;
        for (unsigned xs = x >> 1; xs; xs >>= 1) swaps += std::popcount(xs & y);
        return (swaps & 1) ? -1 : 1;
    }

    int metric_sign(unsigned common) const {
        const unsigned f_part = common >> n;
        return (std::popcount(f_part) & 1) ? -1 : 1;
    }

    std::pair<unsigned, int> product(unsigned x, unsigned y) const {
        return {x ^ y, swap_sign(x, y) * metric_sign(x & y)};
    }

    static unsigned pack(const witt::BladeMonomial& m, int n) { return m.e | (m.f << n); }
    static witt::BladeMonomial unpack(unsigned bits, int n) {
        const unsigned low = (1u << n) - 1;
        return {bits & low, bits >> n};
    }

    witt::BladeMultivector multiply(const witt::BladeMultivector& x, const witt::BladeMultivector& y) const {
        witt::BladeMultivector out{n, x.complexified || y.complexified, {}};
        for (const auto& [bx, cx] : x.terms)
            for (const auto& [by, cy] : y.terms) {
                const auto [bits, sign] = product(pack(bx, n), pack(by, n));
                out.add_term(unpack(bits, n), cx * cy * Scalar(sign));
            }
        return out;
    }
};

} // namespace witt_test

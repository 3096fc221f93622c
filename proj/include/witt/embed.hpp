#pragma once

/**
 * Real generator sets for G(p,q), p + q <= 2n + 1, inside complexified G(n,n).
 *
 * The ambient supplies e_1..e_n (square +1), f_1..f_n (square -1) and
 * f_{n+1} = e_1...e_n (f_1...f_n)^dagger i (square -1). Multiplying a
 * generator by the central unit i flips the sign of its square.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/multivector.hpp"

namespace witt {

struct SignatureSpec {
    int p = 0;
    int q = 0;
    int n = 1;
};

struct GeneratorSet {
    int n = 0;
    std::vector<Multivector> plus;   // square +1
    std::vector<Multivector> minus;  // square -1
    std::vector<std::string> plus_labels;
    std::vector<std::string> minus_labels;
};

/// e_n ... e_1 f_1 ... f_n: the real part of the pseudoscalar, without f_{n+1}.
inline Multivector pseudoscalar_candidate(int n) {
    Multivector g = Multivector::scalar(n, 1);
    for (int i = n; i >= 1; --i) g = g * Multivector::e(i, n);
    for (int i = 1; i <= n; ++i) g = g * Multivector::f(i, n);
    return g;
}

/// f_{n+1} = e_{1...n} f^dagger_{1...n} i, with i a central scalar.
inline Multivector f_extra(int n) {
    Multivector g = Multivector::scalar(n, 1);
    for (int i = 1; i <= n; ++i) g = g * Multivector::e(i, n);
    for (int i = n; i >= 1; --i) g = g * Multivector::f(i, n);
    return (g * Scalar::imaginary_unit()).complexify();
}

/**
 * Generators in this order of preference:
 *  - p <= n, q <= n+1: e_1..e_p and f_1..f_q;
 *  - p > n: all e's plus i f_1, i f_2, ... (lowest f first); the unflipped
 *    f's, ascending, fill the minus side;
 *  - q > n+1: all f's plus i e_n, i e_{n-1}, ... (highest e first); the
 *    unflipped e's, ascending, fill the plus side.
 */
inline GeneratorSet generators(const SignatureSpec& spec) {
    const int n = spec.n;
    const int p = spec.p;
    const int q = spec.q;
    if (n < 1 || n > max_rank) throw dimension_error("ambient rank must be at least 1");
    if (p < 0 || q < 0) throw domain_error("signature counts must be non-negative");
    if (p + q > 2 * n + 1)
        throw domain_error("signature (" + std::to_string(p) + "," + std::to_string(q) +
                           ") needs p+q <= 2n+1 = " + std::to_string(2 * n + 1));

    const Scalar i_unit = Scalar::imaginary_unit();
    auto e = [n](int k) { return Multivector::e(k, n).complexify(); };
    auto f = [n](int k) { return k == n + 1 ? f_extra(n) : Multivector::f(k, n).complexify(); };

    GeneratorSet gs{n, {}, {}, {}, {}};
    auto push_plus = [&](Multivector g, std::string label) {
        gs.plus.push_back(std::move(g));
        gs.plus_labels.push_back(std::move(label));
    };
    auto push_minus = [&](Multivector g, std::string label) {
        gs.minus.push_back(std::move(g));
        gs.minus_labels.push_back(std::move(label));
    };
    auto name = [](char c, int k) { return std::string(1, c) + std::to_string(k); };

    if (p > n) {
        const int flips = p - n;
        for (int k = 1; k <= n; ++k) push_plus(e(k), name('e', k));
        for (int k = 1; k <= flips; ++k) push_plus(f(k) * i_unit, "i" + name('f', k));
        for (int k = flips + 1; k < flips + 1 + q; ++k) push_minus(f(k), name('f', k));
    } else if (q > n + 1) {
        const int flips = q - (n + 1);
        for (int k = 1; k <= p; ++k) push_plus(e(k), name('e', k));
        for (int k = n - flips + 1; k <= n; ++k) push_minus(e(k) * i_unit, "i" + name('e', k));
        for (int k = 1; k <= n + 1; ++k) push_minus(f(k), name('f', k));
    } else {
        for (int k = 1; k <= p; ++k) push_plus(e(k), name('e', k));
        for (int k = 1; k <= q; ++k) push_minus(f(k), name('f', k));
    }
    return gs;
}

struct SignatureReport {
    bool pass = true;
    std::vector<std::string> failures;
    // First offending pair (indices into plus ++ minus), when any.
    std::optional<std::pair<std::size_t, std::size_t>> offending_pair;
};

/// Exhaustive check of squares and pairwise anticommutation.
inline SignatureReport verify_signature(const GeneratorSet& gs) {
    SignatureReport rep;
    std::vector<const Multivector*> all;
    std::vector<std::string> labels;
    std::vector<int> square;
    for (std::size_t k = 0; k < gs.plus.size(); ++k) {
        all.push_back(&gs.plus[k]);
        labels.push_back(k < gs.plus_labels.size() ? gs.plus_labels[k] : "plus[" + std::to_string(k) + "]");
        square.push_back(1);
    }
    for (std::size_t k = 0; k < gs.minus.size(); ++k) {
        all.push_back(&gs.minus[k]);
        labels.push_back(k < gs.minus_labels.size() ? gs.minus_labels[k] : "minus[" + std::to_string(k) + "]");
        square.push_back(-1);
    }
    for (std::size_t k = 0; k < all.size(); ++k) {
        const Multivector sq = *all[k] * *all[k];
        if (sq != Multivector::scalar(all[k]->rank(), square[k])) {
            rep.pass = false;
            rep.failures.push_back(labels[k] + "^2 != " + std::to_string(square[k]));
        }
    }
    for (std::size_t j = 0; j < all.size(); ++j) {
        for (std::size_t k = j + 1; k < all.size(); ++k) {
            const Multivector anti = *all[j] * *all[k] + *all[k] * *all[j];
            if (anti.is_zero()) continue;
            rep.pass = false;
            rep.failures.push_back(labels[j] + " and " + labels[k] + " do not anticommute");
            if (!rep.offending_pair) rep.offending_pair = {j, k};
        }
    }
    return rep;
}

} // namespace witt

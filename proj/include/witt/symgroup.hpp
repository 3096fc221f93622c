#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/matrix.hpp"
#include "witt/multivector.hpp"
#include "witt/spectral.hpp"

namespace witt {

/// Permutation of {1..m} in one-line notation. Products compose right to
/// left: (s * t)(x) = s(t(x)), so (12)(13)(12) = (23).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) { validate(); }

    static Permutation identity(int m) {
        std::vector<int> v(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] = k + 1;
        return Permutation(std::move(v));
    }

    /// Cycle notation: "(1 4)(2 3)", "(1,4)", or the compact "(14)" where
    /// every digit is a letter. Cycles are multiplied right to left. The
    /// degree is the largest letter seen, raised to `min_degree`.
    static Permutation from_cycles(std::string_view text, int min_degree = 0) {
        std::vector<std::vector<int>> cycles;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        skip_ws();
        while (pos < text.size()) {
            if (text[pos] != '(') throw parse_error("expected '(' in cycle notation '" + std::string(text) + "'");
            const std::size_t close = text.find(')', pos);
            if (close == std::string_view::npos) throw parse_error("unbalanced '(' in '" + std::string(text) + "'");
            const std::string_view body = text.substr(pos + 1, close - pos - 1);
            cycles.push_back(parse_cycle_body(body));
            pos = close + 1;
            skip_ws();
        }
        int degree = min_degree;
        for (const auto& c : cycles)
            for (int x : c) degree = std::max(degree, x);
        Permutation result = identity(degree);
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) result = cycle_perm(*it, degree) * result;
        return result;
    }

    int degree() const { return static_cast<int>(img_.size()); }
    // Image of letter x (1-based); letters beyond the degree are fixed.
    int operator()(int x) const { return x >= 1 && x <= degree() ? img_[static_cast<std::size_t>(x - 1)] : x; }
    const std::vector<int>& images() const { return img_; }

    Permutation extended(int m) const {
        if (m <= degree()) return *this;
        std::vector<int> v = img_;
        for (int k = degree() + 1; k <= m; ++k) v.push_back(k);
        return Permutation(std::move(v));
    }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int x = 1; x <= degree(); ++x) v[static_cast<std::size_t>((*this)(x) - 1)] = x;
        return Permutation(std::move(v));
    }

    // Largest letter actually moved (0 for the identity).
    int support_max() const {
        for (int x = degree(); x >= 1; --x)
            if ((*this)(x) != x) return x;
        return 0;
    }

    friend Permutation operator*(const Permutation& s, const Permutation& t) {
        const int m = std::max(s.degree(), t.degree());
        std::vector<int> v(static_cast<std::size_t>(m));
        for (int x = 1; x <= m; ++x) v[static_cast<std::size_t>(x - 1)] = s(t(x));
        return Permutation(std::move(v));
    }
    // Equal as bijections of the positive integers (trailing fixed points ignored).
    friend bool operator==(const Permutation& s, const Permutation& t) {
        const int m = std::max(s.degree(), t.degree());
        for (int x = 1; x <= m; ++x)
            if (s(x) != t(x)) return false;
        return true;
    }

    std::string to_cycle_string() const {
        std::string out;
        std::vector<bool> seen(img_.size() + 1, false);
        const bool wide = degree() > 9;
        for (int x = 1; x <= degree(); ++x) {
            if (seen[static_cast<std::size_t>(x)] || (*this)(x) == x) continue;
            out += '(';
            int y = x;
            bool first = true;
            while (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                if (!first && wide) out += ' ';
                out += std::to_string(y);
                first = false;
                y = (*this)(y);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

private:
    static std::vector<int> parse_cycle_body(std::string_view body) {
        std::vector<int> letters;
        const bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
        std::string token;
        auto flush = [&] {
            if (token.empty()) return;
            if (token.size() > 6) throw parse_error("letter too large in cycle '" + std::string(body) + "'");
            letters.push_back(std::stoi(token));
            token.clear();
        };
        for (char ch : body) {
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                token += ch;
                if (!separated) flush();
            } else if (ch == ' ' || ch == ',' || ch == '\t') {
                flush();
            } else {
                throw parse_error("unexpected character in cycle '" + std::string(body) + "'");
            }
        }
        flush();
        for (int x : letters)
            if (x < 1) throw parse_error("cycle letters start at 1");
        auto sorted = letters;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw parse_error("repeated letter in cycle '" + std::string(body) + "'");
        return letters;
    }

    static Permutation cycle_perm(const std::vector<int>& cycle, int degree) {
        Permutation p = identity(degree);
        for (std::size_t k = 0; k < cycle.size(); ++k)
            p.img_[static_cast<std::size_t>(cycle[k] - 1)] = cycle[(k + 1) % cycle.size()];
        return p;
    }

    void validate() const {
        std::vector<bool> hit(img_.size() + 1, false);
        for (int x : img_) {
            if (x < 1 || x > degree() || hit[static_cast<std::size_t>(x)])
                throw parse_error("images do not form a permutation");
            hit[static_cast<std::size_t>(x)] = true;
        }
    }

    std::vector<int> img_;
};

enum class RepKind { permutation, standard };

/// P with P e_j = e_{s(j)}: column j carries its 1 in row s(j).
inline ExactMatrix perm_matrix(const Permutation& s, int m) {
    if (s.support_max() > m) throw dimension_error("permutation moves letters beyond " + std::to_string(m));
    ExactMatrix p(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) p(static_cast<std::size_t>(s(j) - 1), static_cast<std::size_t>(j - 1)) = 1;
    return p;
}

/// Action of s in S_{m+1} on the quotient where e_{m+1} = -(e_1 + ... + e_m).
inline ExactMatrix std_rep_matrix(const Permutation& s, int m) {
    if (s.support_max() > m + 1) throw dimension_error("permutation moves letters beyond " + std::to_string(m + 1));
    ExactMatrix p(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        const int img = s(j);
        const auto col = static_cast<std::size_t>(j - 1);
        if (img <= m) p(static_cast<std::size_t>(img - 1), col) = 1;
        else
            for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) p(r, col) = -1;
    }
    return p;
}

inline ExactMatrix rep_matrix(const Permutation& s, int n, RepKind kind) {
    const int m = static_cast<int>(spectral_dim(n));
    if (kind == RepKind::permutation) {
        if (s.support_max() > m)
            throw dimension_error("permutation representation in rank " + std::to_string(n) + " holds letters up to " +
                                  std::to_string(m));
        return perm_matrix(s, m);
    }
    if (s.support_max() > m + 1)
        throw dimension_error("standard representation in rank " + std::to_string(n) + " holds letters up to " +
                              std::to_string(m + 1));
    return std_rep_matrix(s, m);
}

inline Multivector geom_perm(const Permutation& s, int n, RepKind kind) {
    return from_matrix(rep_matrix(s, n, kind), n);
}

struct GroupElementImage {
    Permutation perm;
    ExactMatrix matrix;
    Multivector geometric;
};

inline GroupElementImage group_image(const Permutation& s, int n, RepKind kind) {
    ExactMatrix m = rep_matrix(s, n, kind);
    Multivector g = from_matrix(m, n);
    return {s, std::move(m), std::move(g)};
}

/// All-ones element via A_1 = 1,
/// A_{2^{k+1}} = A_{2^k} (1 + 2^k (a_{k+1} + b_{k+1}) (a_1^b_1) ... (a_k^b_k)).
inline Multivector all_ones_mv(int n) {
    Multivector acc = Multivector::scalar(n, 1);
    Multivector wedges = Multivector::scalar(n, 1);
    for (int k = 0; k < n; ++k) {
        const Multivector step = Multivector::scalar(n, 1) +
                                 power_of_two(k) *
                                     ((Multivector::a(k + 1, n) + Multivector::b(k + 1, n)) * wedges);
        acc = acc * step;
        wedges = wedges * wedge_ab(k + 1, n);
    }
    return acc;
}

inline Multivector casimir_mv(int n) { return all_ones_mv(n) - Scalar(1); }

/// Spectral idempotents of the Casimir element: s1 = (A - 2^n)/(-2^n), s2 = A/2^n.
inline std::pair<Multivector, Multivector> casimir_idempotents(int n) {
    const Scalar size = power_of_two(n);
    const Multivector a = all_ones_mv(n);
    return {(a - size) * (-size).inverse(), a * size.inverse()};
}

/// g_c = s1 (1 - u^dagger_{1..n}) + s2 u^dagger_{1..n}: s1 with its last
/// column replaced by the last column of s2.
inline Multivector surgery_gc(int n) {
    const auto [s1, s2] = casimir_idempotents(n);
    const Multivector ud = Multivector::u_dagger_all(n);
    return s1 * (Multivector::scalar(n, 1) - ud) + s2 * ud;
}

// The inverse goes through the exact matrix inverse; g_c is not a versor.
inline Multivector surgery_gc_inverse(int n) { return from_matrix(inverse(to_matrix(surgery_gc(n))), n); }

/**
 * Standard irreducible images. Permutations of the letters 1..2^n are
 * conjugated by g_c (giving the standard representation of S_{2^n} on the
 * first 2^n - 1 coordinates plus a fixed last coordinate); permutations that
 * move letter 2^n + 1 use the quotient representation of S_{2^n + 1}
 * directly, which is the closed form [1 - (2 + b_1 + b_2 + b_12) u_12] for (15)
 * at n = 2.
 */
inline Multivector standard_irrep(const Permutation& s, int n) {
    const int m = static_cast<int>(spectral_dim(n));
    if (s.support_max() > m + 1)
        throw dimension_error("letter " + std::to_string(s.support_max()) + " out of range for rank " +
                              std::to_string(n));
    if (s.support_max() == m + 1) return geom_perm(s, n, RepKind::standard);
    return surgery_gc_inverse(n) * geom_perm(s, n, RepKind::permutation) * surgery_gc(n);
}

/// tr[g] = 2^n <g>_0.
inline Scalar character(const Multivector& g) {
    return power_of_two(g.rank()) * scalar_part(g);
}

} // namespace witt

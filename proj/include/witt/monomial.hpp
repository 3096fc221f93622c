#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "witt/error.hpp"

namespace witt {

using Mask = std::uint32_t;

/// Largest rank representable by the 32-bit masks. Dense kernels further
/// assume 4^n fits in memory; the CLI enforces a much lower default cap.
inline constexpr int max_rank = 16;

inline Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }
inline Mask bit_of(int index) { return Mask{1} << (index - 1); }  // 1-based index
inline int popcount(Mask m) { return std::popcount(m); }

/**
 * Canonical square-free word in the null generators: for i = 1..n
 * ascending, a_i if bit i-1 of `a` is set, then b_i if bit i-1 of `b` is set.
 * Ordering is lexicographic on (a, b).
 */
struct WittMonomial {
    Mask a = 0;
    Mask b = 0;

    int degree() const { return popcount(a) + popcount(b); }
    bool odd() const { return (degree() & 1) != 0; }
    bool is_identity() const { return a == 0 && b == 0; }
    // Per-index parity mask: bit set where exactly one of a_i, b_i occurs.
    Mask odd_mask() const { return a ^ b; }

    friend auto operator<=>(const WittMonomial&, const WittMonomial&) = default;
};

/// e_{i...} f_{j...}: e-factors ascending, then f-factors ascending.
struct BladeMonomial {
    Mask e = 0;
    Mask f = 0;

    int grade() const { return popcount(e) + popcount(f); }
    friend auto operator<=>(const BladeMonomial&, const BladeMonomial&) = default;
};

/// A signed null generator +-a_i or +-b_i (1-based index), the letters of reduce_word.
struct Generator {
    enum class Kind : std::uint8_t { a, b };
    Kind kind = Kind::a;
    int index = 1;
    bool negated = false;

    static Generator a(int i) { return {Kind::a, i, false}; }
    static Generator b(int i) { return {Kind::b, i, false}; }

    friend bool operator==(const Generator&, const Generator&) = default;

    // "a3", "-b1", "+a2"
    static Generator parse(const std::string& text) {
        std::size_t pos = 0;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) neg = text[pos++] == '-';
        if (pos >= text.size() || (text[pos] != 'a' && text[pos] != 'b'))
            throw parse_error("generator must look like a1 or -b2, got '" + text + "'");
        const Kind k = text[pos] == 'a' ? Kind::a : Kind::b;
        ++pos;
        if (pos >= text.size()) throw parse_error("generator '" + text + "' lacks an index");
        int idx = 0;
        for (; pos < text.size(); ++pos) {
            if (text[pos] < '0' || text[pos] > '9') throw parse_error("bad generator index in '" + text + "'");
            idx = idx * 10 + (text[pos] - '0');
            if (idx > 1000) throw parse_error("generator index too large in '" + text + "'");
        }
        if (idx < 1) throw parse_error("generator indices start at 1: '" + text + "'");
        return {k, idx, neg};
    }
};

/// Letters of the canonical word of m, left to right.
inline std::vector<Generator> word_of(const WittMonomial& m) {
    std::vector<Generator> w;
    for (int i = 1; i <= max_rank; ++i) {
        if (m.a & bit_of(i)) w.push_back(Generator::a(i));
        if (m.b & bit_of(i)) w.push_back(Generator::b(i));
    }
    return w;
}

namespace detail {

// Number of set bits of `mask` strictly above bit position `pos` (0-based).
inline int count_above(Mask mask, int pos) {
    if (pos >= 31) return 0;
    return popcount(mask >> (pos + 1));
}

// Join index digits: "12" for small indices, "10,11" once any index exceeds 9.
inline std::string index_run(const std::vector<int>& idx) {
    bool wide = false;
    for (int i : idx) wide = wide || i > 9;
    std::string out;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (wide && k > 0) out += ',';
        out += std::to_string(idx[k]);
    }
    return out;
}

} // namespace detail

/// Compact notation: maximal runs of one letter share it, so the canonical
/// word a1 b1 b2 prints as "a1b12" and the empty word as "1".
inline std::string to_string(const WittMonomial& m) {
    const auto w = word_of(m);
    if (w.empty()) return "1";
    std::string out;
    std::size_t k = 0;
    while (k < w.size()) {
        const auto kind = w[k].kind;
        std::vector<int> run;
        while (k < w.size() && w[k].kind == kind) run.push_back(w[k++].index);
        out += kind == Generator::Kind::a ? 'a' : 'b';
        out += detail::index_run(run);
    }
    return out;
}

inline std::string to_string(const BladeMonomial& m) {
    if (m.e == 0 && m.f == 0) return "1";
    std::string out;
    std::vector<int> e, f;
    for (int i = 1; i <= max_rank; ++i) {
        if (m.e & bit_of(i)) e.push_back(i);
        if (m.f & bit_of(i)) f.push_back(i);
    }
    if (!e.empty()) out += "e" + detail::index_run(e);
    if (!f.empty()) out += "f" + detail::index_run(f);
    return out;
}

} // namespace witt

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/matrix.hpp"
#include "witt/multivector.hpp"
#include "witt/polynomial.hpp"
#include "witt/spectral.hpp"
#include "witt/symgroup.hpp"

namespace witt {

struct CommutantBasis {
    std::vector<ExactMatrix> generators;
    std::vector<ExactMatrix> basis;
    std::size_t dimension = 0;
};

/// {X : X G = G X for every generator G}, solved as one stacked linear system
/// in the m^2 entries of X (row-major).
inline CommutantBasis commutant(std::span<const ExactMatrix> generators) {
    if (generators.empty()) throw dimension_error("commutant needs at least one generator");
    const std::size_t m = generators.front().rows();
    for (const auto& g : generators)
        if (!g.is_square() || g.rows() != m) throw dimension_error("commutant generators must be equal-size squares");

    const std::size_t vars = m * m;
    ExactMatrix system(generators.size() * vars, vars);
    for (std::size_t k = 0; k < generators.size(); ++k) {
        const ExactMatrix& g = generators[k];
        // (XG - GX)_{ij} = sum_l X_{il} G_{lj} - sum_l G_{il} X_{lj}
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const std::size_t eq = k * vars + i * m + j;
                for (std::size_t l = 0; l < m; ++l) {
                    system(eq, i * m + l) += g(l, j);
                    system(eq, l * m + j) -= g(i, l);
                }
            }
        }
    }
    CommutantBasis out;
    out.generators.assign(generators.begin(), generators.end());
    for (const auto& v : nullspace(system)) out.basis.push_back(unvectorize(v, m, m));
    out.dimension = out.basis.size();
    return out;
}

enum class FamilyKind { all, alt };

/// g_all(s, t): s on the diagonal, t elsewhere (4x4).
/// g_alt(s1, t1, s2, t2): s1 I + t1 (12)(34) + s2 (13)(24) + t2 (14)(23).
inline ExactMatrix family_matrix(FamilyKind kind, std::span<const Scalar> params) {
    if (kind == FamilyKind::all) {
        if (params.size() != 2) throw dimension_error("g_all takes parameters s, t");
        ExactMatrix g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) g(i, j) = i == j ? params[0] : params[1];
        return g;
    }
    if (params.size() != 4) throw dimension_error("g_alt takes parameters s1, t1, s2, t2");
    const Scalar& s1 = params[0];
    const Scalar& t1 = params[1];
    const Scalar& s2 = params[2];
    const Scalar& t2 = params[3];
    return ExactMatrix::from_rows({{s1, t1, s2, t2}, {t1, s1, t2, s2}, {s2, t2, s1, t1}, {t2, s2, t1, s1}});
}

/// Roots of the factored minimal polynomials, in display order:
/// all: s - t, 3t + s;
/// alt: t2-s2-t1+s1, -t2+s2-t1+s1, -t2-s2+t1+s1, t2+s2+t1+s1.
inline std::vector<Scalar> family_listed_roots(FamilyKind kind, std::span<const Scalar> params) {
    if (kind == FamilyKind::all) {
        if (params.size() != 2) throw dimension_error("g_all takes parameters s, t");
        const Scalar& s = params[0];
        const Scalar& t = params[1];
        return {s - t, Scalar(3) * t + s};
    }
    if (params.size() != 4) throw dimension_error("g_alt takes parameters s1, t1, s2, t2");
    const Scalar& s1 = params[0];
    const Scalar& t1 = params[1];
    const Scalar& s2 = params[2];
    const Scalar& t2 = params[3];
    return {t2 - s2 - t1 + s1, -t2 + s2 - t1 + s1, -t2 - s2 + t1 + s1, t2 + s2 + t1 + s1};
}

struct FamilyMinpolyReport {
    ExactMatrix matrix;
    RationalPolynomial computed;
    RationalPolynomial expected;
    std::vector<Scalar> listed_roots;
    std::vector<Scalar> distinct_roots;
    bool collapsed = false;  // some listed roots coincide
    bool pass = false;
};

inline FamilyMinpolyReport family_minpoly_check(FamilyKind kind, std::span<const Scalar> params) {
    FamilyMinpolyReport rep;
    rep.matrix = family_matrix(kind, params);
    rep.computed = min_poly(rep.matrix);
    rep.listed_roots = family_listed_roots(kind, params);
    for (const auto& r : rep.listed_roots)
        if (std::find(rep.distinct_roots.begin(), rep.distinct_roots.end(), r) == rep.distinct_roots.end())
            rep.distinct_roots.push_back(r);
    rep.collapsed = rep.distinct_roots.size() < rep.listed_roots.size();
    rep.expected = RationalPolynomial::from_roots(rep.distinct_roots);
    rep.pass = rep.computed == rep.expected;
    return rep;
}

/// g - g u - u g for an idempotent u: keeps the block outside u's band,
/// zeroes the mixed bands and negates the block inside it.
inline Multivector surgery_cut(const Multivector& g, const Multivector& u) {
    if (u * u != u) throw domain_error("surgery mask is not idempotent");
    return g - g * u - u * g;
}

/// g m for a single-term multivector m (e.g. b_1 u_2 moves column 2 into column 1).
inline Multivector extract_column(const Multivector& g, const Multivector& m) {
    if (m.size() != 1) throw domain_error("extract_column needs a single-term multivector");
    return g * m;
}

// ---------------------------------------------------------------------------
// Regular representation of S_3 on the letters {1, 8, 9} inside the standard
// representation of S_9 in G(3,3).

struct RegRepElement {
    std::array<Scalar, 6> x;
    Multivector element;
};

inline const std::array<Permutation, 6>& regrep_permutations() {
    static const std::array<Permutation, 6> perms = {
        Permutation::identity(9),           Permutation::from_cycles("(18)", 9),  Permutation::from_cycles("(19)", 9),
        Permutation::from_cycles("(89)", 9), Permutation::from_cycles("(189)", 9), Permutation::from_cycles("(198)", 9),
    };
    return perms;
}

/// X = x0 + x1 (18) + x2 (19) + x3 (89) + x4 (189) + x5 (198).
inline RegRepElement regrep_element(const std::array<Scalar, 6>& x) {
    Multivector acc(3);
    const auto& perms = regrep_permutations();
    for (std::size_t k = 0; k < 6; ++k) acc += x[k] * geom_perm(perms[k], 3, RepKind::standard);
    return {x, std::move(acc)};
}

struct RegRepDecomposition {
    ExactMatrix p;
    ExactMatrix d;
};

/// The change of basis: the six RREF eigenvectors of [X] at x = (1..6) for
/// eigenvalue 21 = x0 + ... + x5, followed by the pivot columns of
/// ([X] - 21 I), which span the invariant complement.
inline const ExactMatrix& regrep_basis() {
    static const ExactMatrix basis = [] {
        const RegRepElement sample = regrep_element({1, 2, 3, 4, 5, 6});
        const ExactMatrix shifted = to_matrix(sample.element) - Scalar(21) * ExactMatrix::identity(8);
        std::vector<ExactMatrix> cols = nullspace(shifted);
        if (cols.size() != 6) throw std::logic_error("specialised eigenspace is not 6-dimensional");
        for (std::size_t c : rref(shifted).pivot_cols) cols.push_back(shifted.column_at(c));
        if (cols.size() != 8) throw std::logic_error("complement of the eigenspace is not 2-dimensional");
        return hstack(cols);
    }();
    return basis;
}

inline RegRepDecomposition regrep_decompose(const RegRepElement& x) {
    const ExactMatrix& p = regrep_basis();
    return {p, inverse(p) * to_matrix(x.element) * p};
}

} // namespace witt

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "witt/golden.hpp"

using namespace witt;

namespace {

Multivector P2(const char* s) { return parse_product(s, 2); }
Multivector P3(const char* s) { return parse_product(s, 3); }

ExactMatrix ones(std::size_t m) { return reference::all_ones_matrix(m); }

std::vector<Permutation> all_permutations(int m) {
    std::vector<int> v(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) v[static_cast<std::size_t>(k)] = k + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace

TEST_CASE("permutation parsing and composition", "[symgroup]") {
    CHECK(Permutation::from_cycles("(12)(13)(12)") == Permutation::from_cycles("(23)"));
    CHECK(Permutation::from_cycles("(1 4)") == Permutation::from_cycles("(14)"));
    CHECK(Permutation::from_cycles("(1,4)") == Permutation::from_cycles("(14)"));
    CHECK(Permutation::from_cycles("(10 11)").degree() == 11);
    CHECK(Permutation::from_cycles("(123)")(1) == 2);
    CHECK(Permutation::from_cycles("(123)").inverse() == Permutation::from_cycles("(132)"));
    CHECK(Permutation::from_cycles("(12)(34)").to_cycle_string() == "(12)(34)");
    CHECK(Permutation::from_cycles("").to_cycle_string() == "()");
    CHECK(Permutation::from_cycles("(1 2)", 5).degree() == 5);
    CHECK_THROWS_AS(Permutation::from_cycles("(1 1)"), witt::parse_error);
    CHECK_THROWS_AS(Permutation::from_cycles("(1 2"), witt::parse_error);
    CHECK_THROWS_AS(Permutation::from_cycles("1 2"), witt::parse_error);
    CHECK_THROWS_AS(Permutation::from_cycles("(0 2)"), witt::parse_error);
    CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1}), witt::parse_error);
}

TEST_CASE("permutation and standard matrices are homomorphisms", "[symgroup][property]") {
    const auto perms = all_permutations(4);
    for (const auto& s : perms)
        for (const auto& t : perms) {
            CHECK(perm_matrix(s * t, 4) == perm_matrix(s, 4) * perm_matrix(t, 4));
            CHECK(std_rep_matrix(s * t, 3) == std_rep_matrix(s, 3) * std_rep_matrix(t, 3));
        }
    CHECK(perm_matrix(Permutation::from_cycles("(12)"), 3) == ExactMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    CHECK_THROWS_AS(perm_matrix(Permutation::from_cycles("(15)"), 4), witt::dimension_error);
    CHECK_THROWS_AS(rep_matrix(Permutation::from_cycles("(16)"), 2, RepKind::standard), witt::dimension_error);
}

TEST_CASE("geometric permutations in G(2,2) and G(3,3)", "[symgroup]") {
    const Multivector one2 = P2("1");
    CHECK(geom_perm(Permutation::from_cycles("(12)"), 2, RepKind::permutation) ==
          one2 + (P2("a1") + P2("b1") - one2) * P2("u2"));
    CHECK(geom_perm(Permutation::from_cycles("(13)"), 2, RepKind::permutation) ==
          one2 + (P2("a2") + P2("b2") - one2) * P2("u1"));
    CHECK(geom_perm(Permutation::from_cycles("(14)"), 2, RepKind::permutation) ==
          one2 + P2("a21") + P2("b12") - P2("u12") - P2("ud12"));
    const Multivector one3 = P3("1");
    CHECK(geom_perm(Permutation::from_cycles("(12)"), 3, RepKind::standard) ==
          one3 + (P3("a1") + P3("b1") - one3) * P3("u23"));
    CHECK(geom_perm(Permutation::from_cycles("(16)"), 3, RepKind::standard) ==
          one3 + (P3("a31") + P3("b13") - P3("u13") - P3("ud13")) * P3("u2"));
    CHECK(geom_perm(Permutation::from_cycles("(19)"), 3, RepKind::standard) ==
          one3 - P3("u123") - (one3 + P3("b1")) * (one3 + P3("b2")) * (one3 + P3("b3")) * P3("u123"));
    CHECK(geom_perm(Permutation::from_cycles("(12)"), 1, RepKind::permutation) == parse_product("a1", 1) + parse_product("b1", 1));
}

TEST_CASE("geometric images multiply like permutations", "[symgroup][property]") {
    const auto perms = all_permutations(4);
    for (std::size_t k = 0; k < perms.size(); k += 5)
        for (std::size_t l = 0; l < perms.size(); l += 3) {
            const Multivector gs = geom_perm(perms[k], 2, RepKind::permutation);
            const Multivector gt = geom_perm(perms[l], 2, RepKind::permutation);
            CHECK(gs * gt == geom_perm(perms[k] * perms[l], 2, RepKind::permutation));
            CHECK(character(gs) == to_matrix(gs).trace());
        }
}

TEST_CASE("9-cycle", "[symgroup]") {
    const Multivector g = geom_perm(Permutation::from_cycles("(123456789)"), 3, RepKind::standard);
    CHECK(to_matrix(g) == reference::int_matrix(reference::nine_cycle));
    Multivector pw = g;
    int order = 1;
    while (pw != P3("1") && order < 20) {
        pw = pw * g;
        ++order;
    }
    CHECK(order == 9);
    const Multivector printed = P3("b1") + P3("b2 a1") + P3("b3 a21") -
                                (P3("a321") + P3("a32") + P3("a3") + P3("a21") - P3("a2") + P3("a1") + P3("1")) * P3("ud123");
    CHECK(g != printed);
    CHECK(g == printed - P3("a13 ud123"));
}

TEST_CASE("all-ones and Casimir elements", "[symgroup]") {
    const RationalPolynomial x = RationalPolynomial::x();
    for (int n = 1; n <= 4; ++n) {
        const std::size_t m = spectral_dim(n);
        CHECK(to_matrix(all_ones_mv(n)) == ones(m));
        CHECK(to_matrix(casimir_mv(n)) == ones(m) - ExactMatrix::identity(m));
    }
    CHECK(all_ones_mv(1) == Multivector::scalar(1, 1) + Multivector::a(1, 1) + Multivector::b(1, 1));
    CHECK(all_ones_mv(2) == P2("1") + P2("a1") + P2("b1") + (P2("a2") + P2("b2")) * (P2("a1") - P2("b1") + Scalar(2) * wedge_ab(1, 2)));
    for (std::size_t m = 2; m <= 9; ++m) {
        const Scalar ms(static_cast<long>(m));
        const ExactMatrix a = ones(m);
        CHECK(a * a == ms * a);
        CHECK(min_poly(a) == x * (x - RationalPolynomial::constant(ms)));
        CHECK(min_poly(a) != x * (x - RationalPolynomial::constant(1)));
        const ExactMatrix c = a - ExactMatrix::identity(m);
        CHECK(c * c == (ms - 2) * c + (ms - 1) * ExactMatrix::identity(m));
        CHECK(min_poly(c) == (x + RationalPolynomial::constant(1)) * (x - RationalPolynomial::constant(ms - 1)));
    }
    CHECK(min_poly(to_matrix(casimir_mv(2))) ==
          (x + RationalPolynomial::constant(1)) * (x - RationalPolynomial::constant(3)));
}

TEST_CASE("Casimir idempotents and g_c", "[symgroup]") {
    for (int n = 1; n <= 3; ++n) {
        const auto [s1, s2] = casimir_idempotents(n);
        CHECK(s1 * s1 == s1);
        CHECK(s2 * s2 == s2);
        CHECK((s1 * s2).is_zero());
        CHECK((s2 * s1).is_zero());
        CHECK(s1 + s2 == Multivector::scalar(n, 1));
        const Multivector gc = surgery_gc(n);
        const Multivector gci = surgery_gc_inverse(n);
        CHECK(gc * gci == Multivector::scalar(n, 1));
        ExactMatrix expected = Scalar(-1) * ExactMatrix::identity(spectral_dim(n));
        expected(spectral_dim(n) - 1, spectral_dim(n) - 1) = power_of_two(n) - 1;
        if (n > 1) CHECK(to_matrix(gci * casimir_mv(n) * gc) == expected);
        // surgery: columns of s1 except the last, last column of s2
        const ExactMatrix m1 = to_matrix(s1), m2 = to_matrix(s2), mc = to_matrix(gc);
        const std::size_t last = spectral_dim(n) - 1;
        for (std::size_t i = 0; i <= last; ++i)
            for (std::size_t j = 0; j <= last; ++j) CHECK(mc(i, j) == (j == last ? m2(i, j) : m1(i, j)));
    }
}

TEST_CASE("standard irreducible representation", "[symgroup]") {
    using namespace witt::reference;
    CHECK(to_matrix(standard_irrep(Permutation::from_cycles("(12)"), 2)) == int_matrix(irrep_12));
    CHECK(to_matrix(standard_irrep(Permutation::from_cycles("(13)"), 2)) == int_matrix(irrep_13));
    CHECK(to_matrix(standard_irrep(Permutation::from_cycles("(14)"), 2)) == int_matrix(irrep_14));
    CHECK(to_matrix(standard_irrep(Permutation::from_cycles("(15)"), 2)) == int_matrix(irrep_15));
    CHECK(standard_irrep(Permutation::from_cycles("(14)"), 2) == P2("1") - (Scalar(2) * P2("1") + P2("b1") + P2("b2")) * P2("u12"));
    CHECK(standard_irrep(Permutation::from_cycles("(15)"), 2) ==
          P2("1") - (Scalar(2) * P2("1") + P2("b1") + P2("b2") + P2("b12")) * P2("u12"));
    // on S4 the conjugated images are a homomorphism fixing the last coordinate
    const auto perms = all_permutations(4);
    for (std::size_t k = 0; k < perms.size(); k += 3)
        for (std::size_t l = 0; l < perms.size(); l += 4) {
            const Multivector x = standard_irrep(perms[k], 2), y = standard_irrep(perms[l], 2);
            CHECK(x * y == standard_irrep(perms[k] * perms[l], 2));
            const ExactMatrix m = to_matrix(x);
            CHECK(m(3, 3) == Scalar(1));
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(m(i, 3).is_zero());
                CHECK(m(3, i).is_zero());
            }
        }
    CHECK_THROWS_AS(standard_irrep(Permutation::from_cycles("(16)"), 2), witt::dimension_error);
}

TEST_CASE("characters", "[symgroup]") {
    for (const auto& s : all_permutations(4)) {
        const Multivector g = geom_perm(s, 2, RepKind::permutation);
        long fixed = 0;
        for (int x = 1; x <= 4; ++x) fixed += s(x) == x;
        CHECK(character(g) == Scalar(fixed));
        CHECK(character(standard_irrep(s, 2)) == Scalar(fixed));
    }
    CHECK(character(geom_perm(Permutation::from_cycles("(123456789)"), 3, RepKind::standard)) == Scalar(-1));
}

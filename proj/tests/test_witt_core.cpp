#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "witt/io.hpp"

using namespace witt;
using witt_test::random_mv;
using witt_test::uniform_int;

namespace {

// Jordan-Wigner matrices: a_i = Z x ... x Z x A x I x ... x I with A = [[0,1],[0,0]],
// b_i likewise with A^T. They satisfy the null-vector relations independently of
// the library.
ExactMatrix kron(const ExactMatrix& x, const ExactMatrix& y) {
    ExactMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            for (std::size_t k = 0; k < y.rows(); ++k)
                for (std::size_t l = 0; l < y.cols(); ++l) out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    return out;
}

ExactMatrix jw_generator(bool is_a, int i, int n) {
    const ExactMatrix z = ExactMatrix::from_rows({{1, 0}, {0, -1}});
    const ExactMatrix up = ExactMatrix::from_rows({{0, 1}, {0, 0}});
    ExactMatrix out = ExactMatrix::identity(1);
    for (int k = 1; k <= n; ++k) {
        const ExactMatrix f = k < i ? z : k == i ? (is_a ? up : up.transpose()) : ExactMatrix::identity(2);
        out = kron(out, f);
    }
    return out;
}

ExactMatrix jw_image(const Multivector& g) {
    const int n = g.rank();
    const std::size_t dim = std::size_t{1} << n;
    ExactMatrix out(dim, dim);
    for (const auto& [m, c] : g.terms()) {
        ExactMatrix w = ExactMatrix::identity(dim);
        for (const auto& gen : word_of(m)) w = witt_test::naive_product(w, jw_generator(gen.kind == Generator::Kind::a, gen.index, n));
        out = out + c * w;
    }
    return out;
}

Multivector mono(int n, Mask a, Mask b) { return Multivector::monomial(n, {a, b}); }

} // namespace

TEST_CASE("reduce_word examples", "[witt_core]") {
    const int n = 2;
    auto w = [](std::initializer_list<const char*> letters) {
        std::vector<Generator> out;
        for (const char* l : letters) out.push_back(Generator::parse(l));
        return out;
    };
    CHECK(reduce_word(w({"b1", "a1"}), 1, n) == Multivector::scalar(n, 1) - mono(n, 1, 1));
    CHECK(reduce_word(w({"a1", "b1", "a1"}), 1, n) == mono(n, 1, 0));
    CHECK(reduce_word(w({"b1", "a1", "b1"}), 1, n) == mono(n, 0, 1));
    CHECK(reduce_word(w({"a1", "a1"}), 1, n).is_zero());
    CHECK(reduce_word(w({"b2", "b2"}), 1, n).is_zero());
    CHECK(reduce_word(w({"a2", "a1"}), 1, n) == -mono(n, 3, 0));
    CHECK(reduce_word(w({"b2", "a1"}), 1, n) == -mono(n, 1, 2));
    CHECK(reduce_word(w({"-a1", "b1"}), 3, n) == Scalar(-3) * mono(n, 1, 1));
    CHECK(reduce_word({}, Scalar::fraction(1, 2), n) == Multivector::scalar(n, Scalar::fraction(1, 2)));
    CHECK_THROWS_AS(reduce_word(w({"a3"}), 1, n), witt::dimension_error);
    CHECK_THROWS_AS(Generator::parse("c1"), witt::parse_error);
    CHECK_THROWS_AS(Generator::parse("a0"), witt::parse_error);
}

TEST_CASE("single index products", "[witt_core]") {
    const int n = 1;
    const Multivector a = Multivector::a(1, n), b = Multivector::b(1, n), u = Multivector::u(1, n);
    const Multivector one = Multivector::scalar(n, 1);
    CHECK((a * a).is_zero());
    CHECK((b * b).is_zero());
    CHECK(a * b == u);
    CHECK(b * a == one - u);
    CHECK(u * u == u);
    CHECK(b * u == b);
    CHECK(u * a == a);
    CHECK((u * b).is_zero());
    CHECK((a * u).is_zero());
    CHECK(a * b + b * a == one);
    CHECK(Multivector::u_dagger(1, n) * Multivector::u_dagger(1, n) == Multivector::u_dagger(1, n));
}

TEST_CASE("null-vector relations for n <= 4", "[witt_core]") {
    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const Multivector ai = Multivector::a(i, n), aj = Multivector::a(j, n);
                const Multivector bi = Multivector::b(i, n), bj = Multivector::b(j, n);
                CHECK((ai * aj + aj * ai).is_zero());
                CHECK((bi * bj + bj * bi).is_zero());
                CHECK(ai * bj + bj * ai == Multivector::scalar(n, i == j ? 1 : 0));
            }
        }
    }
}

TEST_CASE("product agrees with the Jordan-Wigner matrices", "[witt_core]") {
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            const Multivector g = random_mv(n, trial % 3 == 0, n == 3 ? 12 : -1);
            const Multivector h = random_mv(n, false, n == 3 ? 12 : -1);
            CHECK(jw_image(g * h) == witt_test::naive_product(jw_image(g), jw_image(h)));
        }
    }
}

TEST_CASE("product of monomials equals reduction of the joined words", "[witt_core]") {
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            const Mask full = full_mask(n);
            const WittMonomial x{static_cast<Mask>(uniform_int(0, static_cast<int>(full))),
                                 static_cast<Mask>(uniform_int(0, static_cast<int>(full)))};
            const WittMonomial y{static_cast<Mask>(uniform_int(0, static_cast<int>(full))),
                                 static_cast<Mask>(uniform_int(0, static_cast<int>(full)))};
            auto word = word_of(x);
            const auto wy = word_of(y);
            word.insert(word.end(), wy.begin(), wy.end());
            CHECK(reduce_word(word, 1, n) == Multivector::monomial(n, x) * Multivector::monomial(n, y));
        }
    }
}

TEST_CASE("associativity and distributivity", "[witt_core][property]") {
    for (int n = 1; n <= 4; ++n) {
        const int trials = n <= 2 ? 100 : 30;
        for (int trial = 0; trial < trials; ++trial) {
            const int terms = n <= 2 ? -1 : 10;
            const Multivector x = random_mv(n, trial % 4 == 0, terms);
            const Multivector y = random_mv(n, false, terms);
            const Multivector z = random_mv(n, trial % 5 == 0, terms);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x + y) * z == x * z + y * z);
        }
    }
}

TEST_CASE("involutions", "[witt_core][property]") {
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            const bool cx = trial % 2 == 0;
            const Multivector x = random_mv(n, cx, n == 3 ? 15 : -1);
            const Multivector y = random_mv(n, cx, n == 3 ? 15 : -1);
            CHECK(reverse(x * y) == reverse(y) * reverse(x));
            CHECK(reverse(reverse(x)) == x);
            CHECK(grade_involution(x * y) == grade_involution(x) * grade_involution(y));
            CHECK(grade_involution(grade_involution(x)) == x);
            CHECK(clifford_conj(x * y) == clifford_conj(y) * clifford_conj(x));
            CHECK(clifford_conj(x) == grade_involution(reverse(x)));
        }
        for (int i = 1; i <= n; ++i) {
            for (const Multivector& v : {Multivector::a(i, n), Multivector::b(i, n), Multivector::e(i, n)}) {
                CHECK(reverse(v) == v);
                CHECK(grade_involution(v) == -v);
                CHECK(clifford_conj(v) == -v);
            }
            CHECK(reverse(Multivector::u(i, n)) == Multivector::u_dagger(i, n));
        }
        // the formal unit i transforms as i -> (-1)^n i under reversion and to -i under grade involution
        const Multivector i_unit = Multivector::scalar(n, Scalar::imaginary_unit());
        CHECK(reverse(i_unit) == (n % 2 ? -i_unit : i_unit));
        CHECK(grade_involution(i_unit) == -i_unit);
    }
}

TEST_CASE("blade basis: squares and anticommutation", "[witt_core]") {
    for (int n = 1; n <= 4; ++n) {
        const Multivector one = Multivector::scalar(n, 1);
        for (int i = 1; i <= n; ++i) {
            const Multivector ei = Multivector::e(i, n), fi = Multivector::f(i, n);
            CHECK(ei * ei == one);
            CHECK(fi * fi == -one);
            CHECK((ei * fi + fi * ei).is_zero());
            CHECK(ei * fi == one - Scalar(2) * Multivector::u(i, n));
            for (int j = i + 1; j <= n; ++j) {
                CHECK((ei * Multivector::e(j, n) + Multivector::e(j, n) * ei).is_zero());
                CHECK((ei * Multivector::f(j, n) + Multivector::f(j, n) * ei).is_zero());
                CHECK((fi * Multivector::f(j, n) + Multivector::f(j, n) * fi).is_zero());
            }
        }
    }
}

TEST_CASE("blade round trip and structure constants", "[witt_core][property]") {
    for (int n = 1; n <= 3; ++n) {
        const witt_test::BladeOracle oracle{n};
        for (int trial = 0; trial < 80; ++trial) {
            const Multivector x = random_mv(n, trial % 3 == 0, n == 3 ? 12 : -1);
            const Multivector y = random_mv(n, false, n == 3 ? 12 : -1);
            CHECK(from_blade_basis(to_blade_basis(x)) == x);
            CHECK(to_blade_basis(x * y) == oracle.multiply(to_blade_basis(x), to_blade_basis(y)));
        }
    }
    // e1 f1 as a blade
    const BladeMultivector ef = to_blade_basis(Multivector::e(1, 1) * Multivector::f(1, 1));
    REQUIRE(ef.terms.size() == 1);
    CHECK(ef.terms.begin()->first == BladeMonomial{1, 1});
    CHECK(ef.terms.begin()->second == Scalar(1));
}

TEST_CASE("grade projection and scalar part", "[witt_core]") {
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const Multivector x = random_mv(n, false, n == 3 ? 12 : -1);
            Multivector sum(n);
            for (int k = 0; k <= 2 * n; ++k) sum += grade_project(x, k);
            CHECK(sum == x);
            CHECK(grade_project(x, 0) == Multivector::scalar(n, scalar_part(x)));
            CHECK(grade_project(x, 2 * n + 1).is_zero());
        }
        for (int i = 1; i <= n; ++i) {
            CHECK(grade_project(Multivector::a(i, n), 1) == Multivector::a(i, n));
            CHECK(scalar_part(Multivector::u(i, n)) == Scalar::fraction(1, 2));
            CHECK(grade_project(wedge_ab(i, n), 2) == wedge_ab(i, n));
        }
    }
}

TEST_CASE("monomials are linearly independent", "[witt_core]") {
    for (int n = 1; n <= 3; ++n) {
        std::vector<ExactMatrix> cols;
        const Mask full = full_mask(n);
        for (Mask a = 0; a <= full; ++a)
            for (Mask b = 0; b <= full; ++b) cols.push_back(vectorize(jw_image(mono(n, a, b))));
        CHECK(rank(hstack(cols)) == cols.size());
    }
}

TEST_CASE("rank checks and text forms", "[witt_core]") {
    CHECK_THROWS_AS(Multivector::a(1, 1) + Multivector::a(1, 2), witt::dimension_error);
    CHECK_THROWS_AS(Multivector::a(1, 1) * Multivector::a(1, 2), witt::dimension_error);
    CHECK_THROWS_AS(Multivector::a(3, 2), witt::dimension_error);
    CHECK_THROWS_AS(Multivector(1).add_term({2, 0}, 1), witt::dimension_error);
    CHECK(to_string(WittMonomial{1, 3}) == "a1b12");
    CHECK(to_string(WittMonomial{}) == "1");
    CHECK(io::pretty(Multivector::a(2, 2) * Multivector::a(1, 2)) == "-a12");
    CHECK(io::pretty(Multivector::scalar(2, Scalar::fraction(1, 2)) - mono(2, 1, 1) + Scalar(3) * mono(2, 2, 0)) ==
          "1/2 - a1b1 + 3 a2");
    CHECK(io::pretty(Multivector(2)) == "0");
}

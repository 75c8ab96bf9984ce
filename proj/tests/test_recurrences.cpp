#include <catch2/catch_amalgamated.hpp>

#include "qes/msystem.hpp"
#include "qes/recurrences.hpp"

using qes::BiPoly;
using qes::Poly;
using qes::Rational;

TEST_CASE("Sigma and sigma first entries") {
    const qes::SigmaTable tab(4);
    const Poly xi = Poly::variable("xi");
    const Poly one = Poly::constant(1, "xi");
    CHECK(tab.Sigma(0) == Poly::constant(2));
    CHECK(tab.sigma(1) == one);
    CHECK(tab.Sigma(1) == xi - Rational(2) * one);
    CHECK(tab.sigma(2) == xi - Rational(3) * one);
    CHECK(tab.Sigma(2) == xi * xi - Rational(4) * xi + Rational(2) * one);
    CHECK(tab.sigma(3) == xi * xi - Rational(5) * xi + Rational(5) * one);
    CHECK(tab.Sigma(3) == xi * xi * xi - Rational(6) * xi * xi + Rational(9) * xi - Rational(2) * one);
    CHECK(tab.sigma(4) == xi * xi * xi - Rational(7) * xi * xi + Rational(14) * xi - Rational(7) * one);
    CHECK_THROWS_AS(tab.sigma(0), std::out_of_range);
    CHECK_THROWS_AS(tab.Sigma(5), std::out_of_range);
}

TEST_CASE("degree and leading coefficient laws") {
    const qes::SigmaTable tab(40);
    for (unsigned k = 1; k <= 40; ++k) {
        CHECK(tab.Sigma(k).degree() == static_cast<int>(k));
        CHECK(tab.Sigma(k).leading() == 1);
        CHECK(tab.sigma(k).degree() == static_cast<int>(k) - 1);
        CHECK(tab.sigma(k).leading() == 1);
        // fixed points: Sigma_k(4) = 2, sigma_k(4) = 1 for all k
        CHECK(tab.Sigma(k).evaluate(4) == 2);
        CHECK(tab.sigma(k).evaluate(4) == 1);
    }
}

TEST_CASE("Chebyshev reduction holds far beyond the printed range") {
    for (unsigned k = 1; k <= 50; ++k) CHECK(qes::chebyshev_reduction(k));
}

TEST_CASE("N=2 chains") {
    for (unsigned q = 1; q <= 12; ++q) {
        const auto branches = qes::n2_chain(q);
        REQUIRE(branches.size() == (q % 2 == 1 ? 2u : 1u));
        for (const auto& br : branches) {
            CHECK((br.root == 1 || (br.root == -1 && q % 2 == 1)));
            REQUIRE(br.s.size() == q);
            REQUIRE(br.p.size() == 2);
            // geometric couplings s_k = alpha^k
            Rational ak = br.root;
            for (unsigned k = 0; k < q; ++k) {
                CHECK(br.s[k] == ak);
                ak *= br.root;
            }
            const qes::BandedSystem<Rational> sys(2, static_cast<int>(q), br.s);
            for (const auto& r : qes::residual(sys, br.p)) CHECK(r == 0);
        }
    }
}

TEST_CASE("degenerate N=3 families exist only at odd q") {
    for (unsigned q = 1; q <= 15; ++q) {
        const auto branches = qes::n3_degenerate(q);
        if (q % 2 == 0) {
            CHECK(branches.empty());
            continue;
        }
        const unsigned Q = (q - 1) / 2;
        REQUIRE(branches.size() == ((Q + 1) % 2 == 0 ? 2u : 1u));
        for (const auto& br : branches) {
            REQUIRE(br.s.size() == q);
            REQUIRE(br.p.size() == 3);
            CHECK(br.p[1] == 0);
            for (unsigned k = 1; k <= q; k += 2) CHECK(br.s[k - 1] == 0);
            const qes::BandedSystem<Rational> sys(3, static_cast<int>(q), br.s);
            for (const auto& r : qes::residual(sys, br.p)) CHECK(r == 0);
        }
    }
}

TEST_CASE("chain edge cases") {
    CHECK(qes::n3_degenerate(0).empty());
    CHECK_THROWS_AS(qes::n2_chain(0), std::invalid_argument);
}

TEST_CASE("BiPoly Laurent bookkeeping") {
    const BiPoly z = BiPoly::Z();
    const BiPoly y = BiPoly::Y();
    const BiPoly p = y * z * z + BiPoly::term(3, 0, 2);
    CHECK(p.divisible_by_z(2));
    CHECK_FALSE(p.divisible_by_z(3));
    CHECK(p.divide_z(2) == y + BiPoly::constant(3));
    CHECK_THROWS_AS(p.divide_z(3), std::runtime_error);
    CHECK(BiPoly::sqrtY() * BiPoly::sqrtY() == y);
    CHECK(y.divide_sqrt_y() == BiPoly::sqrtY());
    CHECK(p.is_polynomial());
    CHECK_FALSE(BiPoly::term(1, 0, -1).is_polynomial());
}

TEST_CASE("N=4 seeds") {
    const qes::N4Table tab(3);
    const BiPoly Y = BiPoly::Y(), Z = BiPoly::Z();
    CHECK(tab.P(0) == Y + BiPoly::constant(2));
    CHECK(tab.Q(0) == Y * Z + BiPoly::constant(3) * Z - BiPoly::constant(3));
}

TEST_CASE("unified W recurrence reproduces the graded P/Q sequence") {
    const unsigned nmax = 20;
    const qes::N4Table tab(nmax / 2 + 2);
    const auto W = qes::w_sequence(nmax); // W[0] = W_{-2}
    for (unsigned k = 1; k <= nmax; ++k) CHECK(W[k + 2] == tab.W(k));
}

TEST_CASE("Z-divisibility grading of the W sequence") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto chk = qes::n4_divisibility(n);
        CHECK(chk.holds);
        CHECK(chk.failing_w_index == -1);
    }
}

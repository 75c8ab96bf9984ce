#include <catch2/catch_amalgamated.hpp>

#include "qes/msystem.hpp"
#include "qes/numeric.hpp"

using qes::BandedSystem;
using qes::Rational;

TEST_CASE("validation") {
    CHECK_THROWS_AS(BandedSystem<Rational>(1, 3, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(BandedSystem<Rational>(3, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(BandedSystem<Rational>(3, 3, {1, 2}), std::invalid_argument);
    const BandedSystem<Rational> ok(3, 3, {1, 2, 3});
    CHECK(ok.rows() == 5);
    CHECK(ok.cols() == 3);
}

TEST_CASE("matrix layout at N=3, q=3") {
    // distinct markers so every placement is visible
    const Rational s1 = 5, s2 = 7, s3 = 11;
    const BandedSystem<Rational> sys(3, 3, {s1, s2, s3});
    const auto m = qes::build_matrix(sys);
    const std::vector<std::vector<Rational>> want = {
        {s1, 1, 0},
        {s2, s1, 2},
        {s3, s2, s1},
        {2, s3, s2},
        {0, 1, s3},
    };
    CHECK(m == want);
}

TEST_CASE("matrix layout at N=2") {
    const BandedSystem<Rational> sys(2, 3, {5, 7, 11});
    const auto m = qes::build_matrix(sys);
    const std::vector<std::vector<Rational>> want = {
        {5, 1},
        {7, 5},
        {11, 7},
        {1, 11},
    };
    CHECK(m == want);
}

TEST_CASE("narrow band q <= N-2 keeps all three bands inside the square") {
    // N=4, q=1: the matrix is square, s_1 sits on the diagonal and the
    // integer weights flank it on the super- and subdiagonal
    const BandedSystem<Rational> sys(4, 1, {5});
    const auto m = qes::build_matrix(sys);
    const std::vector<std::vector<Rational>> want = {
        {5, 1, 0, 0},
        {3, 5, 2, 0},
        {0, 2, 5, 3},
        {0, 0, 1, 5},
    };
    CHECK(m == want);
}

TEST_CASE("known exact solution has zero residual") {
    const BandedSystem<Rational> sys(3, 3, {2, 2, 2});
    const std::vector<Rational> p = {Rational(-1, 2), 1, Rational(-1, 2)};
    for (const auto& r : qes::residual(sys, p)) CHECK(r == 0);

    const std::vector<Rational> wrong = {1, 1, 1};
    bool all_zero = true;
    for (const auto& r : qes::residual(sys, wrong)) all_zero = all_zero && r == 0;
    CHECK_FALSE(all_zero);
    CHECK_THROWS_AS(qes::residual(sys, {1, 1}), std::invalid_argument);
}

TEST_CASE("residual is linear in p") {
    const BandedSystem<Rational> sys(4, 6, {1, -2, 3, -4, 5, -6});
    const std::vector<Rational> p1 = {1, 2, 3, 4}, p2 = {-5, 7, 0, 2};
    std::vector<Rational> comb(4);
    for (int i = 0; i < 4; ++i) comb[i] = Rational(3) * p1[i] - Rational(2) * p2[i];
    const auto r1 = qes::residual(sys, p1);
    const auto r2 = qes::residual(sys, p2);
    const auto rc = qes::residual(sys, comb);
    for (size_t i = 0; i < rc.size(); ++i)
        CHECK(rc[i] == Rational(3) * r1[i] - Rational(2) * r2[i]);
}

TEST_CASE("tilde system is the doubly reversed matrix") {
    // reversing the coupling sequence flips the matrix upside down and
    // left to right; checked entrywise over a spread of shapes
    for (int N = 2; N <= 6; ++N) {
        for (int q = 1; q <= 25; q += 3) {
            std::vector<Rational> s(static_cast<size_t>(q));
            for (int k = 0; k < q; ++k) s[static_cast<size_t>(k)] = Rational(100 + 17 * k, 3);
            const BandedSystem<Rational> sys(N, q, s);
            const auto m = qes::build_matrix(sys);
            const auto mt = qes::build_matrix(qes::tilde(sys));
            const size_t R = m.size(), C = m[0].size();
            for (size_t i = 0; i < R; ++i)
                for (size_t j = 0; j < C; ++j)
                    CHECK(mt[i][j] == m[R - 1 - i][C - 1 - j]);
        }
    }
}

TEST_CASE("tilde is an involution") {
    const BandedSystem<Rational> sys(3, 5, {1, 2, 3, 4, 5});
    const auto back = qes::tilde(qes::tilde(sys));
    CHECK(back.s == sys.s);
}

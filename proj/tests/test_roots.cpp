#include <catch2/catch_amalgamated.hpp>

#include "qes/roots.hpp"

using qes::BigFloat;
using qes::Poly;
using qes::Rational;

namespace {
BigFloat abs_bf(const BigFloat& v) { return boost::multiprecision::abs(v); }
} // namespace

TEST_CASE("rational roots are detected exactly") {
    const Poly x = Poly::variable("x");
    // roots 2, -1, 1/3
    const Poly p = (x - Poly::constant(2)) * (x + Poly::constant(1)) *
                   (Rational(3) * x - Poly::constant(1));
    auto roots = qes::real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].exact());
    CHECK(roots[0].rational_value() == -1);
    CHECK(roots[1].rational_value() == Rational(1, 3));
    CHECK(roots[2].rational_value() == 2);
}

TEST_CASE("irrational roots are certified by shrinking intervals") {
    const Poly x = Poly::variable("x");
    const Poly p = x * x - Poly::constant(2);
    for (unsigned bits : {64u, 128u, 256u}) {
        auto roots = qes::real_roots(p, bits);
        REQUIRE(roots.size() == 2);
        for (const auto& r : roots) {
            CHECK_FALSE(r.exact());
            CHECK(r.hi - r.lo <= qes::pow2_inv(bits));
            // interval brackets the root: p changes sign across it
            CHECK(p.evaluate(r.lo) * p.evaluate(r.hi) < 0);
        }
        const qes::PrecisionGuard guard(bits + 16);
        const BigFloat s2 = boost::multiprecision::sqrt(BigFloat(2));
        CHECK(abs_bf(roots[1].value - s2) <= qes::to_bigfloat(qes::pow2_inv(bits)));
    }
}

TEST_CASE("repeated roots are reported once") {
    const Poly x = Poly::variable("x");
    const Poly p = (x - Poly::constant(1)) * (x - Poly::constant(1)) * (x + Poly::constant(3));
    auto roots = qes::real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].rational_value() == -3);
    CHECK(roots[1].rational_value() == 1);
}

TEST_CASE("polynomials with no real roots") {
    const Poly x = Poly::variable("x");
    CHECK(qes::real_roots(x * x + Poly::constant(1)).empty());
    CHECK(qes::count_real_roots(x * x + Poly::constant(1)) == 0);
    CHECK(qes::count_real_roots(x * x * x - Rational(3) * x + Poly::constant(1)) == 3);
}

TEST_CASE("roots are sorted ascending and zero handled") {
    const Poly x = Poly::variable("x");
    const Poly p = x * (x * x - Poly::constant(5));
    auto roots = qes::real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].value < roots[1].value);
    CHECK(roots[1].value < roots[2].value);
    CHECK(roots[1].exact());
    CHECK(roots[1].rational_value() == 0);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(qes::real_roots(Poly("x")), std::invalid_argument);
    CHECK(qes::real_roots(Poly::constant(7)).empty());
    auto lin = qes::real_roots(Poly({Rational(-6), Rational(2)}, "x"));
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].rational_value() == 3);
}

TEST_CASE("wide dynamic range coefficients") {
    // 10^6 x^2 - 1: roots +-1e-3
    const Poly p({Rational(-1), Rational(0), Rational(1000000)}, "x");
    auto roots = qes::real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[1].rational_value() == Rational(1, 1000));
}

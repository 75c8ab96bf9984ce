#include <catch2/catch_amalgamated.hpp>

#include "qes/tables.hpp"

TEST_CASE("expression evaluator") {
    using qes::BigFloat;
    const qes::PrecisionGuard guard(128);
    const BigFloat v = qes::eval_expr("(sqrt(5)-1)/2");
    CHECK(boost::multiprecision::abs(v - BigFloat("0.61803398874989484820458683436563811772")) < 1e-30);
    CHECK(qes::eval_expr("-2") == -2);
    CHECK(qes::eval_expr("2*3+4/8") == BigFloat("6.5"));
    CHECK_THROWS(qes::eval_expr("sqrt(2"));
}

TEST_CASE("published root and coefficient tables reproduce") {
    for (int which = 1; which <= 4; ++which) {
        const auto chk = qes::check_table(which);
        INFO("table " << which);
        for (const auto& row : chk.rows) {
            INFO("q=" << row.q);
            CHECK(row.pass);
        }
        CHECK(chk.pass);
    }
    CHECK_THROWS_AS(qes::check_table(5), std::invalid_argument);
}

TEST_CASE("table cells carry both sides of the comparison") {
    const auto chk = qes::check_table(2);
    REQUIRE(!chk.rows.empty());
    const auto& row = chk.rows.front(); // q=2: coefficients 1, 1
    REQUIRE(row.cells.size() == 2);
    CHECK(row.cells[0].expected == "1");
    CHECK(row.cells[0].got == "1");
}

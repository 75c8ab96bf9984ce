#include <catch2/catch_amalgamated.hpp>

#include "qes/oracle.hpp"

#include <cstdlib>
#include <thread>

namespace {

qes::OracleConfig test_config() {
    qes::OracleConfig cfg;
    unsigned hw = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("QES_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) hw = static_cast<unsigned>(v);
    }
    cfg.threads = hw == 0 ? 1 : hw;
    return cfg;
}

} // namespace

TEST_CASE("oracle agrees with the N=2 chain") {
    const auto cfg = test_config();
    for (unsigned q = 1; q <= 8; ++q) {
        const auto rep = qes::oracle_compare(2, q, 1e-6L, cfg);
        INFO("N=2 q=" << q);
        CHECK(rep.agrees());
        CHECK(rep.missing_in_oracle.empty());
        CHECK(rep.missing_in_closed_form.empty());
        CHECK(rep.matched.size() == (q % 2 == 1 ? 2u : 1u));
    }
}

TEST_CASE("oracle agrees with the N=3 closed forms including degenerate families") {
    const auto cfg = test_config();
    for (unsigned q = 1; q <= 7; ++q) {
        const auto rep = qes::oracle_compare(3, q, 1e-6L, cfg);
        INFO("N=3 q=" << q);
        CHECK(rep.agrees());
        CHECK(rep.missing_in_oracle.empty());
        CHECK(rep.missing_in_closed_form.empty());
    }
}

TEST_CASE("oracle solutions are residual-certified") {
    const auto cfg = test_config();
    const auto rep = qes::oracle_solve(3, 5, cfg);
    CHECK(!rep.solutions.empty());
    for (const auto& sol : rep.solutions) {
        CHECK(sol.residual <= 1e-10L);
        REQUIRE(sol.s.size() == 5);
        REQUIRE(sol.p.size() == 3);
    }
    CHECK(rep.seeds_converged <= rep.seeds_tried);
}

TEST_CASE("N=4 oracle runs and certifies") {
    auto cfg = test_config();
    cfg.step = 0.25L; // 3-D grid: keep the seed count modest
    const auto rep = qes::oracle_solve(4, 5, cfg);
    for (const auto& sol : rep.solutions) {
        CHECK(sol.residual <= 1e-10L);
        REQUIRE(sol.s.size() == 5);
        REQUIRE(sol.p.size() == 4);
    }
}

TEST_CASE("deterministic output") {
    auto cfg = test_config();
    const auto a = qes::oracle_solve(3, 4, cfg);
    cfg.threads = cfg.threads > 1 ? 1 : 2;
    const auto b = qes::oracle_solve(3, 4, cfg);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (size_t i = 0; i < a.solutions.size(); ++i)
        for (size_t k = 0; k < a.solutions[i].s.size(); ++k)
            CHECK(std::abs(a.solutions[i].s[k] - b.solutions[i].s[k]) < 1e-8L);
}

TEST_CASE("oracle input validation") {
    CHECK_THROWS_AS(qes::oracle_solve(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(qes::oracle_solve(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(qes::oracle_solve(4, 3), std::invalid_argument); // needs q >= 4
    CHECK_THROWS_AS(qes::closed_form_solutions(4, 5), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <sstream>

#include "qinfo/verify.hpp"

using namespace qinfo;

TEST_CASE("verification suites pass on a healthy build", "[verify]") {
    const auto results = run_all_suites(7);
    REQUIRE(results.size() == 9);
    for (const SuiteResult& r : results) {
        INFO(r.name << " max dev " << r.max_deviation);
        CHECK(r.pass);
    }
    std::ostringstream os;
    REQUIRE(print_report(os, results, 7));
}

TEST_CASE("the analytic-numeric suite notices corruption", "[verify]") {
    // Corrupted-build scenario: if the closed-form entropy drifted from the
    // brute-force value, the suite must go red.
    std::vector<ModelPoint> rows;
    for (int k = 0; k < 8; ++k)
        rows.push_back(
            evaluate_point({std::numbers::pi / 3.0, 0.0, 0.25 * k}, false));
    REQUIRE(check_analytic_vs_numeric(rows).pass);

    rows[3].se_analytic += 1e-6;  // simulate a broken closed form
    const SuiteResult corrupted = check_analytic_vs_numeric(rows);
    REQUIRE_FALSE(corrupted.pass);
    REQUIRE(corrupted.max_deviation >= 1e-6 - 1e-12);
}

TEST_CASE("reports are deterministic for a fixed seed", "[verify]") {
    // Only the Kraus-freedom suite consumes randomness; two runs with one
    // seed must render the same bytes.
    const SuiteResult a = check_kraus_unitary_freedom(123, 5);
    const SuiteResult b = check_kraus_unitary_freedom(123, 5);
    REQUIRE(a.max_deviation == b.max_deviation);

    std::ostringstream ra, rb;
    print_report(ra, {a}, 123);
    print_report(rb, {b}, 123);
    REQUIRE(ra.str() == rb.str());
}

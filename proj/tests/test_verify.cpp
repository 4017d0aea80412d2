#include <doctest.h>

#include "fortdyn/scan.hpp"
#include "fortdyn/verify.hpp"

using namespace fortdyn;

TEST_CASE("all checks pass at reduced bounds") {
    auto expect_pass = [](const verify::CheckReport& r) {
        CAPTURE(r.name);
        CAPTURE(r.counterexample.value_or(""));
        CHECK(r.pass);
        CHECK(!r.counterexample.has_value());
    };
    expect_pass(verify::check_remark_height_equivalence(4));
    expect_pass(verify::check_group_sequence_charac(6, 4, 42, 50));
    expect_pass(verify::check_selfmap_charac(4));
    expect_pass(verify::check_classification(8));
    expect_pass(verify::check_reduction(4, 5));
    expect_pass(verify::check_counterexample_44());
    expect_pass(verify::check_height_set_A(5, 10));
}

TEST_CASE("max_size=1 passes trivially") {
    CHECK(verify::check_remark_height_equivalence(1).pass);
    CHECK(verify::check_selfmap_charac(1).pass);
}

TEST_CASE("harness self-test: a corrupted closure count is caught") {
    auto scan = scan::scan_height_equivalence(3, 1, /*closure_bias=*/1);
    REQUIRE(scan.counterexample.has_value());
    CHECK(scan.counterexample->find("chain height") != std::string::npos);
}

TEST_CASE("serial and parallel scans agree") {
    for (int m = 3; m <= 5; ++m) {
        auto s = scan::scan_selfmap_sequences_serial(m);
        auto p = scan::scan_selfmap_sequences_parallel(m, 4);
        CHECK(s.sequences == p.sequences);
        CHECK(s.full_length == p.full_length);
        CHECK(s.systems_scanned == p.systems_scanned);
        CHECK(!s.step_violation);
        CHECK(!p.step_violation);
    }
    for (int m = 3; m <= 4; ++m) {
        auto s = scan::scan_height_equivalence_serial(m);
        auto p = scan::scan_height_equivalence_parallel(m, 4);
        CHECK(s.systems_scanned == p.systems_scanned);
        CHECK(s.subsets_checked == p.subsets_checked);
        CHECK(s.counterexample == p.counterexample);
    }
}

TEST_CASE("2-generator sampling is reproducible for a fixed seed") {
    auto a = verify::check_group_sequence_charac(4, 4, 123, 100);
    auto b = verify::check_group_sequence_charac(4, 4, 123, 100);
    CHECK(a.pass == b.pass);
    CHECK(a.params == b.params);
}

TEST_CASE("run_suite and coverage") {
    verify::SuiteOptions opts;
    opts.max_size = 3;
    auto reports = verify::run_suite("all", opts);
    CHECK(reports.size() == 7);
    for (const auto& row : verify::coverage_matrix(reports)) CHECK(row.verdict == "pass");

    auto one = verify::run_suite("ce44", opts);
    REQUIRE(one.size() == 1);
    CHECK(one[0].pass);

    CHECK_THROWS_AS(verify::run_suite("nope", opts), error);
}

#pragma once

// Machine-verification suites: each statement of the underlying theory is
// checked exhaustively or constructively at desk scale. A failing check
// always carries a replayable counterexample description.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fortdyn::verify {

struct CheckReport {
    std::string name;
    std::string params;
    bool pass = false;
    std::optional<std::string> counterexample;
    double elapsed_seconds = 0.0;
};

// Chain-oracle height equals closure-count height for every invariant
// subset of every single-generator system on up to max_size points.
CheckReport check_remark_height_equivalence(int max_size, int jobs = 1);

// Group sequences: every (0^p,1^q) witness with p+q <= max_pq realizes its
// target; all permutation systems up to max_finite points (plus seeded
// 2-generator samples) give all-zero sequences; for each height n the
// distinct infinite-group sequences number exactly n.
CheckReport check_group_sequence_charac(int max_pq, int max_finite, std::uint64_t seed,
                                        int samples_per_size = 1000, int jobs = 1);

// Self-map sequences: every single-self-map monoid obeys the step law, and
// the full-length sequence sets match the step-sequence enumeration with
// cardinality 2^n.
CheckReport check_selfmap_charac(int max_size, int jobs = 1);

// Every symbolic system with p+q <= max_pq classifies as (p-1, q+1), and
// across that corpus equal indicator sequences <=> isomorphic posets.
CheckReport check_classification(int max_pq);

// reduce_to_finite round-trips to an isomorphic poset with orbit(k) equal
// to the downset of k, over all single-generator systems on up to
// max_finite points and all symbolic systems with p+q <= max_sym.
CheckReport check_reduction(int max_finite, int max_sym, int jobs = 1);

// The (0,1,2) separation: unclassifiable as a group topology, rejected by
// the {0,1}-valued group law, yet realized by a self-map witness whose
// topology is the 3-chain.
CheckReport check_counterexample_44();

// Achievable heights: permutations on m <= max_m points reach exactly
// {0,...,m-1}; symbolic witnesses reach each height 1..max_i_countable.
CheckReport check_height_set_A(int max_m, int max_i_countable);

struct SuiteOptions {
    int max_size = 5;
    std::uint64_t seed = 1;
    int jobs = 1;
};

struct CoverageRow {
    std::string statement;
    std::string check;
    std::string verdict;
};

// Runs one named suite ("heights", "group", "selfmap", "classify",
// "reduce", "ce44") or all of them, and the statement -> verdict coverage.
std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opts);
std::vector<CoverageRow> coverage_matrix(const std::vector<CheckReport>& reports);

}  // namespace fortdyn::verify

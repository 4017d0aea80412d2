#pragma once

// Exhaustive-enumeration kernels behind the verification suites. Each scan
// has a serial reference implementation and an OpenMP-sharded one; the two
// must agree bit for bit (tested, and timed by the bench tool). Workers own
// disjoint index ranges and merge ordered results, so output is
// deterministic regardless of thread count.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fortdyn/core_action.hpp"

namespace fortdyn::scan {

// Decode self-map number `index` (base-m digits) on m points.
std::vector<int> nth_selfmap(int m, std::uint64_t index);

std::uint64_t selfmap_count(int m);  // m^m

// All permutations of m points in lexicographic order.
std::vector<std::vector<int>> all_permutations(int m);

// Indicator sequences of every single-self-map monoid on m points.
struct SelfmapScan {
    std::set<std::vector<int>> sequences;            // all observed
    std::set<std::vector<int>> full_length;          // those with m distinct closures
    std::uint64_t systems_scanned = 0;
    std::optional<std::string> step_violation;       // first sequence breaking the step law
};

SelfmapScan scan_selfmap_sequences_serial(int m);
SelfmapScan scan_selfmap_sequences_parallel(int m, int jobs);
SelfmapScan scan_selfmap_sequences(int m, int jobs);  // picks parallel when jobs != 1

// Chain-oracle height vs closure-count height over every invariant subset
// of every single-generator system on m points (all m^m self-maps as
// monoids, all m! permutations as groups). `closure_bias` exists so the
// harness self-test can force a failure; it is added to the closure-count
// side before comparing.
struct HeightEquivalenceScan {
    std::uint64_t systems_scanned = 0;
    std::uint64_t subsets_checked = 0;
    std::optional<std::string> counterexample;
};

HeightEquivalenceScan scan_height_equivalence_serial(int m, int closure_bias = 0);
HeightEquivalenceScan scan_height_equivalence_parallel(int m, int jobs, int closure_bias = 0);
HeightEquivalenceScan scan_height_equivalence(int m, int jobs, int closure_bias = 0);

}  // namespace fortdyn::scan

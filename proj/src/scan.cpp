#include "fortdyn/scan.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "fortdyn/indicator.hpp"

#ifdef FORTDYN_HAS_OPENMP
#include <omp.h>
#endif

namespace fortdyn::scan {

std::uint64_t selfmap_count(int m) {
    std::uint64_t c = 1;
    for (int i = 0; i < m; ++i) c *= static_cast<std::uint64_t>(m);
    return c;
}

std::vector<int> nth_selfmap(int m, std::uint64_t index) {
    std::vector<int> g(m);
    for (int i = 0; i < m; ++i) {
        g[i] = static_cast<int>(index % m);
        index /= m;
    }
    return g;
}

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

namespace {

std::string describe_map(const std::vector<int>& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
    }
    return s + "]";
}

std::string describe_sequence(const std::vector<int>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s;
}

void scan_selfmap_range(int m, std::uint64_t lo, std::uint64_t hi, SelfmapScan& out) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        FiniteDynSystem sys{m, {nth_selfmap(m, idx)}, ActionKind::Monoid};
        auto seq = indicator_sequence(closure_poset(sys));
        if (!out.step_violation) {
            bool ok = seq[0] == 0;
            for (std::size_t i = 1; i < seq.size() && ok; ++i) {
                int step = seq[i] - seq[i - 1];
                if (step < 0 || step > 1) ok = false;
            }
            if (!ok)
                out.step_violation = "map " + describe_map(sys.generators[0]) + " has sequence (" +
                                     describe_sequence(seq) + ")";
        }
        if (static_cast<int>(seq.size()) == m) out.full_length.insert(seq);
        out.sequences.insert(std::move(seq));
        ++out.systems_scanned;
    }
}

void merge(SelfmapScan& into, SelfmapScan&& part) {
    into.sequences.insert(part.sequences.begin(), part.sequences.end());
    into.full_length.insert(part.full_length.begin(), part.full_length.end());
    into.systems_scanned += part.systems_scanned;
    if (!into.step_violation) into.step_violation = std::move(part.step_violation);
}

// One system's worth of the height-equivalence check: a single longest-chain
// DP over all invariant subsets, compared against the closure-count formula
// subset by subset.
bool check_system_heights(const FiniteDynSystem& sys, int closure_bias, std::uint64_t& subsets,
                          std::string& counterexample) {
    auto invariants = invariant_subsets(sys);  // ascending; subsets precede supersets
    std::vector<int> longest(std::size_t{1} << sys.size, -1);
    for (Mask s : invariants) {
        int best = 0;
        for (Mask t = (s - 1) & s; t; t = (t - 1) & s)
            if (longest[t] >= 0) best = std::max(best, longest[t] + 1);
        longest[s] = best;
    }
    for (Mask w : invariants) {
        ++subsets;
        int via_closures = height_via_closures(sys, w) + closure_bias;
        if (longest[w] != via_closures) {
            std::ostringstream os;
            os << (sys.kind == ActionKind::Group ? "group" : "monoid") << " generator "
               << describe_map(sys.generators[0]) << " subset mask " << w << ": chain height "
               << longest[w] << " vs closure height " << via_closures;
            counterexample = os.str();
            return false;
        }
    }
    return true;
}

void scan_heights_range(int m, const std::vector<std::vector<int>>& perms, std::uint64_t lo,
                        std::uint64_t hi, int closure_bias, HeightEquivalenceScan& out) {
    std::uint64_t maps = selfmap_count(m);
    for (std::uint64_t idx = lo; idx < hi && !out.counterexample; ++idx) {
        FiniteDynSystem sys;
        sys.size = m;
        if (idx < maps) {
            sys.kind = ActionKind::Monoid;
            sys.generators = {nth_selfmap(m, idx)};
        } else {
            sys.kind = ActionKind::Group;
            sys.generators = {perms[idx - maps]};
        }
        std::string ce;
        if (!check_system_heights(sys, closure_bias, out.subsets_checked, ce))
            out.counterexample = std::move(ce);
        ++out.systems_scanned;
    }
}

void merge(HeightEquivalenceScan& into, HeightEquivalenceScan&& part) {
    into.systems_scanned += part.systems_scanned;
    into.subsets_checked += part.subsets_checked;
    if (!into.counterexample) into.counterexample = std::move(part.counterexample);
}

template <class Result, class RangeFn>
Result sharded(std::uint64_t total, int jobs, RangeFn&& run_range) {
    Result merged;
#ifdef FORTDYN_HAS_OPENMP
    int shards = std::max(1, jobs);
    std::vector<Result> parts(shards);
#pragma omp parallel for num_threads(shards) schedule(static)
    for (int s = 0; s < shards; ++s) {
        std::uint64_t lo = total * s / shards;
        std::uint64_t hi = total * (s + 1) / shards;
        run_range(lo, hi, parts[s]);
    }
    for (auto& part : parts) merge(merged, std::move(part));
#else
    (void)jobs;
    run_range(0, total, merged);
#endif
    return merged;
}

}  // namespace

SelfmapScan scan_selfmap_sequences_serial(int m) {
    SelfmapScan out;
    scan_selfmap_range(m, 0, selfmap_count(m), out);
    return out;
}

SelfmapScan scan_selfmap_sequences_parallel(int m, int jobs) {
    return sharded<SelfmapScan>(selfmap_count(m), jobs, [m](std::uint64_t lo, std::uint64_t hi,
                                                            SelfmapScan& out) {
        scan_selfmap_range(m, lo, hi, out);
    });
}

SelfmapScan scan_selfmap_sequences(int m, int jobs) {
    return jobs == 1 ? scan_selfmap_sequences_serial(m) : scan_selfmap_sequences_parallel(m, jobs);
}

HeightEquivalenceScan scan_height_equivalence_serial(int m, int closure_bias) {
    HeightEquivalenceScan out;
    auto perms = all_permutations(m);
    scan_heights_range(m, perms, 0, selfmap_count(m) + perms.size(), closure_bias, out);
    return out;
}

HeightEquivalenceScan scan_height_equivalence_parallel(int m, int jobs, int closure_bias) {
    auto perms = all_permutations(m);
    std::uint64_t total = selfmap_count(m) + perms.size();
    return sharded<HeightEquivalenceScan>(
        total, jobs, [&](std::uint64_t lo, std::uint64_t hi, HeightEquivalenceScan& out) {
            scan_heights_range(m, perms, lo, hi, closure_bias, out);
        });
}

HeightEquivalenceScan scan_height_equivalence(int m, int jobs, int closure_bias) {
    return jobs == 1 ? scan_height_equivalence_serial(m, closure_bias)
                     : scan_height_equivalence_parallel(m, jobs, closure_bias);
}

}  // namespace fortdyn::scan

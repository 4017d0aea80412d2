#include "fortdyn/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "fortdyn/constructors.hpp"
#include "fortdyn/indicator.hpp"
#include "fortdyn/scan.hpp"

namespace fortdyn::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seq_str(const std::vector<int>& seq) {
    std::string s = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s + ")";
}

std::string map_str(const std::vector<int>& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
    }
    return s + "]";
}

// Indicator sequences realizable by group actions: all zeros (finite case)
// or 0/1-valued, nondecreasing, starting at 0 and ending at 1.
bool is_group_sequence(const std::vector<int>& seq) {
    if (seq.empty() || seq[0] != 0) return false;
    if (std::all_of(seq.begin(), seq.end(), [](int v) { return v == 0; })) return true;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] != 0 && seq[i] != 1) return false;
        if (i > 0 && seq[i] < seq[i - 1]) return false;
    }
    return seq.back() == 1;
}

std::vector<int> target_group_sequence(int p, int q) {
    std::vector<int> seq(p, 0);
    seq.insert(seq.end(), q, 1);
    return seq;
}

CheckReport finish(CheckReport r, Clock::time_point start) {
    r.elapsed_seconds = seconds_since(start);
    return r;
}

}  // namespace

CheckReport check_remark_height_equivalence(int max_size, int jobs) {
    auto start = Clock::now();
    CheckReport r{"height equivalence: longest chain vs closure count",
                  "max_size=" + std::to_string(max_size), true, std::nullopt, 0.0};
    std::uint64_t systems = 0, subsets = 0;
    for (int m = 1; m <= max_size && r.pass; ++m) {
        auto scan = scan::scan_height_equivalence(m, jobs);
        systems += scan.systems_scanned;
        subsets += scan.subsets_checked;
        if (scan.counterexample) {
            r.pass = false;
            r.counterexample = "m=" + std::to_string(m) + ": " + *scan.counterexample;
        }
    }
    r.params += " systems=" + std::to_string(systems) + " subsets=" + std::to_string(subsets);
    return finish(r, start);
}

CheckReport check_group_sequence_charac(int max_pq, int max_finite, std::uint64_t seed,
                                        int samples_per_size, int jobs) {
    (void)jobs;
    auto start = Clock::now();
    CheckReport r{"group sequence characterization",
                  "max_pq=" + std::to_string(max_pq) + " max_finite=" + std::to_string(max_finite) +
                      " seed=" + std::to_string(seed),
                  true, std::nullopt, 0.0};

    // (a) each (0^p,1^q) witness realizes its target sequence.
    std::set<std::pair<int, std::vector<int>>> by_height;
    for (int p = 1; p <= max_pq - 1 && r.pass; ++p)
        for (int q = 1; p + q <= max_pq && r.pass; ++q) {
            auto seq = indicator_sequence(closure_poset(realize_group_sequence(p, q)));
            if (seq != target_group_sequence(p, q)) {
                r.pass = false;
                r.counterexample = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                   " gave " + seq_str(seq);
                break;
            }
            by_height.insert({p + q - 1, seq});
        }

    // (c) for fixed height n there are exactly n distinct sequences.
    for (int n = 1; n <= max_pq - 1 && r.pass; ++n) {
        int count = 0;
        for (const auto& [h, s] : by_height)
            if (h == n) ++count;
        if (count != n) {
            r.pass = false;
            r.counterexample = "height " + std::to_string(n) + " realized " + std::to_string(count) +
                               " sequences, expected " + std::to_string(n);
        }
    }

    // (b) finite group actions only ever produce all-zero sequences.
    std::mt19937_64 rng(seed);
    for (int m = 1; m <= max_finite && r.pass; ++m) {
        for (const auto& perm : scan::all_permutations(m)) {
            FiniteDynSystem sys{m, {perm}, ActionKind::Group};
            auto seq = indicator_sequence(closure_poset(sys));
            if (std::any_of(seq.begin(), seq.end(), [](int v) { return v != 0; })) {
                r.pass = false;
                r.counterexample = "permutation " + map_str(perm) + " gave " + seq_str(seq);
                break;
            }
        }
        auto perms = scan::all_permutations(m);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        for (int s = 0; s < samples_per_size && r.pass; ++s) {
            FiniteDynSystem sys{m, {perms[pick(rng)], perms[pick(rng)]}, ActionKind::Group};
            auto seq = indicator_sequence(closure_poset(sys));
            if (std::any_of(seq.begin(), seq.end(), [](int v) { return v != 0; })) {
                r.pass = false;
                r.counterexample = "2-generator sample " + map_str(sys.generators[0]) + "," +
                                   map_str(sys.generators[1]) + " gave " + seq_str(seq);
            }
        }
    }
    return finish(r, start);
}

CheckReport check_selfmap_charac(int max_size, int jobs) {
    auto start = Clock::now();
    CheckReport r{"self-map sequence characterization (step law, 2^n count)",
                  "max_size=" + std::to_string(max_size), true, std::nullopt, 0.0};
    for (int m = 1; m <= max_size && r.pass; ++m) {
        auto scan = scan::scan_selfmap_sequences(m, jobs);
        if (scan.step_violation) {
            r.pass = false;
            r.counterexample = "m=" + std::to_string(m) + ": " + *scan.step_violation;
            break;
        }
        int n = m - 1;
        auto expected = enumerate_step_sequences(n);
        std::set<std::vector<int>> expected_set(expected.begin(), expected.end());
        if (scan.full_length != expected_set) {
            r.pass = false;
            r.counterexample = "m=" + std::to_string(m) + ": realized length-" + std::to_string(m) +
                               " set has " + std::to_string(scan.full_length.size()) +
                               " sequences, expected 2^" + std::to_string(n) + " = " +
                               std::to_string(std::size_t{1} << n);
        }
    }
    return finish(r, start);
}

CheckReport check_classification(int max_pq) {
    auto start = Clock::now();
    CheckReport r{"canonical classification of group topologies",
                  "max_pq=" + std::to_string(max_pq), true, std::nullopt, 0.0};

    std::vector<ClosurePoset> corpus;
    std::vector<std::vector<int>> sequences;
    std::vector<std::string> names;
    for (int p = 1; p <= max_pq && r.pass; ++p)
        for (int q = 0; p + q <= max_pq && r.pass; ++q) {
            SymbolicFortSystem sym{p, q};
            auto poset = closure_poset(sym);
            auto cls = classify_group_topology(poset);
            if (!cls || cls->first != p - 1 || cls->second != q + 1) {
                r.pass = false;
                std::ostringstream os;
                os << "symbolic p=" << p << " q=" << q << " classified as ";
                if (cls)
                    os << "(" << cls->first << "," << cls->second << ")";
                else
                    os << "NotClassifiable";
                os << ", expected (" << p - 1 << "," << q + 1 << ")";
                r.counterexample = os.str();
            }
            names.push_back("p=" + std::to_string(p) + ",q=" + std::to_string(q));
            sequences.push_back(indicator_sequence(poset));
            corpus.push_back(std::move(poset));
        }

    // Equal sequences <=> isomorphic posets, both directions over the corpus.
    for (std::size_t i = 0; i < corpus.size() && r.pass; ++i)
        for (std::size_t j = i + 1; j < corpus.size() && r.pass; ++j) {
            bool same_seq = sequences[i] == sequences[j];
            bool iso = poset_isomorphic(corpus[i], corpus[j]).isomorphic;
            if (same_seq != iso) {
                r.pass = false;
                r.counterexample = names[i] + " vs " + names[j] + ": sequences " +
                                   (same_seq ? "equal" : "differ") + " but posets " +
                                   (iso ? "isomorphic" : "not isomorphic");
            }
        }
    return finish(r, start);
}

namespace {

bool reduction_round_trip(const ClosurePoset& poset, std::string& why) {
    auto sys = reduce_to_finite(poset);
    for (int k = 0; k < poset.size(); ++k) {
        if (orbit(sys, k) != poset.downsets[k]) {
            why = "orbit of node " + std::to_string(k) + " differs from its downset";
            return false;
        }
    }
    if (!poset_isomorphic(closure_poset(sys), poset).isomorphic) {
        why = "reduced system's closure poset is not isomorphic to the input";
        return false;
    }
    return true;
}

}  // namespace

CheckReport check_reduction(int max_finite, int max_sym, int jobs) {
    (void)jobs;
    auto start = Clock::now();
    CheckReport r{"finite reduction: orbits realize downsets",
                  "max_finite=" + std::to_string(max_finite) + " max_sym=" + std::to_string(max_sym),
                  true, std::nullopt, 0.0};
    std::string why;
    for (int m = 1; m <= max_finite && r.pass; ++m) {
        for (std::uint64_t idx = 0; idx < scan::selfmap_count(m) && r.pass; ++idx) {
            FiniteDynSystem sys{m, {scan::nth_selfmap(m, idx)}, ActionKind::Monoid};
            if (!reduction_round_trip(closure_poset(sys), why)) {
                r.pass = false;
                r.counterexample = "monoid " + map_str(sys.generators[0]) + ": " + why;
            }
        }
        for (const auto& perm : scan::all_permutations(m)) {
            if (!r.pass) break;
            FiniteDynSystem sys{m, {perm}, ActionKind::Group};
            if (!reduction_round_trip(closure_poset(sys), why)) {
                r.pass = false;
                r.counterexample = "group " + map_str(perm) + ": " + why;
            }
        }
    }
    for (int p = 1; p <= max_sym && r.pass; ++p)
        for (int q = 0; p + q <= max_sym && r.pass; ++q) {
            if (!reduction_round_trip(closure_poset(SymbolicFortSystem{p, q}), why)) {
                r.pass = false;
                r.counterexample =
                    "symbolic p=" + std::to_string(p) + " q=" + std::to_string(q) + ": " + why;
            }
        }
    return finish(r, start);
}

CheckReport check_counterexample_44() {
    auto start = Clock::now();
    CheckReport r{"(0,1,2) separation: semigroup-realizable, group-impossible", "", true,
                  std::nullopt, 0.0};
    const std::vector<int> seq{0, 1, 2};

    ClosurePoset chain = make_poset(
        {"1", "2", "3"},
        {{true, true, true}, {false, true, true}, {false, false, true}});

    if (classify_group_topology(chain)) {
        r.pass = false;
        r.counterexample = "3-chain unexpectedly classified as a group topology";
    }
    if (r.pass && is_group_sequence(seq)) {
        r.pass = false;
        r.counterexample = "(0,1,2) accepted by the group sequence law";
    }
    if (r.pass) {
        auto sys = realize_selfmap_sequence(seq);
        auto poset = closure_poset(sys);
        if (indicator_sequence(poset) != seq) {
            r.pass = false;
            r.counterexample = "self-map witness realized " + seq_str(indicator_sequence(poset));
        } else if (!poset_isomorphic(poset, chain).isomorphic) {
            r.pass = false;
            r.counterexample = "self-map witness topology is not the 3-chain";
        } else {
            auto opens = enumerate_opens(poset);
            std::vector<Mask> expected{0b000, 0b001, 0b011, 0b111};
            if (opens != expected) {
                r.pass = false;
                r.counterexample = "witness opens differ from the 4-element chain topology";
            }
        }
    }
    return finish(r, start);
}

CheckReport check_height_set_A(int max_m, int max_i_countable) {
    auto start = Clock::now();
    CheckReport r{"achievable height sets",
                  "max_m=" + std::to_string(max_m) +
                      " max_i_countable=" + std::to_string(max_i_countable),
                  true, std::nullopt, 0.0};
    for (int m = 1; m <= max_m && r.pass; ++m) {
        std::set<int> achieved;
        for (const auto& perm : scan::all_permutations(m)) {
            FiniteDynSystem sys{m, {perm}, ActionKind::Group};
            achieved.insert(total_height(closure_poset(sys)));
        }
        std::set<int> expected;
        for (int i = 0; i < m; ++i) expected.insert(i);
        if (achieved != expected) {
            r.pass = false;
            r.counterexample = "m=" + std::to_string(m) + " achieved " +
                               std::to_string(achieved.size()) + " heights, expected {0.." +
                               std::to_string(m - 1) + "}";
        }
    }
    for (int i = 1; i <= max_i_countable && r.pass; ++i) {
        auto poset = closure_poset(realize_group_sequence(i, 1));
        if (total_height(poset) != i) {
            r.pass = false;
            r.counterexample = "countable witness with " + std::to_string(i) +
                               " fixed points has height " + std::to_string(total_height(poset));
        }
    }
    // The infinite-height case is witnessed by construction, not computed:
    // the identity action on a countably infinite carrier has the strictly
    // increasing chain of closure families over any finite point sets.
    r.params += " infinite-height=InfiniteByConstruction(identity action, unbounded closure count)";
    return finish(r, start);
}

std::vector<CheckReport> run_suite(const std::string& name, const SuiteOptions& opts) {
    std::vector<CheckReport> out;
    bool all = name == "all";
    if (all || name == "heights") {
        out.push_back(check_remark_height_equivalence(std::min(opts.max_size, 6), opts.jobs));
        out.push_back(check_height_set_A(std::min(opts.max_size + 1, 6), 10));
    }
    if (all || name == "group")
        out.push_back(check_group_sequence_charac(10, std::min(opts.max_size + 1, 6), opts.seed));
    if (all || name == "selfmap")
        out.push_back(check_selfmap_charac(std::min(opts.max_size, 6), opts.jobs));
    if (all || name == "classify") out.push_back(check_classification(8));
    if (all || name == "reduce") out.push_back(check_reduction(std::min(opts.max_size, 5), 6));
    if (all || name == "ce44") out.push_back(check_counterexample_44());
    if (out.empty()) fortdyn::raise(errc::bad_parameters, "unknown suite: " + name);
    return out;
}

std::vector<CoverageRow> coverage_matrix(const std::vector<CheckReport>& reports) {
    auto verdict_of = [&](const std::string& prefix) -> std::string {
        for (const auto& r : reports)
            if (r.name.rfind(prefix, 0) == 0) return r.pass ? "pass" : "FAIL";
        return "not run";
    };
    return {
        {"height via chains = height via closure count", "height equivalence", verdict_of("height equivalence")},
        {"unique proper closed subset under infinite orbits", "classification corpus", verdict_of("canonical classification")},
        {"group sequences are exactly (0^p,1^q); n per height", "group sequence characterization", verdict_of("group sequence")},
        {"finite group actions have all-zero sequences", "group sequence characterization", verdict_of("group sequence")},
        {"group topologies are antichain + star", "canonical classification", verdict_of("canonical classification")},
        {"equal sequences <=> homeomorphic topologies", "canonical classification", verdict_of("canonical classification")},
        {"achievable heights {0..|X|-1} / every finite countable height", "achievable height sets", verdict_of("achievable height sets")},
        {"every finite poset arises from a finite monoid action", "finite reduction", verdict_of("finite reduction")},
        {"self-map sequences are exactly the step sequences (2^n)", "self-map sequence characterization", verdict_of("self-map sequence")},
        {"(0,1,2): semigroup-realizable but group-impossible", "(0,1,2) separation", verdict_of("(0,1,2) separation")},
    };
}

}  // namespace fortdyn::verify

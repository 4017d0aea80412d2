// Command-line surface for the library: analyze system documents, build
// witness systems, enumerate step sequences, compare indicator topologies,
// reduce posets to finite actions and run the verification suites.
//
// Exit codes: 0 success/verified, 1 semantic failure (not isomorphic, check
// failed), 2 input or usage error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fortdyn/constructors.hpp"
#include "fortdyn/io.hpp"
#include "fortdyn/verify.hpp"

namespace {

using namespace fortdyn;

int run_analyze(const std::string& path, const std::string& format, const std::string& dot_path) {
    auto report = analyze(load_system_file(path));
    std::cout << (format == "json" ? render_json(report) : render_text(report));
    if (!dot_path.empty()) write_system_file(dot_path, render_dot(report));
    return 0;
}

int run_realize(const std::vector<int>& group_pq, const std::string& selfmap,
                const std::vector<int>& perm_mi, const std::string& out_path) {
    std::string text;
    SystemDoc doc;
    if (!group_pq.empty()) {
        auto sys = realize_group_sequence(group_pq[0], group_pq[1]);
        text = to_document_text(sys);
        doc = sys;
    } else if (!selfmap.empty()) {
        auto sys = realize_selfmap_sequence(parse_sequence(selfmap));
        text = to_document_text(sys);
        doc = sys;
    } else if (!perm_mi.empty()) {
        auto sys = realize_finite_height_perm(perm_mi[0], perm_mi[1]);
        text = to_document_text(sys);
        doc = sys;
    } else {
        raise(errc::bad_parameters, "one of --group, --selfmap, --perm is required");
    }
    if (!out_path.empty())
        write_system_file(out_path, text);
    else
        std::cout << text;
    std::cout << "indicator sequence: " << sequence_to_string(indicator_sequence(poset_of(doc)))
              << "\n";
    return 0;
}

int run_enumerate(int n, bool count_only) {
    if (count_only) {
        std::cout << (std::uint64_t{1} << n) << "\n";
        return 0;
    }
    for (const auto& seq : enumerate_step_sequences(n))
        std::cout << "(" << sequence_to_string(seq) << ")\n";
    return 0;
}

int run_iso(const std::string& path_a, const std::string& path_b) {
    auto a = poset_of(load_system_file(path_a));
    auto b = poset_of(load_system_file(path_b));
    auto witness = poset_isomorphic(a, b);
    if (!witness.isomorphic) {
        std::cout << "not isomorphic\n";
        return 1;
    }
    std::cout << "isomorphic\n";
    for (int v = 0; v < a.size(); ++v)
        std::cout << "  " << a.labels[v] << " -> " << b.labels[witness.mapping[v]] << "\n";
    return 0;
}

int run_reduce(const std::string& path, const std::string& out_path) {
    auto poset = poset_of(load_system_file(path));
    auto sys = reduce_to_finite(poset);
    std::string text = to_document_text(sys);
    if (!out_path.empty())
        write_system_file(out_path, text);
    else
        std::cout << text;
    if (!poset_isomorphic(closure_poset(sys), poset).isomorphic) {
        std::cerr << "reduction round-trip failed: output poset differs from input\n";
        return 1;
    }
    std::cout << "round-trip verified: output closure poset is isomorphic to the input\n";
    return 0;
}

int run_verify(const std::string& suite, int max_size, std::uint64_t seed, int jobs) {
    verify::SuiteOptions opts;
    opts.max_size = max_size;
    opts.seed = seed;
    opts.jobs = jobs;
    if (const char* env = std::getenv("FORTDYN_SEED")) opts.seed = std::strtoull(env, nullptr, 10);

    auto reports = verify::run_suite(suite, opts);
    bool all_pass = true;
    for (const auto& r : reports) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << "  [" << r.params << "]  "
                  << r.elapsed_seconds << "s\n";
        if (!r.pass) {
            all_pass = false;
            std::cout << "      counterexample: " << *r.counterexample << "\n";
            write_system_file("counterexample.txt", r.name + "\n" + *r.counterexample + "\n");
            std::cerr << "counterexample written to counterexample.txt\n";
        }
    }
    std::cout << "\ncoverage:\n";
    for (const auto& row : verify::coverage_matrix(reports))
        std::cout << "  " << row.verdict << "  " << row.statement << "  (" << row.check << ")\n";
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit closures, heights and indicator topologies of transformation (semi)groups"};
    app.require_subcommand(1);

    std::string path, path_b, format = "text", dot_path, out_path, selfmap, suite = "all";
    std::vector<int> group_pq, perm_mi;
    int n = 0, max_size = 5, jobs = 1;
    std::uint64_t seed = 1;
    bool count_only = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "analyze a system document");
    analyze_cmd->add_option("path", path)->required();
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    analyze_cmd->add_option("--dot", dot_path, "write the Hasse diagram as DOT");

    auto* realize_cmd = app.add_subcommand("realize", "build a witness system");
    realize_cmd->add_option("--group", group_pq, "p q: symbolic witness for (0^p,1^q)")
        ->expected(2);
    realize_cmd->add_option("--selfmap", selfmap, "step sequence, e.g. \"0,1,2\"");
    realize_cmd->add_option("--perm", perm_mi, "m i: permutation of height i on m points")
        ->expected(2);
    realize_cmd->add_option("--out", out_path);

    auto* enum_cmd = app.add_subcommand("enumerate", "list step sequences of length n+1");
    enum_cmd->add_option("n", n)->required();
    enum_cmd->add_flag("--count-only", count_only);

    auto* iso_cmd = app.add_subcommand("iso", "test two documents for homeomorphic topologies");
    iso_cmd->add_option("pathA", path)->required();
    iso_cmd->add_option("pathB", path_b)->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "finite monoid action realizing a poset");
    reduce_cmd->add_option("path", path)->required();
    reduce_cmd->add_option("--out", out_path);

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"all", "heights", "group", "selfmap", "classify", "reduce", "ce44"}));
    verify_cmd->add_option("--max-size", max_size)->check(CLI::Range(1, 6));
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--jobs", jobs)->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze_cmd->parsed()) return run_analyze(path, format, dot_path);
        if (realize_cmd->parsed()) return run_realize(group_pq, selfmap, perm_mi, out_path);
        if (enum_cmd->parsed()) return run_enumerate(n, count_only);
        if (iso_cmd->parsed()) return run_iso(path, path_b);
        if (reduce_cmd->parsed()) return run_reduce(path, out_path);
        if (verify_cmd->parsed()) return run_verify(suite, max_size, seed, jobs);
    } catch (const fortdyn::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

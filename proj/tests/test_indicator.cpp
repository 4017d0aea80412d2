#include <doctest.h>

#include <algorithm>
#include <random>

#include "fortdyn/constructors.hpp"
#include "fortdyn/indicator.hpp"
#include "fortdyn/scan.hpp"

using namespace fortdyn;

namespace {

ClosurePoset chain(int n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i + 1));
        for (int j = i; j < n; ++j) leq[i][j] = true;
    }
    return make_poset(std::move(labels), leq);
}

ClosurePoset antichain(int n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        leq[i][i] = true;
    }
    return make_poset(std::move(labels), leq);
}

ClosurePoset shuffled(const ClosurePoset& p, std::mt19937& rng) {
    int n = p.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::vector<std::string> labels(n);
    for (int u = 0; u < n; ++u) {
        labels[perm[u]] = p.labels[u];
        for (int v = 0; v < n; ++v)
            if (p.leq(u, v)) leq[perm[u]][perm[v]] = true;
    }
    return make_poset(std::move(labels), leq);
}

bool mapping_is_isomorphism(const ClosurePoset& a, const ClosurePoset& b,
                            const std::vector<int>& mapping) {
    int n = a.size();
    std::vector<bool> hit(n, false);
    for (int v : mapping) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (a.leq(u, v) != b.leq(mapping[u], mapping[v])) return false;
    return true;
}

}  // namespace

TEST_CASE("closure_poset shapes") {
    auto anti = closure_poset(FiniteDynSystem{3, {{0, 1, 2}}, ActionKind::Monoid});
    CHECK(indicator_sequence(anti) == std::vector<int>{0, 0, 0});

    auto fort = closure_poset(SymbolicFortSystem{2, 3});
    CHECK(indicator_sequence(fort) == std::vector<int>{0, 0, 1, 1, 1});

    auto three_chain = closure_poset(FiniteDynSystem{3, {{0, 0, 1}}, ActionKind::Monoid});
    CHECK(indicator_sequence(three_chain) == std::vector<int>{0, 1, 2});
    CHECK(total_height(three_chain) == 2);
    CHECK(poset_isomorphic(three_chain, chain(3)).isomorphic);
}

TEST_CASE("poset_isomorphic") {
    auto c = chain(3);
    auto self = poset_isomorphic(c, c);
    REQUIRE(self.isomorphic);
    CHECK(mapping_is_isomorphism(c, c, self.mapping));

    CHECK(!poset_isomorphic(chain(3), antichain(3)).isomorphic);
    CHECK(!poset_isomorphic(make_group_canonical_space(0, 3), chain(3)).isomorphic);
    CHECK(!poset_isomorphic(chain(3), chain(4)).isomorphic);
}

TEST_CASE("poset_isomorphic under relabeling, with verified witnesses") {
    std::mt19937 rng(7);
    std::vector<ClosurePoset> corpus;
    corpus.push_back(chain(5));
    corpus.push_back(antichain(4));
    corpus.push_back(make_group_canonical_space(3, 4));
    corpus.push_back(closure_poset(SymbolicFortSystem{3, 3}));
    for (const auto& seq : enumerate_step_sequences(4))
        corpus.push_back(closure_poset(realize_selfmap_sequence(seq)));

    for (const auto& p : corpus) {
        auto q = shuffled(p, rng);
        auto w = poset_isomorphic(p, q);
        REQUIRE(w.isomorphic);
        CHECK(mapping_is_isomorphism(p, q, w.mapping));
        CHECK(poset_isomorphic(q, p).isomorphic);  // symmetric
    }

    // Isomorphic posets carry equal indicator sequences.
    for (const auto& a : corpus)
        for (const auto& b : corpus)
            if (poset_isomorphic(a, b).isomorphic)
                CHECK(indicator_sequence(a) == indicator_sequence(b));
}

TEST_CASE("make_group_canonical_space") {
    CHECK(make_group_canonical_space(0, 1).size() == 1);
    CHECK(indicator_sequence(make_group_canonical_space(1, 3)) == std::vector<int>{0, 0, 1, 1});
    CHECK(poset_isomorphic(make_group_canonical_space(2, 1), antichain(3)).isomorphic);
    CHECK_THROWS_AS(make_group_canonical_space(1, 0), error);
}

TEST_CASE("classify_group_topology") {
    CHECK(classify_group_topology(closure_poset(SymbolicFortSystem{2, 3})) ==
          std::pair<int, int>{1, 4});
    CHECK(!classify_group_topology(chain(3)).has_value());
    CHECK(classify_group_topology(make_group_canonical_space(0, 1)) == std::pair<int, int>{0, 1});

    for (int alpha = 0; alpha <= 5; ++alpha)
        for (int beta = 1; beta <= 5; ++beta)
            CHECK(classify_group_topology(make_group_canonical_space(alpha, beta)) ==
                  std::pair<int, int>{alpha, beta});
}

TEST_CASE("enumerate_opens") {
    CHECK(enumerate_opens(make_group_canonical_space(0, 1)) == std::vector<Mask>{0, 1});
    CHECK(enumerate_opens(chain(3)) == std::vector<Mask>{0b000, 0b001, 0b011, 0b111});

    // Star with bottom 0 under atoms 1 and 2: the void plus everything containing 0.
    auto star = make_group_canonical_space(0, 3);
    CHECK(enumerate_opens(star) == std::vector<Mask>{0b000, 0b001, 0b011, 0b101, 0b111});

    std::vector<std::vector<bool>> leq(21, std::vector<bool>(21, false));
    for (int i = 0; i < 21; ++i) leq[i][i] = true;
    auto big = make_poset(std::vector<std::string>(21, "x"), leq);
    CHECK_THROWS_AS(enumerate_opens(big), error);
}

TEST_CASE("node heights equal longest chains on orbit-closure posets") {
    auto longest_chain_below = [](const ClosurePoset& p, int v) {
        std::vector<int> depth(p.size(), 0);
        // Nodes of smaller downsets first gives a topological order.
        std::vector<int> order(p.size());
        for (int i = 0; i < p.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(p.downsets[a]) < std::popcount(p.downsets[b]);
        });
        for (int u : order)
            for (int w : order)
                if (w != u && p.leq(w, u)) depth[u] = std::max(depth[u], depth[w] + 1);
        return depth[v];
    };

    for (int m = 1; m <= 4; ++m)
        for (std::uint64_t idx = 0; idx < scan::selfmap_count(m); ++idx) {
            auto p = closure_poset(FiniteDynSystem{m, {scan::nth_selfmap(m, idx)}, ActionKind::Monoid});
            for (int v = 0; v < p.size(); ++v) CHECK(p.node_height(v) == longest_chain_below(p, v));
        }
}

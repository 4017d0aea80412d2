#include "fortdyn/indicator.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_set>

namespace fortdyn {

int ClosurePoset::node_height(int v) const {
    return std::popcount(downsets[v]) - 1;
}

ClosurePoset make_poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq) {
    int n = static_cast<int>(labels.size());
    if (n < 1) raise(errc::empty_poset, "poset needs at least one node");
    if (n > kMaxPosetNodes) raise(errc::too_many_nodes, "poset is capped at 64 nodes");
    ClosurePoset p;
    p.labels = std::move(labels);
    p.downsets.assign(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (leq[u][v]) p.downsets[v] |= Mask{1} << u;
    return p;
}

namespace {

std::string mask_label(Mask m) {
    std::string s = "{";
    bool first = true;
    for (Mask rest = m; rest;) {
        int p = std::countr_zero(rest);
        rest &= rest - 1;
        if (!first) s += ",";
        s += std::to_string(p);
        first = false;
    }
    return s + "}";
}

}  // namespace

ClosurePoset closure_poset(const FiniteDynSystem& sys) {
    auto closures = all_orbit_closures(sys);
    int n = static_cast<int>(closures.size());
    if (n > kMaxPosetNodes) raise(errc::too_many_nodes, "too many distinct closures");
    ClosurePoset p;
    p.downsets.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        p.labels.push_back(mask_label(closures[v]));
        for (int u = 0; u < n; ++u)
            if ((closures[u] & closures[v]) == closures[u]) p.downsets[v] |= Mask{1} << u;
    }
    return p;
}

ClosurePoset closure_poset(const SymbolicFortSystem& sys) {
    auto closures = symbolic_all_closures(sys);
    int n = static_cast<int>(closures.size());
    if (n > kMaxPosetNodes) raise(errc::too_many_nodes, "too many distinct closures");
    ClosurePoset p;
    p.downsets.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        p.labels.push_back(closure_label(closures[v]));
        for (int u = 0; u < n; ++u)
            if (closure_contains(closures[u], closures[v])) p.downsets[v] |= Mask{1} << u;
    }
    return p;
}

std::vector<int> indicator_sequence(const ClosurePoset& p) {
    std::vector<int> seq;
    seq.reserve(p.size());
    for (int v = 0; v < p.size(); ++v) seq.push_back(p.node_height(v));
    std::sort(seq.begin(), seq.end());
    return seq;
}

int total_height(const ClosurePoset& p) {
    // Height of the whole system: number of distinct orbit closures minus one.
    return p.size() - 1;
}

namespace {

std::vector<Mask> upsets(const ClosurePoset& p) {
    std::vector<Mask> up(p.size(), 0);
    for (int v = 0; v < p.size(); ++v)
        for (int u = 0; u < p.size(); ++u)
            if (p.leq(u, v)) up[u] |= Mask{1} << v;
    return up;
}

// Iterated neighbourhood-signature refinement. Stable partition labels;
// isomorphic nodes always end up with equal labels.
std::vector<int> refine_signatures(const ClosurePoset& p) {
    int n = p.size();
    auto up = upsets(p);
    std::vector<int> sig(n);
    for (int v = 0; v < n; ++v) sig[v] = std::popcount(p.downsets[v]) * (n + 1) + std::popcount(up[v]);

    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> keyed(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> key;
            key.push_back(sig[v]);
            std::vector<int> below, above;
            for (int u = 0; u < n; ++u) {
                if (u == v) continue;
                if (p.leq(u, v)) below.push_back(sig[u]);
                if (p.leq(v, u)) above.push_back(sig[u]);
            }
            std::sort(below.begin(), below.end());
            std::sort(above.begin(), above.end());
            key.push_back(-1);
            key.insert(key.end(), below.begin(), below.end());
            key.push_back(-2);
            key.insert(key.end(), above.begin(), above.end());
            keyed[v] = {std::move(key), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = keyed;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int label = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++label;
            next[sorted[i].second] = label;
        }
        if (next == sig) break;
        sig = std::move(next);
    }
    return sig;
}

bool extend_mapping(const ClosurePoset& a, const ClosurePoset& b,
                    const std::vector<std::vector<int>>& candidates, std::vector<int>& mapping,
                    std::vector<bool>& used, int v) {
    int n = a.size();
    if (v == n) return true;
    for (int w : candidates[v]) {
        if (used[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            if (a.leq(u, v) != b.leq(mapping[u], w)) ok = false;
            if (ok && a.leq(v, u) != b.leq(w, mapping[u])) ok = false;
        }
        if (!ok) continue;
        mapping[v] = w;
        used[w] = true;
        if (extend_mapping(a, b, candidates, mapping, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

IsoWitness poset_isomorphic(const ClosurePoset& a, const ClosurePoset& b) {
    if (a.size() != b.size()) return {};
    int n = a.size();
    auto sa = refine_signatures(a);
    auto sb = refine_signatures(b);
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return {};
    }
    std::vector<std::vector<int>> candidates(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (sa[v] == sb[w]) candidates[v].push_back(w);

    std::vector<int> mapping(n, -1);
    std::vector<bool> used(n, false);
    if (!extend_mapping(a, b, candidates, mapping, used, 0)) return {};
    return {true, std::move(mapping)};
}

ClosurePoset make_group_canonical_space(int alpha, int beta) {
    if (beta < 1) raise(errc::bad_cardinal, "beta must be >= 1");
    if (alpha < 0) raise(errc::bad_cardinal, "alpha must be >= 0");
    int n = alpha + beta;
    if (n > kMaxPosetNodes) raise(errc::too_many_nodes, "canonical space exceeds 64 nodes");
    ClosurePoset p;
    p.downsets.assign(n, 0);
    for (int v = 0; v < alpha; ++v) {
        p.labels.push_back("y" + std::to_string(v));
        p.downsets[v] = Mask{1} << v;
    }
    int bottom = alpha;
    for (int k = 0; k < beta; ++k) {
        int v = alpha + k;
        p.labels.push_back("z" + std::to_string(k));
        p.downsets[v] = (Mask{1} << v) | (Mask{1} << bottom);
    }
    return p;
}

std::optional<std::pair<int, int>> classify_group_topology(const ClosurePoset& p) {
    int n = p.size();
    std::vector<int> non_minimal;
    int minimal = 0;
    for (int v = 0; v < n; ++v) {
        if (p.node_height(v) == 0)
            ++minimal;
        else
            non_minimal.push_back(v);
    }
    if (non_minimal.empty()) return std::make_pair(n - 1, 1);  // antichain: Y_{n-1} + Z_1

    // Every non-minimal node must sit directly over one shared bottom and
    // nothing else.
    int bottom = -1;
    for (int v : non_minimal) {
        Mask strict = p.downsets[v] & ~(Mask{1} << v);
        if (std::popcount(strict) != 1) return std::nullopt;
        int u = std::countr_zero(strict);
        if (bottom == -1) bottom = u;
        if (u != bottom) return std::nullopt;
    }
    if (p.node_height(bottom) != 0) return std::nullopt;
    int alpha = minimal - 1;
    int beta = static_cast<int>(non_minimal.size()) + 1;
    return std::make_pair(alpha, beta);
}

std::vector<Mask> enumerate_opens(const ClosurePoset& p) {
    if (p.size() > 20) raise(errc::too_many_nodes, "open-set enumeration is guarded at 20 nodes");
    int n = p.size();
    std::vector<Mask> opens;
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
        bool down_closed = true;
        for (Mask rest = m; rest && down_closed;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((p.downsets[v] & m) != p.downsets[v]) down_closed = false;
        }
        if (down_closed) opens.push_back(m);
    }
    // Sanity: a topology contains the void and full sets and is closed under
    // union and intersection. Checked when the family is small enough.
    if (opens.size() <= 2048) {
        std::unordered_set<Mask> set(opens.begin(), opens.end());
        if (!set.count(0) || !set.count(full_mask(n)))
            throw std::logic_error("open family misses the trivial opens");
        for (Mask a : opens)
            for (Mask b : opens)
                if (!set.count(a | b) || !set.count(a & b))
                    throw std::logic_error("open family not closed under union/intersection");
    }
    return opens;
}

std::vector<std::pair<int, int>> hasse_edges(const ClosurePoset& p) {
    int n = p.size();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v || !p.leq(u, v)) continue;
            bool cover = true;
            for (int k = 0; k < n && cover; ++k)
                if (k != u && k != v && p.leq(u, k) && p.leq(k, v)) cover = false;
            if (cover) edges.emplace_back(u, v);
        }
    return edges;
}

}  // namespace fortdyn

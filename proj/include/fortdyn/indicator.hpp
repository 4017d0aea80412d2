#pragma once

// The indicator topology as a finite poset of orbit closures: heights,
// indicator sequences, order isomorphism (= homeomorphism of these finite
// spaces) and the canonical classification of group indicator topologies.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fortdyn/core_action.hpp"
#include "fortdyn/symbolic_fort.hpp"

namespace fortdyn {

// Poset of distinct orbit closures ordered by inclusion. downsets[v] has
// bit u set iff u <= v (reflexive), so heights fall out of popcounts and
// the opens of the topology are exactly the down-closed node sets.
struct ClosurePoset {
    std::vector<std::string> labels;
    std::vector<Mask> downsets;

    int size() const { return static_cast<int>(labels.size()); }
    bool leq(int a, int b) const { return downsets[b] >> a & 1; }
    int node_height(int v) const;
};

// Max node count (Mask rows).
inline constexpr int kMaxPosetNodes = 64;

// Build a poset from explicit labels and the reflexive containment matrix.
ClosurePoset make_poset(std::vector<std::string> labels, const std::vector<std::vector<bool>>& leq);

ClosurePoset closure_poset(const FiniteDynSystem& sys);
ClosurePoset closure_poset(const SymbolicFortSystem& sys);

// Sorted multiset of node heights; its length minus one is the total height.
std::vector<int> indicator_sequence(const ClosurePoset& p);

int total_height(const ClosurePoset& p);

struct IsoWitness {
    bool isomorphic = false;
    std::vector<int> mapping;  // node i of a -> mapping[i] of b, when isomorphic
};

// Order isomorphism via (downset, upset) signature refinement followed by
// backtracking. Returns a witness bijection on success.
IsoWitness poset_isomorphic(const ClosurePoset& a, const ClosurePoset& b);

// Disjoint union of an alpha-node antichain and a beta-node star whose
// bottom lies below the other beta-1 pairwise-incomparable nodes.
ClosurePoset make_group_canonical_space(int alpha, int beta);

// (alpha, beta) iff p is isomorphic to make_group_canonical_space(alpha, beta);
// nullopt otherwise.
std::optional<std::pair<int, int>> classify_group_topology(const ClosurePoset& p);

// All down-closed node sets, i.e. the opens of the represented topology.
// Guarded at 20 nodes.
std::vector<Mask> enumerate_opens(const ClosurePoset& p);

// Cover edges (transitive reduction) as (lower, upper) pairs.
std::vector<std::pair<int, int>> hasse_edges(const ClosurePoset& p);

}  // namespace fortdyn

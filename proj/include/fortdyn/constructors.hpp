#pragma once

// The witness builders: every realizable indicator sequence gets an
// explicit system realizing it, and every finite closure poset reduces to a
// finite monoid action with the same indicator topology.

#include <vector>

#include "fortdyn/core_action.hpp"
#include "fortdyn/indicator.hpp"
#include "fortdyn/symbolic_fort.hpp"

namespace fortdyn {

// Group witness for the sequence (0^p, 1^q): p fixed points (index 0 = b)
// and q shift lines. Total height p+q-1.
SymbolicFortSystem realize_group_sequence(int p, int q);

// Group witness of height i on m points: one permutation fixing the first i
// points and cycling the rest. Indicator sequence is i+1 zeros.
FiniteDynSystem realize_finite_height_perm(int m, int i);

// A step sequence starts at 0 and moves up by 0 or 1 each step; these are
// exactly the indicator sequences of single-self-map systems.
bool valid_step_sequence(const std::vector<int>& entries);

// Monoid witness on n+1 points whose indicator sequence is the given step
// sequence: x_i is fixed when p_i = 0, otherwise sent to x_t with
// t = max{j : p_j < p_i}.
FiniteDynSystem realize_selfmap_sequence(const std::vector<int>& seq);

// All valid step sequences of length n+1 in lexicographic order; there are
// exactly 2^n of them. Guarded at n <= 20.
std::vector<std::vector<int>> enumerate_step_sequences(int n);

// Finite monoid action on the poset's node set whose orbit of each node k
// is exactly the downset of k, so its closure poset is isomorphic to p.
// Generators are the identity plus one elementary map per strict pair
// w < k (send k to w, fix the rest).
FiniteDynSystem reduce_to_finite(const ClosurePoset& p);

}  // namespace fortdyn

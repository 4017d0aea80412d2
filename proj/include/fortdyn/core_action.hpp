#pragma once

// Finite transformation (semi)group engine: orbits, orbit closures, the
// invariant-subset lattice and two independent height computations.
//
// Carriers are index sets {0,...,size-1}; point sets are bitmasks, so the
// carrier is capped at 64 points. The acting structure is the monoid
// generated by the listed self-maps plus the identity; for Group kind the
// generators must be bijections and their inverses act as well.

#include <cstdint>
#include <vector>

#include "fortdyn/errors.hpp"

namespace fortdyn {

using Mask = std::uint64_t;

enum class ActionKind { Group, Monoid };

struct FiniteDynSystem {
    int size = 0;
    std::vector<std::vector<int>> generators;
    ActionKind kind = ActionKind::Monoid;
};

// Maximum carrier size for the 2^size invariant-subset oracle.
inline constexpr int kOracleSizeLimit = 16;

void validate_system(const FiniteDynSystem& sys);

// Points reachable from x under the generated monoid (with inverse steps
// for Group kind). Always contains x. On a finite discrete carrier the
// orbit equals the orbit closure.
Mask orbit(const FiniteDynSystem& sys, int x);

// Distinct orbit closures, sorted by size then lexicographically by
// membership. Deterministic and duplicate-free.
std::vector<Mask> all_orbit_closures(const FiniteDynSystem& sys);

// True iff every generator maps the set into itself.
bool is_invariant(const FiniteDynSystem& sys, Mask subset);

// All nonempty invariant subsets, ascending as masks. Guarded at
// size <= kOracleSizeLimit.
std::vector<Mask> invariant_subsets(const FiniteDynSystem& sys);

// Height of invariant w as the length of the longest strict chain
// Z_0 c ... c Z_n = w of nonempty invariant subsets (returns n).
// Enumerative oracle, same size guard as invariant_subsets.
int height_via_chains(const FiniteDynSystem& sys, Mask w);

// Height of invariant w as |{orbit(y) : y in w}| - 1. No subset
// enumeration, so it scales past the oracle guard.
int height_via_closures(const FiniteDynSystem& sys, Mask w);

// Ordering used for deterministic closure lists: size first, then the
// smaller smallest differing element.
bool mask_less(Mask a, Mask b);

Mask full_mask(int size);

}  // namespace fortdyn

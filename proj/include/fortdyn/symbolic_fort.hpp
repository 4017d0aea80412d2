#pragma once

// Symbolic model of the infinite one-point-compactified (Fort) systems used
// by the witness constructions: a particular point b, finitely many extra
// fixed points, and finitely many disjoint bi-infinite lines shifted by the
// single generator. Everything is exact; no line is ever materialized.

#include <cstdint>
#include <string>
#include <vector>

#include "fortdyn/errors.hpp"

namespace fortdyn {

enum class Cardinality { Finite, CountablyInfinite };

struct SymbolicFortSystem {
    int fixed_count = 1;  // p >= 1; fixed point 0 is the particular point b
    int line_count = 0;   // q >= 0 disjoint Z-lines under the shift
};

void validate_symbolic(const SymbolicFortSystem& sys);

inline Cardinality cardinality(const SymbolicFortSystem& sys) {
    return sys.line_count >= 1 ? Cardinality::CountablyInfinite : Cardinality::Finite;
}

struct PointRef {
    enum class Kind { B, Fixed, LinePoint };
    Kind kind = Kind::B;
    int index = 0;            // fixed-point index (1..p-1) or line index (0..q-1)
    std::int64_t offset = 0;  // position on the line; irrelevant for B/Fixed
};

// Orbit closures come in exactly three shapes: {b}, a non-b fixed singleton,
// or a whole line with b adjoined.
struct ClosureSet {
    enum class Kind { ParticularOnly, FixedSingleton, LineWithB };
    Kind kind = Kind::ParticularOnly;
    int index = 0;

    friend bool operator==(const ClosureSet&, const ClosureSet&) = default;
};

std::string closure_label(const ClosureSet& c);

// Closure of the orbit of the referenced point. A line point's shift orbit
// is the whole line, whose closure adjoins b.
ClosureSet symbolic_orbit_closure(const SymbolicFortSystem& sys, const PointRef& ref);

// All p + q distinct closures: {b}, the fixed singletons, then the lines.
std::vector<ClosureSet> symbolic_all_closures(const SymbolicFortSystem& sys);

// True iff a is a subset of b under the symbolic semantics:
// {b} sits inside every line closure, everything else only inside itself.
bool closure_contains(const ClosureSet& a, const ClosureSet& b);

}  // namespace fortdyn

#include "fortdyn/core_action.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace fortdyn {

Mask full_mask(int size) {
    return size >= 64 ? ~Mask{0} : (Mask{1} << size) - 1;
}

bool mask_less(Mask a, Mask b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    // Same size: the set owning the smallest differing element comes first.
    Mask diff = a ^ b;
    return a & (diff & -diff);
}

void validate_system(const FiniteDynSystem& sys) {
    if (sys.size < 1 || sys.size > 64)
        raise(errc::carrier_too_large, "carrier size must be in [1, 64], got " + std::to_string(sys.size));
    if (sys.generators.empty())
        raise(errc::bad_parameters, "system needs at least one generator");
    for (const auto& g : sys.generators) {
        if (static_cast<int>(g.size()) != sys.size)
            raise(errc::out_of_range_entry,
                  "generator has " + std::to_string(g.size()) + " entries, carrier has " +
                      std::to_string(sys.size));
        Mask image = 0;
        for (int v : g) {
            if (v < 0 || v >= sys.size)
                raise(errc::out_of_range_entry, "generator entry " + std::to_string(v) + " outside carrier");
            image |= Mask{1} << v;
        }
        if (sys.kind == ActionKind::Group && image != full_mask(sys.size))
            raise(errc::non_bijective_group_generator, "group generator is not a bijection");
    }
}

namespace {

// Generators plus, for Group kind, their inverses.
std::vector<std::vector<int>> step_maps(const FiniteDynSystem& sys) {
    std::vector<std::vector<int>> maps = sys.generators;
    if (sys.kind == ActionKind::Group) {
        for (const auto& g : sys.generators) {
            std::vector<int> inv(sys.size);
            for (int i = 0; i < sys.size; ++i) inv[g[i]] = i;
            maps.push_back(std::move(inv));
        }
    }
    return maps;
}

Mask orbit_with(const std::vector<std::vector<int>>& maps, int size, int x) {
    Mask seen = Mask{1} << x;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f;) {
            int p = std::countr_zero(f);
            f &= f - 1;
            for (const auto& m : maps) next |= Mask{1} << m[p];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    (void)size;
    return seen;
}

}  // namespace

Mask orbit(const FiniteDynSystem& sys, int x) {
    validate_system(sys);
    if (x < 0 || x >= sys.size)
        raise(errc::out_of_range_entry, "point " + std::to_string(x) + " outside carrier");
    return orbit_with(step_maps(sys), sys.size, x);
}

std::vector<Mask> all_orbit_closures(const FiniteDynSystem& sys) {
    validate_system(sys);
    auto maps = step_maps(sys);
    std::vector<Mask> out;
    out.reserve(sys.size);
    for (int x = 0; x < sys.size; ++x) out.push_back(orbit_with(maps, sys.size, x));
    std::sort(out.begin(), out.end(), mask_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_invariant(const FiniteDynSystem& sys, Mask subset) {
    if (!subset) return false;
    for (const auto& g : sys.generators) {
        for (Mask m = subset; m;) {
            int p = std::countr_zero(m);
            m &= m - 1;
            if (!(subset >> g[p] & 1)) return false;
        }
    }
    return true;
}

std::vector<Mask> invariant_subsets(const FiniteDynSystem& sys) {
    validate_system(sys);
    if (sys.size > kOracleSizeLimit)
        raise(errc::carrier_too_large_for_oracle,
              "invariant-subset enumeration is guarded at size <= " + std::to_string(kOracleSizeLimit));
    std::vector<Mask> out;
    Mask full = full_mask(sys.size);
    for (Mask s = 1; s <= full; ++s)
        if (is_invariant(sys, s)) out.push_back(s);
    return out;
}

int height_via_chains(const FiniteDynSystem& sys, Mask w) {
    validate_system(sys);
    if (sys.size > kOracleSizeLimit)
        raise(errc::carrier_too_large_for_oracle,
              "chain oracle is guarded at size <= " + std::to_string(kOracleSizeLimit));
    if (!is_invariant(sys, w)) raise(errc::not_invariant, "subset is not invariant");

    // Submasks of w in descending order, then processed ascending; a proper
    // subset is always numerically smaller, so each value is final when read.
    std::vector<Mask> subs;
    for (Mask s = w;; s = (s - 1) & w) {
        if (s) subs.push_back(s);
        if (!s) break;
    }
    std::vector<int> longest(w + 1, -1);
    int result = 0;
    for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
        Mask s = *it;
        if (!is_invariant(sys, s)) continue;
        int best = 0;
        for (Mask t = (s - 1) & s; t; t = (t - 1) & s)
            if (longest[t] >= 0) best = std::max(best, longest[t] + 1);
        longest[s] = best;
        if (s == w) result = best;
    }
    return result;
}

int height_via_closures(const FiniteDynSystem& sys, Mask w) {
    validate_system(sys);
    if (!is_invariant(sys, w)) raise(errc::not_invariant, "subset is not invariant");
    auto maps = step_maps(sys);
    std::vector<Mask> closures;
    for (Mask m = w; m;) {
        int p = std::countr_zero(m);
        m &= m - 1;
        closures.push_back(orbit_with(maps, sys.size, p));
    }
    std::sort(closures.begin(), closures.end());
    closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
    return static_cast<int>(closures.size()) - 1;
}

}  // namespace fortdyn

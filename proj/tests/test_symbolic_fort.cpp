#include <doctest.h>

#include <algorithm>

#include "fortdyn/indicator.hpp"
#include "fortdyn/symbolic_fort.hpp"

using namespace fortdyn;

TEST_CASE("symbolic_orbit_closure") {
    SymbolicFortSystem sys{3, 2};
    CHECK(symbolic_orbit_closure(sys, {PointRef::Kind::B}) ==
          ClosureSet{ClosureSet::Kind::ParticularOnly, 0});
    CHECK(symbolic_orbit_closure(sys, {PointRef::Kind::Fixed, 2}) ==
          ClosureSet{ClosureSet::Kind::FixedSingleton, 2});
    // Offset-invariant: any point of a line has the same closure.
    for (std::int64_t off : {-1000000000LL, 0LL, 5LL})
        CHECK(symbolic_orbit_closure(sys, {PointRef::Kind::LinePoint, 0, off}) ==
              ClosureSet{ClosureSet::Kind::LineWithB, 0});

    CHECK_THROWS_AS(symbolic_orbit_closure(sys, {PointRef::Kind::Fixed, 3}), error);
    CHECK_THROWS_AS(symbolic_orbit_closure(sys, {PointRef::Kind::Fixed, 0}), error);
    CHECK_THROWS_AS(symbolic_orbit_closure(sys, {PointRef::Kind::LinePoint, 2, 0}), error);
    CHECK_THROWS_AS(validate_symbolic(SymbolicFortSystem{0, 1}), error);
}

TEST_CASE("symbolic_all_closures") {
    auto small = symbolic_all_closures(SymbolicFortSystem{1, 1});
    REQUIRE(small.size() == 2);
    CHECK(small[0].kind == ClosureSet::Kind::ParticularOnly);
    CHECK(small[1].kind == ClosureSet::Kind::LineWithB);

    CHECK(symbolic_all_closures(SymbolicFortSystem{2, 3}).size() == 5);

    auto finite = symbolic_all_closures(SymbolicFortSystem{3, 0});
    REQUIRE(finite.size() == 3);
    CHECK(std::all_of(finite.begin() + 1, finite.end(), [](const ClosureSet& c) {
        return c.kind == ClosureSet::Kind::FixedSingleton;
    }));

    CHECK(cardinality(SymbolicFortSystem{3, 0}) == Cardinality::Finite);
    CHECK(cardinality(SymbolicFortSystem{1, 1}) == Cardinality::CountablyInfinite);
}

TEST_CASE("closure_contains") {
    ClosureSet b{ClosureSet::Kind::ParticularOnly, 0};
    ClosureSet fix1{ClosureSet::Kind::FixedSingleton, 1};
    ClosureSet line0{ClosureSet::Kind::LineWithB, 0};
    ClosureSet line1{ClosureSet::Kind::LineWithB, 1};

    CHECK(closure_contains(b, line0));
    CHECK(!closure_contains(line0, b));
    CHECK(!closure_contains(fix1, line0));
    CHECK(!closure_contains(line0, line1));
    CHECK(closure_contains(fix1, fix1));
}

TEST_CASE("every symbolic closure has height 0 or 1") {
    for (int p = 1; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            auto poset = closure_poset(SymbolicFortSystem{p, q});
            for (int v = 0; v < poset.size(); ++v) {
                int h = poset.node_height(v);
                CHECK((h == 0 || h == 1));
            }
            if (q >= 1) CHECK(total_height(poset) >= 1);
            CHECK(total_height(poset) == p + q - 1);
        }
}

// Truncated concretization: materialize each line as the window [-N, N]
// with the right edge absorbed into b, run the finite engine, and compare
// closure counts and inclusions of window-interior representatives with the
// symbolic poset.
TEST_CASE("finite window concretization matches the symbolic closures") {
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int N = 1; N <= 3; ++N) {
                int window = 2 * N + 1;
                int size = p + q * window;
                std::vector<int> g(size);
                for (int j = 0; j < p; ++j) g[j] = j;  // b and the fixed points
                for (int line = 0; line < q; ++line) {
                    int base = p + line * window;
                    for (int k = 0; k < window; ++k)
                        g[base + k] = k + 1 < window ? base + k + 1 : 0;  // edge falls into b
                }
                FiniteDynSystem sys{size, {g}, ActionKind::Monoid};

                // Representatives: b, each fixed point, each line at offset 0.
                std::vector<Mask> reps;
                reps.push_back(orbit(sys, 0));
                for (int j = 1; j < p; ++j) reps.push_back(orbit(sys, j));
                for (int line = 0; line < q; ++line) reps.push_back(orbit(sys, p + line * window + N));

                auto symbolic = symbolic_all_closures(SymbolicFortSystem{p, q});
                REQUIRE(reps.size() == symbolic.size());
                for (std::size_t i = 0; i < reps.size(); ++i)
                    for (std::size_t j = 0; j < reps.size(); ++j) {
                        bool finite_incl = (reps[i] & reps[j]) == reps[i];
                        CHECK(finite_incl == closure_contains(symbolic[i], symbolic[j]));
                    }
            }
}

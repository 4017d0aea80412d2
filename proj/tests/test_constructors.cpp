#include <doctest.h>

#include <numeric>

#include "fortdyn/constructors.hpp"
#include "fortdyn/scan.hpp"

using namespace fortdyn;

TEST_CASE("valid_step_sequence") {
    CHECK(valid_step_sequence({0, 1, 2}));
    CHECK(valid_step_sequence({0, 1, 1, 2}));
    CHECK(valid_step_sequence({0}));
    CHECK(!valid_step_sequence({0, 2}));
    CHECK(!valid_step_sequence({1, 1}));
    CHECK(!valid_step_sequence({0, 1, 0}));
    CHECK(!valid_step_sequence({}));
}

TEST_CASE("enumerate_step_sequences") {
    CHECK(enumerate_step_sequences(0) == std::vector<std::vector<int>>{{0}});
    CHECK(enumerate_step_sequences(2) ==
          std::vector<std::vector<int>>{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, 2}});
    CHECK(enumerate_step_sequences(3).size() == 8);

    for (int n = 0; n <= 15; ++n) {
        auto all = enumerate_step_sequences(n);
        CHECK(all.size() == std::size_t{1} << n);
        for (const auto& s : all) CHECK(valid_step_sequence(s));
        CHECK(std::is_sorted(all.begin(), all.end()));
    }
    CHECK_THROWS_AS(enumerate_step_sequences(21), error);
}

TEST_CASE("realize_selfmap_sequence") {
    CHECK(realize_selfmap_sequence({0, 1, 2}).generators[0] == std::vector<int>{0, 0, 1});
    CHECK(realize_selfmap_sequence({0, 0, 0, 0}).generators[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(realize_selfmap_sequence({0, 0, 1, 1}).generators[0] == std::vector<int>{0, 1, 1, 1});
    CHECK_THROWS_AS(realize_selfmap_sequence({0, 2}), error);
}

TEST_CASE("realize_group_sequence") {
    auto sys = realize_group_sequence(2, 3);
    CHECK(indicator_sequence(closure_poset(sys)) == std::vector<int>{0, 0, 1, 1, 1});
    CHECK(indicator_sequence(closure_poset(realize_group_sequence(1, 1))) ==
          std::vector<int>{0, 1});
    CHECK(total_height(closure_poset(realize_group_sequence(5, 1))) == 5);
    CHECK_THROWS_AS(realize_group_sequence(0, 1), error);
    CHECK_THROWS_AS(realize_group_sequence(1, 0), error);
}

TEST_CASE("realize_finite_height_perm") {
    auto cyc = realize_finite_height_perm(4, 0);
    CHECK(cyc.generators[0] == std::vector<int>{1, 2, 3, 0});
    CHECK(total_height(closure_poset(cyc)) == 0);

    CHECK(total_height(closure_poset(realize_finite_height_perm(4, 3))) == 3);
    CHECK(indicator_sequence(closure_poset(realize_finite_height_perm(5, 2))) ==
          std::vector<int>{0, 0, 0});
    CHECK_THROWS_AS(realize_finite_height_perm(4, 4), error);
    CHECK_THROWS_AS(realize_finite_height_perm(4, -1), error);

    for (int m = 1; m <= 6; ++m)
        for (int i = 0; i < m; ++i) {
            auto poset = closure_poset(realize_finite_height_perm(m, i));
            CHECK(total_height(poset) == i);
            CHECK(indicator_sequence(poset) == std::vector<int>(i + 1, 0));
        }
}

TEST_CASE("reduce_to_finite basics") {
    auto one = reduce_to_finite(closure_poset(FiniteDynSystem{1, {{0}}, ActionKind::Monoid}));
    CHECK(one.size == 1);

    auto chain_sys = realize_selfmap_sequence({0, 1, 2});
    auto chain_poset = closure_poset(chain_sys);
    auto reduced = reduce_to_finite(chain_poset);
    CHECK(reduced.size == 3);
    CHECK(orbit(reduced, 2) == full_mask(3));
    CHECK(poset_isomorphic(closure_poset(reduced), chain_poset).isomorphic);

    // Antichain has no strict pairs: identity generator only.
    auto anti = reduce_to_finite(closure_poset(FiniteDynSystem{3, {{0, 1, 2}}, ActionKind::Monoid}));
    CHECK(anti.generators.size() == 1);
    CHECK(indicator_sequence(closure_poset(anti)) == std::vector<int>{0, 0, 0});
}

TEST_CASE("round-trip A: group sequences") {
    for (int p = 1; p <= 9; ++p)
        for (int q = 1; p + q <= 10; ++q) {
            std::vector<int> want(p, 0);
            want.insert(want.end(), q, 1);
            CHECK(indicator_sequence(closure_poset(realize_group_sequence(p, q))) == want);
        }
}

TEST_CASE("round-trip B: self-map sequences") {
    for (int n = 0; n <= 7; ++n)
        for (const auto& seq : enumerate_step_sequences(n))
            CHECK(indicator_sequence(closure_poset(realize_selfmap_sequence(seq))) == seq);
}

TEST_CASE("round-trip C: reduction preserves the poset, orbits are downsets") {
    auto check_roundtrip = [](const ClosurePoset& p) {
        auto sys = reduce_to_finite(p);
        for (int k = 0; k < p.size(); ++k) CHECK(orbit(sys, k) == p.downsets[k]);
        CHECK(poset_isomorphic(closure_poset(sys), p).isomorphic);
    };

    for (int m = 1; m <= 4; ++m)
        for (std::uint64_t idx = 0; idx < scan::selfmap_count(m); ++idx)
            check_roundtrip(closure_poset(FiniteDynSystem{m, {scan::nth_selfmap(m, idx)}, ActionKind::Monoid}));
    for (int m = 1; m <= 5; ++m)
        for (const auto& perm : scan::all_permutations(m))
            check_roundtrip(closure_poset(FiniteDynSystem{m, {perm}, ActionKind::Group}));
    for (int p = 1; p <= 8; ++p)
        for (int q = 0; p + q <= 8; ++q)
            check_roundtrip(closure_poset(SymbolicFortSystem{p, q}));
}

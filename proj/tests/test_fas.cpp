#include <doctest.h>

#include <numeric>
#include <set>

#include "arcfas/fas.hpp"
#include "arcfas/instances.hpp"
#include "oracles.hpp"

using namespace arcfas;

TEST_CASE("tau_exact on known instances") {
    CHECK(tau_exact(build_paper_T()).tau == 12);
    CHECK(tau_exact(build_paper_T7()).tau == 5);
    CHECK(tau_exact(build_paper_Tprime()).tau == 15);
    CHECK(tau_exact(transitive_tournament(6)).tau == 0);
    CHECK(tau_exact(directed_cycle(3)).tau == 1);
    CHECK_THROWS_AS(tau_exact(Digraph(25)), GraphError);
    CHECK_THROWS_AS(tau_exact(Digraph(10), 8), GraphError);
}

TEST_CASE("the alphabetical order of T is tau-optimal") {
    const Digraph t = build_paper_T();
    CHECK(static_cast<int>(backward_arcs(t, alpha_ordering()).size()) == tau_exact(t).tau);
}

TEST_CASE("FasResult invariants") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Digraph d = random_digraph(2 + seed % 11, 0.45, seed);
        const FasResult r = tau_exact(d);
        CHECK(static_cast<int>(r.fas.size()) == r.tau);
        CHECK(r.fas == backward_arcs(d, r.ordering));
        CHECK(is_acyclic(d.without(r.fas)));
        CHECK(tau_value(d) == r.tau);
    }
}

TEST_CASE("tau_exact matches the all-permutation minimum") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Digraph d = random_digraph(1 + seed % 7, 0.2 + 0.1 * (seed % 7), seed);
        CHECK(tau_exact(d).tau == oracle::tau_all_permutations(d));
    }
}

TEST_CASE("tau is invariant under relabeling and monotone under arc deletion") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Digraph d = random_digraph(3 + seed % 9, 0.5, seed);
        const int tau = tau_value(d);
        CHECK(tau_value(d.relabeled(oracle::random_permutation(d.order(), seed))) == tau);
        for (const Arc& a : d.arcs()) CHECK(tau_value(d.without({a})) <= tau);
    }
}

TEST_CASE("tau is at least the minimum out-degree bound") {
    CHECK(mindeg_lower_bound(directed_cycle(3)) == 1);
    CHECK(mindeg_lower_bound(transitive_tournament(7)) == 0);
    CHECK(mindeg_lower_bound(build_paper_T11()) == 15);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Digraph d = random_digraph(2 + seed % 9, 0.3 + 0.1 * (seed % 7), seed);
        CHECK(tau_value(d) >= mindeg_lower_bound(d));
    }
}

TEST_CASE("enumerate_min_fas") {
    const auto c3 = enumerate_min_fas(directed_cycle(3), 10);
    CHECK(c3 == std::vector<ArcSet>{{{0, 1}}, {{1, 2}}, {{2, 0}}});
    CHECK(enumerate_min_fas(transitive_tournament(4), 10) == std::vector<ArcSet>{ArcSet{}});

    const Digraph t = build_paper_T();
    const auto sets = enumerate_min_fas(t, 1000);
    CHECK(sets.size() == 117);
    CHECK(enumerate_min_fas(t, 100).size() == 100);
    CHECK(std::find(sets.begin(), sets.end(), backward_arcs(t, alpha_ordering())) != sets.end());
    for (const ArcSet& s : sets) {
        CHECK(s.size() == 12);
        CHECK(is_acyclic(t.without(s)));
    }
    CHECK(enumerate_min_fas(t, 1).size() == 1);
    CHECK_THROWS_AS(enumerate_min_fas(Digraph(17), 1), GraphError);
}

TEST_CASE("enumerate_min_fas matches backward sets of optimal permutations") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const Digraph d = random_digraph(2 + seed % 6, 0.3 + 0.1 * (seed % 5), seed + 900);
        const auto sets = enumerate_min_fas(d, 100000);
        const int tau = oracle::tau_all_permutations(d);
        std::set<ArcSet> expected;
        std::vector<int> perm(d.order());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            const ArcSet back = backward_arcs(d, VertexOrdering(perm));
            if (static_cast<int>(back.size()) == tau) expected.insert(back);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(std::set<ArcSet>(sets.begin(), sets.end()) == expected);
    }
}

TEST_CASE("isaak hypothesis check") {
    const Digraph t = build_paper_T();
    const ArcSet alpha = backward_arcs(t, alpha_ordering());
    const IsaakCheck check = isaak_hypothesis(t, alpha);
    CHECK(check.minimum);
    CHECK(check.acyclic);
    REQUIRE(check.path);
    CHECK(*check.path == std::vector<int>{12, 10, 8, 6, 4, 2, 0});
    CHECK(isaak_hypothesis_holds(t, alpha));

    CHECK(isaak_hypothesis_holds(directed_cycle(3), {{2, 0}}));

    // one extra arc on top of a minimum FAS fails the size test
    ArcSet bigger = alpha;
    bigger.insert(arc_from_names("ab"));
    CHECK(bigger.size() == 13);
    CHECK_FALSE(isaak_hypothesis(t, bigger).minimum);
    CHECK_FALSE(isaak_hypothesis_holds(t, bigger));

    CHECK_THROWS_AS(isaak_hypothesis(t, {arc_from_names("ba")}), GraphError);
}

#include <doctest.h>

#include "arcfas/fas.hpp"
#include "arcfas/flow.hpp"
#include "arcfas/instances.hpp"
#include "arcfas/packing.hpp"
#include "oracles.hpp"

using namespace arcfas;

namespace {

void check_report(const Digraph& d, const SolveReport& r) {
    CHECK(r.certificate.size() == r.value);
    const PackingCheck ok = validate_packing(d, r.certificate);
    CHECK_MESSAGE(ok.ok, ok.diagnostic);
}

}  // namespace

TEST_CASE("nu_exact on the built-in tournaments") {
    struct Case {
        Digraph graph;
        int nu;
    };
    for (const Case& c : {Case{build_paper_T(), 11}, Case{build_paper_T7(), 4}, Case{build_paper_Tprime(), 14},
                          Case{transitive_tournament(8), 0}}) {
        const SolveReport r = nu_exact(c.graph);
        CHECK(r.optimal);
        CHECK(r.value == c.nu);
        check_report(c.graph, r);
    }
}

TEST_CASE("nu_exact reports an exhausted budget instead of failing") {
    Budget tiny;
    tiny.max_nodes = 3;
    const Digraph t = build_paper_T();
    const SolveReport r = nu_exact(t, tiny);
    CHECK_FALSE(r.optimal);
    CHECK(r.value <= 11);
    CHECK(r.value >= 1);
    check_report(t, r);
}

TEST_CASE("nu_exact counts 2-cycles in general digraphs") {
    const Digraph digons = Digraph::from_arcs(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
    const SolveReport r = nu_exact(digons);
    CHECK(r.value == 3);
    CHECK(nu_bruteforce(digons) == 3);
    check_report(digons, r);
}

TEST_CASE("nu_bruteforce") {
    CHECK(nu_bruteforce(directed_cycle(3)) == 1);
    CHECK(nu_bruteforce(Digraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})) == 2);
    CHECK(nu_bruteforce(build_paper_T7()) == 4);
    CHECK_THROWS_AS(nu_bruteforce(Digraph(8)), GraphError);
}

TEST_CASE("nu_exact agrees with brute force on random oriented graphs") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Digraph d = random_oriented(1 + seed % 6, 0.4 + 0.1 * (seed % 6), seed);
        const SolveReport r = nu_exact(d);
        REQUIRE(r.optimal);
        CHECK(r.value == nu_bruteforce(d));
        check_report(d, r);
    }
}

TEST_CASE("nu_exact agrees with brute force on dense digraphs with 2-cycles") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Digraph d = random_digraph(3 + seed % 5, 0.35 + 0.08 * (seed % 6), seed);
        const SolveReport r = nu_exact(d);
        REQUIRE(r.optimal);
        CHECK(r.value == nu_bruteforce(d));
        check_report(d, r);
    }
}

TEST_CASE("nu never exceeds tau nor the tournament packing bound") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const int n = 3 + seed % 8;
        const Digraph t = random_tournament(n, seed);
        const SolveReport r = nu_exact(t);
        REQUIRE(r.optimal);
        CHECK(r.value <= tau_value(t));
        CHECK(r.value <= n * ((n - 1) / 2) / 3);
        check_report(t, r);
    }
}

TEST_CASE("validate_packing") {
    const Digraph t = build_paper_T();
    CyclePacking family = build_family_C();
    CHECK(family.size() == 11);
    CHECK(validate_packing(t, family).ok);

    family.cycles.push_back({0, 1, 2});
    const PackingCheck reused = validate_packing(t, family);
    CHECK_FALSE(reused.ok);
    CHECK(reused.diagnostic.find("reuses arc") != std::string::npos);

    CHECK(validate_packing(directed_cycle(3), {{{0, 1, 2}}}).ok);
    CHECK_FALSE(validate_packing(directed_cycle(3), {{{0, 2, 1}}}).ok);
    CHECK_FALSE(validate_packing(directed_cycle(3), {{{0, 1, 0}}}).ok);
    CHECK_FALSE(validate_packing(directed_cycle(3), {{{0}}}).ok);
}

TEST_CASE("the family C covers every alpha-backward arc except me") {
    const Digraph t = build_paper_T();
    const ArcSet used = build_family_C().arcs();
    ArcSet missing;
    for (const Arc& a : backward_arcs(t, alpha_ordering())) {
        if (!used.contains(a)) missing.insert(a);
    }
    CHECK(missing == ArcSet{arc_from_names("me")});
}

TEST_CASE("count_triangles_through") {
    CHECK(count_triangles_through(directed_cycle(3), 0) == 1);
    const Digraph tt = transitive_tournament(6);
    for (int v = 0; v < 6; ++v) CHECK(count_triangles_through(tt, v) == 0);
    // frozen from a direct enumeration: 15 arcs from {a..e} to {f..j}
    const Digraph t11 = build_paper_T11();
    CHECK(count_triangles_through(t11, 10) == 15);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Digraph d = random_digraph(3 + seed % 8, 0.5, seed);
        for (int v = 0; v < d.order(); ++v) {
            CHECK(count_triangles_through(d, v) == static_cast<int>(oracle::triangles_through(d, v).size()));
        }
    }
}

TEST_CASE("max_triangles_through") {
    CHECK(max_triangles_through(directed_cycle(3), 0).count == 1);
    CHECK(max_triangles_through(transitive_tournament(5), 2).count == 0);

    const Digraph t11 = build_paper_T11();
    const TrianglePacking k = max_triangles_through(t11, 10);
    CHECK(k.count == 4);
    CHECK(oracle::max_disjoint_family(oracle::triangles_through(t11, 10)) == 4);
    CHECK(validate_packing(t11, k.triangles).ok);
    for (const Cycle& c : k.triangles.cycles) {
        CHECK(c.size() == 3);
        CHECK(c.front() == 10);
    }
}

TEST_CASE("triangle matching equals brute-force triangle packing") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Digraph d = seed % 2 ? random_tournament(3 + seed % 6, seed) : random_digraph(3 + seed % 6, 0.5, seed);
        for (int v = 0; v < d.order(); ++v) {
            const TrianglePacking tp = max_triangles_through(d, v);
            CHECK(tp.count == oracle::max_disjoint_family(oracle::triangles_through(d, v)));
            CHECK(tp.count <= count_triangles_through(d, v));
            CHECK(tp.count <= std::min(d.out_degree(v), d.in_degree(v)));
            CHECK(tp.count <= max_cycles_through(d, v));
            CHECK(validate_packing(d, tp.triangles).ok);
        }
    }
}

TEST_CASE("Landau: minimum out-degree vertices lie on at least delta+ triangles") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Digraph t = random_tournament(3 + seed % 10, seed);
        const int delta = t.min_out_degree();
        for (int v = 0; v < t.order(); ++v) {
            if (t.out_degree(v) == delta) CHECK(count_triangles_through(t, v) >= delta);
        }
    }
}

TEST_CASE("triangle conjecture check") {
    CHECK(triangle_conjecture_holds(directed_cycle(3)));
    CHECK(triangle_conjecture_holds(transitive_tournament(6)));
    // k alone falls short; the other ten vertices reach five triangles
    const Digraph t11 = build_paper_T11();
    CHECK(triangle_conjecture_holds(t11));
    for (int v = 0; v < 11; ++v) {
        const int expected = v == 10 ? 4 : 5;
        CHECK(max_triangles_through(t11, v).count == expected);
        CHECK(oracle::max_disjoint_family(oracle::triangles_through(t11, v)) == expected);
    }
    CHECK_THROWS_AS(triangle_conjecture_holds(Digraph::from_arcs(3, {{0, 1}})), GraphError);
}

#include <doctest.h>

#include <sstream>

#include "arcfas/digraph.hpp"
#include "arcfas/graph_io.hpp"
#include "arcfas/instances.hpp"
#include "oracles.hpp"

using namespace arcfas;

namespace {

ArcSet names(std::initializer_list<const char*> list) {
    ArcSet s;
    for (const char* a : list) s.insert(arc_from_names(a));
    return s;
}

}  // namespace

TEST_CASE("from_arcs builds exactly the given arcs") {
    const Digraph c3 = Digraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(c3.arc_count() == 3);
    CHECK(c3.has_arc(0, 1));
    CHECK_FALSE(c3.has_arc(1, 0));
    CHECK(c3.is_oriented());
    CHECK(c3.is_tournament());
    CHECK(build_paper_T().arc_count() == 78);
}

TEST_CASE("from_arcs rejects malformed input with the offending pair") {
    CHECK_THROWS_WITH_AS(Digraph::from_arcs(2, {{0, 0}}), "self-loop (0,0)", GraphError);
    CHECK_THROWS_WITH_AS(Digraph::from_arcs(2, {{0, 1}, {0, 1}}), "duplicate arc (0,1)", GraphError);
    CHECK_THROWS_WITH_AS(Digraph::from_arcs(2, {{0, 2}}), "out-of-range endpoint (0,2)", GraphError);
    CHECK_THROWS_AS(Digraph(0), GraphError);
    CHECK_THROWS_AS(Digraph(65), GraphError);
}

TEST_CASE("orientation predicates") {
    const Digraph digon = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(digon.is_oriented());
    CHECK_FALSE(digon.is_tournament());
    const Digraph path = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
    CHECK(path.is_oriented());
    CHECK_FALSE(path.is_tournament());
}

TEST_CASE("backward_arcs") {
    const Digraph c3 = directed_cycle(3);
    CHECK(backward_arcs(c3, VertexOrdering::identity(3)) == ArcSet{{2, 0}});
    CHECK(backward_arcs(transitive_tournament(4), VertexOrdering::identity(4)).empty());
    CHECK(backward_arcs(build_paper_T(), alpha_ordering()) ==
          names({"ca", "ec", "ge", "ig", "ki", "mk", "ga", "ic", "ke", "mg", "ia", "me"}));
    CHECK_THROWS_AS(VertexOrdering({0, 0, 1}), GraphError);
    CHECK_THROWS_AS(backward_arcs(c3, VertexOrdering::identity(4)), GraphError);
}

TEST_CASE("removing the backward arcs of any ordering leaves an acyclic digraph") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Digraph d = random_digraph(2 + seed % 9, 0.4, seed);
        const VertexOrdering order(oracle::random_permutation(d.order(), seed));
        CHECK(is_acyclic(d.without(backward_arcs(d, order))).has_value());
    }
}

TEST_CASE("backward_arcs commutes with relabeling") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Digraph d = random_digraph(3 + seed % 8, 0.5, seed);
        const auto order = oracle::random_permutation(d.order(), seed + 1);
        const auto relabel = oracle::random_permutation(d.order(), seed + 2);
        std::vector<int> moved(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) moved[i] = relabel[order[i]];
        ArcSet expected;
        for (const Arc& a : backward_arcs(d, VertexOrdering(order))) expected.insert({relabel[a.tail], relabel[a.head]});
        CHECK(backward_arcs(d.relabeled(relabel), VertexOrdering(moved)) == expected);
    }
}

TEST_CASE("is_acyclic") {
    auto topo = is_acyclic(transitive_tournament(5));
    REQUIRE(topo);
    CHECK(topo->perm() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK_FALSE(is_acyclic(directed_cycle(3)));
    const Digraph t = build_paper_T();
    CHECK(is_acyclic(t.without(backward_arcs(t, alpha_ordering()))));
    CHECK_FALSE(is_acyclic(t));
}

TEST_CASE("second_out_neighborhood") {
    CHECK(second_out_neighborhood(directed_cycle(3), 0) == bit(2));
    CHECK(second_out_neighborhood(transitive_tournament(3), 0) == 0);
    // frozen from the two-hop oracle: N++(a) = {c, g, i}
    const Digraph t = build_paper_T();
    CHECK(second_out_neighborhood(t, 0) == (bit(2) | bit(6) | bit(8)));

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const Digraph d = random_digraph(1 + seed % 12, 0.35, seed);
        for (int v = 0; v < d.order(); ++v) {
            const auto expected = oracle::two_hop(d, v);
            const auto got = to_vector(second_out_neighborhood(d, v));
            CHECK(std::vector<int>(expected.begin(), expected.end()) == got);
        }
    }
}

TEST_CASE("tournament neighborhoods partition the vertex set") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const Digraph t = random_tournament(2 + seed % 14, seed);
        for (int v = 0; v < t.order(); ++v) {
            CHECK((t.out(v) & t.in(v)) == 0);
            CHECK((t.out(v) | t.in(v) | bit(v)) == t.vertices());
            CHECK(t.out_degree(v) + t.in_degree(v) == t.order() - 1);
        }
    }
}

TEST_CASE("is_eulerian requires balance and strong connectivity") {
    CHECK(is_eulerian(build_paper_T11()));
    CHECK_FALSE(is_eulerian(transitive_tournament(3)));
    CHECK(is_eulerian(directed_cycle(3)));
    // two disjoint triangles are balanced but not strongly connected
    CHECK_FALSE(is_eulerian(Digraph::from_arcs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
}

TEST_CASE("has_hamiltonian_path") {
    const auto on_cycle = has_hamiltonian_path(directed_cycle(3));
    REQUIRE(on_cycle);
    CHECK(on_cycle->size() == 3);
    CHECK_FALSE(has_hamiltonian_path(Digraph(2)));
    CHECK(has_hamiltonian_path(Digraph(1)) == std::vector<int>{0});
    CHECK_THROWS_AS(has_hamiltonian_path(Digraph(25)), GraphError);

    const Digraph t = build_paper_T();
    const auto sub = arc_induced_subgraph(t, backward_arcs(t, alpha_ordering()));
    CHECK(sub.graph.order() == 7);
    auto path = has_hamiltonian_path(sub.graph);
    REQUIRE(path);
    std::string named;
    for (int v : *path) named += vertex_name(sub.original[v]);
    CHECK(named == "mkigeca");
}

TEST_CASE("graph text format") {
    std::istringstream in("# triangle\n3 3\n0 1\n# mid comment\n1 2\n2 0\n");
    const Digraph d = read_graph(in);
    CHECK(d == directed_cycle(3));
    CHECK(graph_to_text(d) == "3 3\n0 1\n1 2\n2 0\n");

    const Digraph t = build_paper_T();
    std::istringstream again(graph_to_text(t));
    CHECK(read_graph(again) == t);

    std::istringstream short_body("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(short_body), GraphError);
    std::istringstream loop("2 1\n1 1\n");
    CHECK_THROWS_WITH_AS(read_graph(loop), "self-loop (1,1)", GraphError);
    std::istringstream garbage("2 1\n0 x\n");
    CHECK_THROWS_AS(read_graph(garbage), GraphError);
    std::istringstream trailing("2 1\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_graph(trailing), GraphError);
}

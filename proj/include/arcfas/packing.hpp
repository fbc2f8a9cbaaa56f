#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcfas/digraph.hpp"

namespace arcfas {

/// A directed cycle given by its vertex sequence; the closing arc runs from
/// the last vertex back to the first.
using Cycle = std::vector<int>;

std::vector<Arc> cycle_arcs(const Cycle& c);

struct CyclePacking {
    std::vector<Cycle> cycles;

    int size() const { return static_cast<int>(cycles.size()); }
    /// Union of the arcs of all cycles.
    ArcSet arcs() const;
};

/// Result of validate_packing; false results carry the first violation found.
struct PackingCheck {
    bool ok = true;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
};

/// Every cycle is a simple directed cycle of d (length >= 2) and no arc is used twice.
PackingCheck validate_packing(const Digraph& d, const CyclePacking& p);

/// Search effort limits for nu_exact. Exhausting either is a reported state.
struct Budget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 1800.0;

    /// Defaults overridden by ARCFAS_BUDGET_NODES and ARCFAS_BUDGET_SECS when set.
    static Budget from_env();
};

struct SolveReport {
    int value = 0;
    CyclePacking certificate;
    /// True iff the search completed, in which case value is the maximum.
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

/// Maximum number of arc-disjoint cycles by branch and bound.
///
/// Each node picks an arc e that lies on a cycle of the residual graph and
/// branches into "some cycle through e is packed" (one child per cycle,
/// shortest first) and "e is unused". Bounds are computed per strong
/// component: arcs/3 (arcs/2 with 2-cycles), sum of min(d+, d-)/3, and the
/// exact minimum feedback arc set. Only packings of minimum total length are
/// searched: every chord of a packed cycle must itself be packed, otherwise
/// the chord would close a strictly shorter cycle.
SolveReport nu_exact(const Digraph& d, const Budget& budget = Budget{});

/// All simple cycles, each rotated to start at its smallest vertex.
std::vector<Cycle> enumerate_simple_cycles(const Digraph& d);

inline constexpr int kBruteforceCap = 7;

/// Reference value of nu: enumerate every simple cycle and search all
/// arc-disjoint subfamilies. Throws GraphError when order() > 7.
int nu_bruteforce(const Digraph& d);

/// Number of 3-cycles through v, i.e. arcs from N+(v) to N-(v).
int count_triangles_through(const Digraph& d, int v);

struct TrianglePacking {
    int count = 0;
    CyclePacking triangles;
};

/// Maximum set of arc-disjoint 3-cycles through v. Each such cycle (v, x, y)
/// is an arc x -> y from N+(v) to N-(v), so this is a bipartite matching.
TrianglePacking max_triangles_through(const Digraph& d, int v);

/// Some vertex of minimum out-degree lies on delta+ arc-disjoint 3-cycles.
/// Throws GraphError unless t is a tournament.
bool triangle_conjecture_holds(const Digraph& t);

}  // namespace arcfas

#pragma once

#include <optional>
#include <vector>

#include "arcfas/digraph.hpp"
#include "arcfas/packing.hpp"

namespace arcfas {

struct ThroughVertex {
    int count = 0;
    /// Arc-disjoint cycles, each starting at the fixed vertex.
    CyclePacking cycles;
    /// Minimum arc set meeting every cycle through the vertex; |cut| == count.
    ArcSet cut;
};

/// Maximum number of arc-disjoint cycles through v0, via unit-capacity max flow
/// from v0 (out-arcs) to a copy of v0 (in-arcs), with the matching minimum cut.
ThroughVertex cycles_through(const Digraph& d, int v0);

inline int max_cycles_through(const Digraph& d, int v0) { return cycles_through(d, v0).count; }
inline ArcSet min_arc_cover_through(const Digraph& d, int v0) { return cycles_through(d, v0).cut; }

/// Degree parameters for the through-vertex cycle bound. An empty minimum is
/// unbounded and stored as std::nullopt.
struct Theorem21Params {
    int v0 = 0;
    std::optional<int> a;  ///< min out-degree over N+(v0)
    std::optional<int> b;  ///< min out-degree over N-(v0)
    int d = 0;             ///< out-degree of v0
};

/// Parameters when v0 is adjacent to every other vertex and
/// d+(v0) <= min(a, (a + b + 1) / 2). Throws GraphError unless d is oriented.
std::optional<Theorem21Params> theorem21_applies(const Digraph& d, int v0);

struct Theorem21Report {
    struct Entry {
        Theorem21Params params;
        int cycles = 0;
    };
    std::vector<Entry> checked;
    /// Eligible vertices with fewer than d+(v0) arc-disjoint cycles.
    std::vector<int> violations;

    bool ok() const { return violations.empty(); }
};

Theorem21Report verify_theorem21(const Digraph& d);

}  // namespace arcfas

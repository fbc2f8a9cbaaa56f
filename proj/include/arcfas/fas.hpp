#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "arcfas/digraph.hpp"

namespace arcfas {

/// Default vertex cap for the subset DP (2^24 table entries).
inline constexpr int kFasVertexCap = 24;
inline constexpr int kEnumerateFasCap = 16;

/// A minimum feedback arc set together with an ordering whose backward arcs it is.
struct FasResult {
    int tau = 0;
    VertexOrdering ordering;
    ArcSet fas;
};

/// Exact minimum feedback arc set by dynamic programming over vertex prefixes:
/// f(S + v) = f(S) + |N+(v) & S|, minimized over the last vertex v. Ties pick
/// the smallest vertex id. Throws GraphError when order() > cap.
FasResult tau_exact(const Digraph& d, int cap = kFasVertexCap);

/// tau only, solved independently on each strong component. Used as a bound.
int tau_value(const Digraph& d, int cap = kFasVertexCap);

/// Distinct backward-arc sets of all tau-optimal orderings, at most `limit` of them.
std::vector<ArcSet> enumerate_min_fas(const Digraph& d, std::size_t limit, int cap = kEnumerateFasCap);

namespace detail {
/// tau of a digraph given as compact out-rows over local vertices 0..k-1 (k <= 24).
int tau_of_rows(const std::vector<std::uint32_t>& out);
}  // namespace detail

/// floor(delta * (delta + 1) / 2) with delta the minimum out-degree; never exceeds tau.
int mindeg_lower_bound(const Digraph& d);

/// Outcome of testing whether an arc set is a minimum FAS whose arc-induced
/// digraph is acyclic with a hamiltonian path.
struct IsaakCheck {
    bool minimum = false;
    bool acyclic = false;
    /// Path over the vertices touched by the arc set, in original ids.
    std::optional<std::vector<int>> path;

    bool holds() const { return minimum && acyclic && path.has_value(); }
};

/// Throws GraphError when `fas` contains an arc that is not in d. The path
/// need only span the vertices incident to `fas`, not all of d.
IsaakCheck isaak_hypothesis(const Digraph& d, const ArcSet& fas);
bool isaak_hypothesis_holds(const Digraph& d, const ArcSet& fas);

}  // namespace arcfas

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace arcfas {

inline constexpr int kMaxVertices = 64;

/// Vertex subset of a digraph with at most 64 vertices; bit v stands for vertex v.
using VertexSet = std::uint64_t;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) { return std::popcount(s); }

/// Iterate the members of a vertex set in increasing order.
template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        const int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

std::vector<int> to_vector(VertexSet s);

/// Raised for malformed graphs, orderings, or arc sets.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Arc {
    int tail = 0;
    int head = 0;

    auto operator<=>(const Arc&) const = default;
};

/// Feedback arc sets, union sets of packings and cuts are all plain arc sets.
using ArcSet = std::set<Arc>;

std::string to_string(const Arc& a);

/// A permutation of {0, ..., n-1}; perm()[i] is the vertex at position i.
class VertexOrdering {
public:
    VertexOrdering() = default;
    /// Throws GraphError unless `perm` is a permutation.
    explicit VertexOrdering(std::vector<int> perm);

    static VertexOrdering identity(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    const std::vector<int>& perm() const { return perm_; }
    int operator[](int i) const { return perm_[i]; }
    int position(int v) const { return pos_[v]; }

    bool operator==(const VertexOrdering& o) const { return perm_ == o.perm_; }

private:
    std::vector<int> perm_;
    std::vector<int> pos_;
};

/// Loop-free digraph on at most 64 vertices stored as out- and in-adjacency bit rows.
/// Values are immutable once built; the editing helpers return new graphs.
class Digraph {
public:
    Digraph() = default;
    /// Arcless digraph on n vertices.
    explicit Digraph(int n);

    /// Throws GraphError on self-loops, duplicates or out-of-range endpoints.
    static Digraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);
    static Digraph from_arcs(int n, const ArcSet& arcs);
    static Digraph from_arcs(int n, std::initializer_list<std::pair<int, int>> arcs) {
        return from_arcs(n, std::vector<std::pair<int, int>>(arcs));
    }

    int order() const { return n_; }
    VertexSet vertices() const { return all_vertices(n_); }

    VertexSet out(int v) const { return out_[v]; }
    VertexSet in(int v) const { return in_[v]; }
    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }

    int out_degree(int v) const { return popcount(out_[v]); }
    int in_degree(int v) const { return popcount(in_[v]); }
    int min_out_degree() const;
    int arc_count() const;

    /// All arcs in lexicographic order.
    std::vector<Arc> arcs() const;
    ArcSet arc_set() const;

    bool is_oriented() const;
    bool is_tournament() const;
    bool adjacent_to_all(int v) const;

    Digraph without(const ArcSet& arcs) const;
    Digraph with_arcs(const ArcSet& arcs) const;
    Digraph reversed(const ArcSet& arcs) const;
    /// Subgraph keeping only arcs with both ends in `keep` (vertex ids unchanged).
    Digraph restricted(VertexSet keep) const;
    /// Graph with vertex v renamed to perm[v].
    Digraph relabeled(const std::vector<int>& perm) const;

    bool operator==(const Digraph& o) const;

private:
    void add(int u, int v) {
        out_[u] |= bit(v);
        in_[v] |= bit(u);
    }

    int n_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

/// Arcs pointing from a later to an earlier vertex of the ordering.
ArcSet backward_arcs(const Digraph& d, const VertexOrdering& order);

/// Topological order (smallest available vertex first) when d is acyclic.
std::optional<VertexOrdering> is_acyclic(const Digraph& d);

VertexSet second_out_neighborhood(const Digraph& d, int v);

/// Vertices reachable from v (including v).
VertexSet reachable_from(const Digraph& d, int v);
bool is_strongly_connected(const Digraph& d);

/// Strongly connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> strong_components(const Digraph& d);

/// Balanced degrees and strongly connected.
bool is_eulerian(const Digraph& d);

inline constexpr int kHamiltonianPathCap = 24;

/// Directed path through every vertex, found by subset DP; throws GraphError if
/// order() exceeds kHamiltonianPathCap.
std::optional<std::vector<int>> has_hamiltonian_path(const Digraph& d);

/// The digraph formed by an arc set: vertices touched by some arc, renumbered
/// compactly in increasing order. `original[i]` is the id of new vertex i.
struct ArcInducedSubgraph {
    Digraph graph;
    std::vector<int> original;
};

ArcInducedSubgraph arc_induced_subgraph(const Digraph& d, const ArcSet& arcs);

}  // namespace arcfas

#include "arcfas/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace arcfas {

std::vector<int> to_vector(VertexSet s) {
    std::vector<int> out;
    out.reserve(popcount(s));
    for_each_vertex(s, [&](int v) { out.push_back(v); });
    return out;
}

std::string to_string(const Arc& a) {
    return std::to_string(a.tail) + " " + std::to_string(a.head);
}

VertexOrdering::VertexOrdering(std::vector<int> perm) : perm_(std::move(perm)), pos_(perm_.size(), -1) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        const int v = perm_[i];
        if (v < 0 || v >= n || pos_[v] != -1) {
            throw GraphError("ordering is not a permutation of 0.." + std::to_string(n - 1));
        }
        pos_[v] = i;
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return VertexOrdering(std::move(p));
}

Digraph::Digraph(int n) : n_(n), out_(n, 0), in_(n, 0) {
    if (n < 1 || n > kMaxVertices) {
        throw GraphError("vertex count " + std::to_string(n) + " outside 1..64");
    }
}

Digraph Digraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    Digraph d(n);
    for (const auto& [u, v] : arcs) {
        const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("out-of-range endpoint " + pair);
        if (u == v) throw GraphError("self-loop " + pair);
        if (d.has_arc(u, v)) throw GraphError("duplicate arc " + pair);
        d.add(u, v);
    }
    return d;
}

Digraph Digraph::from_arcs(int n, const ArcSet& arcs) {
    std::vector<std::pair<int, int>> list;
    list.reserve(arcs.size());
    for (const Arc& a : arcs) list.emplace_back(a.tail, a.head);
    return from_arcs(n, list);
}

int Digraph::min_out_degree() const {
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, out_degree(v));
    return best;
}

int Digraph::arc_count() const {
    int m = 0;
    for (VertexSet row : out_) m += popcount(row);
    return m;
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> list;
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(out_[u], [&](int v) { list.push_back({u, v}); });
    }
    return list;
}

ArcSet Digraph::arc_set() const {
    const auto list = arcs();
    return {list.begin(), list.end()};
}

bool Digraph::is_oriented() const {
    for (int v = 0; v < n_; ++v) {
        if (out_[v] & in_[v]) return false;
    }
    return true;
}

bool Digraph::is_tournament() const {
    if (!is_oriented()) return false;
    for (int v = 0; v < n_; ++v) {
        if (!adjacent_to_all(v)) return false;
    }
    return true;
}

bool Digraph::adjacent_to_all(int v) const {
    return (out_[v] | in_[v]) == (vertices() & ~bit(v));
}

Digraph Digraph::without(const ArcSet& arcs) const {
    Digraph d = *this;
    for (const Arc& a : arcs) {
        d.out_[a.tail] &= ~bit(a.head);
        d.in_[a.head] &= ~bit(a.tail);
    }
    return d;
}

Digraph Digraph::with_arcs(const ArcSet& arcs) const {
    Digraph d = *this;
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_ || a.tail == a.head) {
            throw GraphError("invalid arc (" + to_string(a) + ")");
        }
        d.add(a.tail, a.head);
    }
    return d;
}

Digraph Digraph::reversed(const ArcSet& arcs) const {
    ArcSet flipped;
    for (const Arc& a : arcs) {
        if (!has_arc(a.tail, a.head)) throw GraphError("cannot reverse missing arc (" + to_string(a) + ")");
        flipped.insert({a.head, a.tail});
    }
    return without(arcs).with_arcs(flipped);
}

Digraph Digraph::restricted(VertexSet keep) const {
    Digraph d(n_);
    for (int v = 0; v < n_; ++v) {
        if (keep & bit(v)) {
            d.out_[v] = out_[v] & keep;
            d.in_[v] = in_[v] & keep;
        }
    }
    return d;
}

Digraph Digraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw GraphError("relabeling has wrong length");
    VertexOrdering check(perm);
    Digraph d(n_);
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(out_[u], [&](int v) { d.add(perm[u], perm[v]); });
    }
    return d;
}

bool Digraph::operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

ArcSet backward_arcs(const Digraph& d, const VertexOrdering& order) {
    if (order.size() != d.order()) throw GraphError("ordering length differs from vertex count");
    ArcSet result;
    for (const Arc& a : d.arcs()) {
        if (order.position(a.tail) > order.position(a.head)) result.insert(a);
    }
    return result;
}

std::optional<VertexOrdering> is_acyclic(const Digraph& d) {
    const int n = d.order();
    std::vector<int> indeg(n);
    VertexSet ready = 0;
    for (int v = 0; v < n; ++v) {
        indeg[v] = d.in_degree(v);
        if (indeg[v] == 0) ready |= bit(v);
    }
    std::vector<int> perm;
    perm.reserve(n);
    while (ready) {
        const int v = std::countr_zero(ready);
        ready &= ready - 1;
        perm.push_back(v);
        for_each_vertex(d.out(v), [&](int w) {
            if (--indeg[w] == 0) ready |= bit(w);
        });
    }
    if (static_cast<int>(perm.size()) != n) return std::nullopt;
    return VertexOrdering(std::move(perm));
}

VertexSet second_out_neighborhood(const Digraph& d, int v) {
    if (v < 0 || v >= d.order()) throw GraphError("vertex out of range");
    VertexSet two = 0;
    for_each_vertex(d.out(v), [&](int u) { two |= d.out(u); });
    return two & ~d.out(v) & ~bit(v);
}

VertexSet reachable_from(const Digraph& d, int v) {
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= d.out(u); });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

namespace {

VertexSet reaching(const Digraph& d, int v) {
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= d.in(u); });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    return reachable_from(d, 0) == d.vertices() && reaching(d, 0) == d.vertices();
}

std::vector<VertexSet> strong_components(const Digraph& d) {
    std::vector<VertexSet> comps;
    VertexSet left = d.vertices();
    while (left) {
        const int v = std::countr_zero(left);
        const VertexSet comp = reachable_from(d, v) & reaching(d, v);
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

bool is_eulerian(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v) {
        if (d.out_degree(v) != d.in_degree(v)) return false;
    }
    return is_strongly_connected(d);
}

std::optional<std::vector<int>> has_hamiltonian_path(const Digraph& d) {
    const int n = d.order();
    if (n > kHamiltonianPathCap) {
        throw GraphError("hamiltonian path search capped at " + std::to_string(kHamiltonianPathCap) + " vertices");
    }
    // ends[S] = vertices v such that some path covers exactly S and ends at v
    const std::size_t full = std::size_t{1} << n;
    std::vector<std::uint32_t> ends(full, 0);
    for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
    for (std::size_t s = 1; s < full; ++s) {
        std::uint32_t e = ends[s];
        while (e) {
            const int v = std::countr_zero(e);
            e &= e - 1;
            VertexSet ext = d.out(v) & ~static_cast<VertexSet>(s);
            for_each_vertex(ext, [&](int w) { ends[s | (std::size_t{1} << w)] |= 1U << w; });
        }
    }
    std::size_t s = full - 1;
    if (ends[s] == 0) return std::nullopt;
    std::vector<int> path;
    int last = std::countr_zero(ends[s]);
    path.push_back(last);
    while (popcount(s) > 1) {
        const std::size_t prev = s & ~(std::size_t{1} << last);
        const std::uint32_t candidates = ends[prev] & static_cast<std::uint32_t>(d.in(last));
        last = std::countr_zero(candidates);
        path.push_back(last);
        s = prev;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

ArcInducedSubgraph arc_induced_subgraph(const Digraph& d, const ArcSet& arcs) {
    VertexSet touched = 0;
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.head < 0 || a.tail >= d.order() || a.head >= d.order()) {
            throw GraphError("arc (" + to_string(a) + ") out of range");
        }
        touched |= bit(a.tail) | bit(a.head);
    }
    ArcInducedSubgraph result;
    result.original = to_vector(touched);
    std::vector<int> index(d.order(), -1);
    for (int i = 0; i < static_cast<int>(result.original.size()); ++i) index[result.original[i]] = i;
    std::vector<std::pair<int, int>> renamed;
    for (const Arc& a : arcs) renamed.emplace_back(index[a.tail], index[a.head]);
    result.graph = Digraph::from_arcs(std::max<int>(1, static_cast<int>(result.original.size())), renamed);
    return result;
}

}  // namespace arcfas

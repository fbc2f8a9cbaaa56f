#include "arcfas/packing.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <unordered_map>

#include "arcfas/fas.hpp"

namespace arcfas {

std::vector<Arc> cycle_arcs(const Cycle& c) {
    std::vector<Arc> arcs;
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) arcs.push_back({c[i], c[(i + 1) % k]});
    return arcs;
}

ArcSet CyclePacking::arcs() const {
    ArcSet all;
    for (const Cycle& c : cycles) {
        for (const Arc& a : cycle_arcs(c)) all.insert(a);
    }
    return all;
}

namespace {

std::string cycle_text(const Cycle& c) {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

}  // namespace

PackingCheck validate_packing(const Digraph& d, const CyclePacking& p) {
    ArcSet seen;
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
        const Cycle& c = p.cycles[i];
        const std::string where = "cycle " + std::to_string(i) + " " + cycle_text(c);
        if (c.size() < 2) return {false, where + " has fewer than two vertices"};
        VertexSet members = 0;
        for (int v : c) {
            if (v < 0 || v >= d.order()) return {false, where + " has out-of-range vertex " + std::to_string(v)};
            if (members & bit(v)) return {false, where + " repeats vertex " + std::to_string(v)};
            members |= bit(v);
        }
        for (const Arc& a : cycle_arcs(c)) {
            if (!d.has_arc(a.tail, a.head)) return {false, where + " uses missing arc (" + to_string(a) + ")"};
            if (!seen.insert(a).second) return {false, where + " reuses arc (" + to_string(a) + ")"};
        }
    }
    return {};
}

Budget Budget::from_env() {
    Budget b;
    if (const char* nodes = std::getenv("ARCFAS_BUDGET_NODES")) b.max_nodes = std::strtoull(nodes, nullptr, 10);
    if (const char* secs = std::getenv("ARCFAS_BUDGET_SECS")) b.max_seconds = std::strtod(secs, nullptr);
    return b;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Rows {
    std::array<VertexSet, kMaxVertices> out{};
    std::array<VertexSet, kMaxVertices> in{};

    bool has(int u, int v) const { return (out[u] >> v) & 1U; }
    void add(int u, int v) {
        out[u] |= bit(v);
        in[v] |= bit(u);
    }
    void remove(int u, int v) {
        out[u] &= ~bit(v);
        in[v] &= ~bit(u);
    }
};

VertexSet forward_closure(const Rows& r, int v, VertexSet within) {
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= r.out[u]; });
        next &= within;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

VertexSet backward_closure(const Rows& r, int v, VertexSet within) {
    VertexSet seen = bit(v);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= r.in[u]; });
        next &= within;
        frontier = next & ~seen;
        seen |= next;
    }
    return seen;
}

/// Strong components with at least one arc; arcs between components are removed from r.
std::vector<VertexSet> prune_to_components(Rows& r, int n) {
    std::vector<VertexSet> comps;
    VertexSet left = all_vertices(n);
    while (left) {
        const int v = std::countr_zero(left);
        const VertexSet comp = forward_closure(r, v, left) & backward_closure(r, v, left);
        left &= ~comp;
        if (popcount(comp) >= 2) comps.push_back(comp);
    }
    VertexSet owner_mask[kMaxVertices];
    for (int v = 0; v < n; ++v) owner_mask[v] = 0;
    for (VertexSet c : comps) for_each_vertex(c, [&](int v) { owner_mask[v] = c; });
    for (int v = 0; v < n; ++v) {
        r.out[v] &= owner_mask[v];
        r.in[v] &= owner_mask[v];
    }
    return comps;
}

class PackingSearch {
public:
    PackingSearch(const Digraph& d, const Budget& budget) : d_(d), n_(d.order()), budget_(budget) {}

    SolveReport run() {
        start_ = Clock::now();
        Rows residual;
        for (int u = 0; u < n_; ++u) {
            for_each_vertex(d_.out(u), [&](int v) { residual.add(u, v); });
        }
        seed_incumbent(residual);
        Rows forced;
        search(residual, forced, 0);

        SolveReport report;
        report.value = best_;
        report.certificate.cycles = best_cycles_;
        report.optimal = !aborted_;
        report.nodes_explored = nodes_;
        report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return report;
    }

private:
    // Greedy warm start: disjoint triangles first, then repeatedly the shortest remaining cycle.
    void seed_incumbent(Rows r) {
        std::vector<Cycle> cycles;
        for (int u = 0; u < n_; ++u) {
            for (int v = 0; v < n_; ++v) {
                if (!r.has(u, v)) continue;
                const VertexSet closing = r.out[v] & r.in[u] & ~bit(u) & ~bit(v);
                if (!closing) continue;
                const int w = std::countr_zero(closing);
                cycles.push_back({u, v, w});
                r.remove(u, v);
                r.remove(v, w);
                r.remove(w, u);
            }
        }
        while (auto c = shortest_cycle(r)) {
            for (const Arc& a : cycle_arcs(*c)) r.remove(a.tail, a.head);
            cycles.push_back(std::move(*c));
        }
        best_ = static_cast<int>(cycles.size());
        best_cycles_ = std::move(cycles);
    }

    std::optional<Cycle> shortest_cycle(const Rows& r) const {
        std::optional<Cycle> best;
        for (int s = 0; s < n_; ++s) {
            // BFS from s back to s
            std::array<int, kMaxVertices> parent{};
            parent.fill(-1);
            VertexSet seen = bit(s);
            std::vector<int> queue{s};
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const int u = queue[qi];
                if (r.has(u, s)) {
                    Cycle c;
                    for (int x = u; x != s; x = parent[x]) c.push_back(x);
                    c.push_back(s);
                    std::reverse(c.begin(), c.end());
                    if (!best || c.size() < best->size()) best = std::move(c);
                    break;
                }
                for_each_vertex(r.out[u] & ~seen, [&](int w) {
                    seen |= bit(w);
                    parent[w] = u;
                    queue.push_back(w);
                });
            }
        }
        return best;
    }

    bool out_of_budget() {
        if (aborted_) return true;
        if (nodes_ >= budget_.max_nodes) aborted_ = true;
        if ((nodes_ & 1023U) == 0 &&
            std::chrono::duration<double>(Clock::now() - start_).count() > budget_.max_seconds) {
            aborted_ = true;
        }
        return aborted_;
    }

    int component_bound(const Rows& r, VertexSet comp, bool exact) const {
        int arcs = 0;
        int balanced = 0;
        bool digons = false;
        for_each_vertex(comp, [&](int v) {
            const int dout = popcount(r.out[v]);
            const int din = popcount(r.in[v]);
            arcs += dout;
            balanced += std::min(dout, din);
            if (r.out[v] & r.in[v]) digons = true;
        });
        const int girth = digons ? 2 : 3;
        int bound = std::min(arcs, balanced) / girth;
        if (!exact || bound <= 1) return bound;
        const auto members = to_vector(comp);
        std::array<int, kMaxVertices> local{};
        for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
        std::vector<std::uint32_t> rows(members.size(), 0);
        for (std::size_t i = 0; i < members.size(); ++i) {
            for_each_vertex(r.out[members[i]], [&](int w) { rows[i] |= 1U << local[w]; });
        }
        return std::min(bound, detail::tau_of_rows(rows));
    }

    static constexpr int kExactBoundComponentCap = 16;
    static constexpr int kExactBoundDepth = 2;

    int upper_bound(const Rows& r, const std::vector<VertexSet>& comps, int depth) const {
        int total = 0;
        for (VertexSet c : comps) {
            const int k = popcount(c);
            const bool exact = k <= 24 && (k <= kExactBoundComponentCap || depth <= kExactBoundDepth);
            total += component_bound(r, c, exact);
        }
        return total;
    }

    void record_incumbent() {
        if (static_cast<int>(current_.size()) > best_) {
            best_ = static_cast<int>(current_.size());
            best_cycles_ = current_;
        }
    }

    Arc choose_arc(const Rows& r, const Rows& forced, const std::vector<VertexSet>& comps) const {
        for (int u = 0; u < n_; ++u) {
            if (forced.out[u]) return {u, std::countr_zero(forced.out[u])};
        }
        (void)comps;
        for (int u = 0; u < n_; ++u) {
            if (r.out[u]) return {u, std::countr_zero(r.out[u])};
        }
        return {-1, -1};
    }

    void search(Rows r, const Rows& forced, int depth) {
        ++nodes_;
        if (out_of_budget()) return;
        record_incumbent();

        const auto comps = prune_to_components(r, n_);
        for (int u = 0; u < n_; ++u) {
            if (forced.out[u] & ~r.out[u]) return;  // a chord that must be packed lies on no cycle
        }
        if (comps.empty()) return;
        const int value = static_cast<int>(current_.size());
        if (value + upper_bound(r, comps, depth) <= best_) return;

        const Arc e = choose_arc(r, forced, comps);
        pack_through(r, forced, e, depth);
        if (aborted_) return;
        if (!forced.has(e.tail, e.head)) {
            Rows child = r;
            child.remove(e.tail, e.head);
            search(child, forced, depth + 1);
        }
    }

    // Every cycle through e, shortest first; each one is packed and searched in turn.
    void pack_through(const Rows& r, const Rows& forced, Arc e, int depth) {
        const int u = e.tail;
        const int w = e.head;
        // arcs of d that are neither residual nor packed: excluded from the packing
        Rows dropped;
        for (int x = 0; x < n_; ++x) {
            dropped.out[x] = d_.out(x) & ~r.out[x] & ~used_.out[x];
            dropped.in[x] = d_.in(x) & ~r.in[x] & ~used_.in[x];
        }
        if (dropped.has(w, u)) return;

        // hop distance to u in the residual graph
        std::array<int, kMaxVertices> dist{};
        dist.fill(kMaxVertices + 1);
        dist[u] = 0;
        VertexSet frontier = bit(u);
        VertexSet seen = frontier;
        for (int k = 1; frontier; ++k) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int x) { next |= r.in[x]; });
            frontier = next & ~seen;
            seen |= next;
            for_each_vertex(frontier, [&](int x) { dist[x] = k; });
        }
        if (dist[w] > kMaxVertices) return;

        const int min_len = std::max(r.has(w, u) ? 2 : 3, dist[w] + 1);
        const int max_len = popcount(seen & forward_closure(r, w, all_vertices(n_)));
        Cycle path{u, w};
        for (int len = min_len; len <= max_len && !aborted_; ++len) {
            extend(r, forced, dropped, dist, path, bit(u) | bit(w), len - 1, depth);
        }
    }

    void extend(const Rows& r, const Rows& forced, const Rows& dropped, const std::array<int, kMaxVertices>& dist,
                Cycle& path, VertexSet on_path, int arcs_left, int depth) {
        if (aborted_) return;
        const int last = path.back();
        const int u = path.front();
        if (arcs_left == 1) {
            if (r.has(last, u)) pack_cycle(r, forced, path, on_path, depth);
            return;
        }
        VertexSet next = r.out[last] & ~on_path;
        for_each_vertex(next, [&](int x) {
            if (aborted_ || dist[x] > arcs_left - 1) return;
            if ((dropped.out[x] | dropped.in[x]) & on_path) return;
            path.push_back(x);
            extend(r, forced, dropped, dist, path, on_path | bit(x), arcs_left - 1, depth);
            path.pop_back();
        });
    }

    void pack_cycle(const Rows& r, const Rows& forced, const Cycle& c, VertexSet members, int depth) {
        Rows child = r;
        Rows child_forced = forced;
        for (const Arc& a : cycle_arcs(c)) {
            child.remove(a.tail, a.head);
            child_forced.remove(a.tail, a.head);
            used_.add(a.tail, a.head);
        }
        for (int x : c) {
            const VertexSet chords = child.out[x] & members;
            for_each_vertex(chords, [&](int y) { child_forced.add(x, y); });
        }
        current_.push_back(c);
        search(child, child_forced, depth + 1);
        current_.pop_back();
        for (const Arc& a : cycle_arcs(c)) used_.remove(a.tail, a.head);
    }

    const Digraph& d_;
    int n_;
    Budget budget_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    int best_ = 0;
    std::vector<Cycle> best_cycles_;
    std::vector<Cycle> current_;
    Rows used_;
};

}  // namespace

SolveReport nu_exact(const Digraph& d, const Budget& budget) { return PackingSearch(d, budget).run(); }

std::vector<Cycle> enumerate_simple_cycles(const Digraph& d) {
    std::vector<Cycle> cycles;
    Cycle path;
    std::function<void(int, VertexSet)> walk = [&](int v, VertexSet allowed) {
        const int start = path.front();
        if (d.has_arc(v, start) && path.size() >= 2) cycles.push_back(path);
        for_each_vertex(d.out(v) & allowed, [&](int w) {
            path.push_back(w);
            walk(w, allowed & ~bit(w));
            path.pop_back();
        });
    };
    for (int s = 0; s < d.order(); ++s) {
        path = {s};
        const VertexSet above = d.vertices() & ~all_vertices(s + 1);
        walk(s, above);
    }
    return cycles;
}

int nu_bruteforce(const Digraph& d) {
    if (d.order() > kBruteforceCap) {
        throw GraphError("nu_bruteforce capped at " + std::to_string(kBruteforceCap) + " vertices");
    }
    const auto arcs = d.arcs();
    const int m = static_cast<int>(arcs.size());
    std::array<std::array<int, kMaxVertices>, kBruteforceCap> index{};
    for (int i = 0; i < m; ++i) index[arcs[i].tail][arcs[i].head] = i;

    // cycles as arc masks, bucketed by their lowest arc index
    std::vector<std::vector<std::uint64_t>> by_low(m);
    for (const Cycle& c : enumerate_simple_cycles(d)) {
        std::uint64_t mask = 0;
        for (const Arc& a : cycle_arcs(c)) mask |= std::uint64_t{1} << index[a.tail][a.head];
        by_low[std::countr_zero(mask)].push_back(mask);
    }

    std::vector<std::unordered_map<std::uint64_t, int>> memo(m);
    std::function<int(int, std::uint64_t)> best = [&](int i, std::uint64_t used) -> int {
        if (i == m) return 0;
        const std::uint64_t key = used >> i;
        if (auto it = memo[i].find(key); it != memo[i].end()) return it->second;
        int result = best(i + 1, used);
        for (std::uint64_t c : by_low[i]) {
            if (c & used) continue;
            result = std::max(result, 1 + best(i + 1, used | c));
        }
        memo[i].emplace(key, result);
        return result;
    };
    return best(0, 0);
}

int count_triangles_through(const Digraph& d, int v) {
    if (v < 0 || v >= d.order()) throw GraphError("vertex out of range");
    int count = 0;
    for_each_vertex(d.out(v), [&](int x) { count += popcount(d.out(x) & d.in(v)); });
    return count;
}

TrianglePacking max_triangles_through(const Digraph& d, int v) {
    if (v < 0 || v >= d.order()) throw GraphError("vertex out of range");
    const VertexSet heads = d.in(v);
    std::array<int, kMaxVertices> match_of_head{};
    match_of_head.fill(-1);

    // Kuhn's augmenting paths, out-neighbors in increasing order
    std::function<bool(int, VertexSet&)> augment = [&](int x, VertexSet& visited) {
        bool done = false;
        for_each_vertex(d.out(x) & heads, [&](int y) {
            if (done || (visited & bit(y))) return;
            visited |= bit(y);
            if (match_of_head[y] < 0 || augment(match_of_head[y], visited)) {
                match_of_head[y] = x;
                done = true;
            }
        });
        return done;
    };
    for_each_vertex(d.out(v), [&](int x) {
        VertexSet visited = 0;
        augment(x, visited);
    });

    TrianglePacking result;
    for_each_vertex(heads, [&](int y) {
        if (match_of_head[y] >= 0) result.triangles.cycles.push_back({v, match_of_head[y], y});
    });
    std::sort(result.triangles.cycles.begin(), result.triangles.cycles.end());
    result.count = result.triangles.size();
    return result;
}

bool triangle_conjecture_holds(const Digraph& t) {
    if (!t.is_tournament()) throw GraphError("triangle conjecture check needs a tournament");
    const int delta = t.min_out_degree();
    for (int v = 0; v < t.order(); ++v) {
        if (t.out_degree(v) == delta && max_triangles_through(t, v).count >= delta) return true;
    }
    return false;
}

}  // namespace arcfas

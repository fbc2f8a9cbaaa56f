#include "arcfas/flow.hpp"

#include <algorithm>
#include <deque>

namespace arcfas {

namespace {

// Split network: vertex v0 keeps its out-arcs, its in-arcs end at sink n.
class UnitFlow {
public:
    UnitFlow(const Digraph& d, int v0) : n_(d.order() + 1), source_(v0), sink_(d.order()),
                                         cap_(n_ * n_, 0), flow_(n_ * n_, 0) {
        for (const Arc& a : d.arcs()) {
            const int head = a.head == v0 ? sink_ : a.head;
            cap_[idx(a.tail, head)] = 1;
        }
    }

    int solve() {
        int total = 0;
        std::vector<int> parent;
        while (bfs(parent)) {
            for (int w = sink_; w != source_; w = parent[w]) {
                const int u = parent[w];
                if (flow_[idx(w, u)]) {
                    flow_[idx(w, u)] = 0;
                } else {
                    flow_[idx(u, w)] = 1;
                }
            }
            ++total;
        }
        return total;
    }

    /// Vertices reachable from the source in the residual network.
    std::vector<bool> source_side() {
        std::vector<int> parent;
        bfs(parent);
        std::vector<bool> side(n_);
        for (int v = 0; v < n_; ++v) side[v] = parent[v] != -1 || v == source_;
        return side;
    }

    /// Peel one source-to-sink walk per unit, dropping any loops met on the way.
    std::vector<Cycle> decompose() {
        std::vector<std::uint8_t> left = flow_;
        std::vector<Cycle> cycles;
        for (;;) {
            std::vector<int> walk{source_};
            int cur = source_;
            bool found = false;
            while (cur != sink_) {
                int next = -1;
                for (int w = 0; w < n_; ++w) {
                    if (left[idx(cur, w)]) {
                        next = w;
                        break;
                    }
                }
                if (next < 0) break;
                left[idx(cur, next)] = 0;
                if (next == sink_) {
                    found = true;
                    break;
                }
                auto seen = std::find(walk.begin(), walk.end(), next);
                if (seen != walk.end()) {
                    walk.erase(seen + 1, walk.end());
                } else {
                    walk.push_back(next);
                }
                cur = next;
            }
            if (!found) break;
            cycles.push_back(std::move(walk));
        }
        return cycles;
    }

private:
    int idx(int u, int w) const { return u * n_ + w; }

    bool residual(int u, int w) const { return (cap_[idx(u, w)] && !flow_[idx(u, w)]) || flow_[idx(w, u)]; }

    bool bfs(std::vector<int>& parent) const {
        parent.assign(n_, -1);
        std::deque<int> queue{source_};
        std::vector<bool> seen(n_, false);
        seen[source_] = true;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w = 0; w < n_; ++w) {
                if (seen[w] || !residual(u, w)) continue;
                seen[w] = true;
                parent[w] = u;
                if (w == sink_) return true;
                queue.push_back(w);
            }
        }
        return false;
    }

    int n_;
    int source_;
    int sink_;
    std::vector<std::uint8_t> cap_;
    std::vector<std::uint8_t> flow_;
};

}  // namespace

ThroughVertex cycles_through(const Digraph& d, int v0) {
    if (v0 < 0 || v0 >= d.order()) throw GraphError("vertex out of range");
    UnitFlow net(d, v0);
    ThroughVertex result;
    result.count = net.solve();
    result.cycles.cycles = net.decompose();
    const auto side = net.source_side();
    for (const Arc& a : d.arcs()) {
        const bool head_on_source_side = a.head != v0 && side[a.head];
        if (side[a.tail] && !head_on_source_side) result.cut.insert(a);
    }
    return result;
}

std::optional<Theorem21Params> theorem21_applies(const Digraph& d, int v0) {
    if (!d.is_oriented()) throw GraphError("through-vertex bound needs an oriented graph");
    if (v0 < 0 || v0 >= d.order()) throw GraphError("vertex out of range");
    if (!d.adjacent_to_all(v0)) return std::nullopt;

    auto min_out = [&](VertexSet s) -> std::optional<int> {
        std::optional<int> best;
        for_each_vertex(s, [&](int v) { best = std::min(best.value_or(d.order()), d.out_degree(v)); });
        return best;
    };
    Theorem21Params p{v0, min_out(d.out(v0)), min_out(d.in(v0)), d.out_degree(v0)};
    // d <= (a + b + 1) / 2 compared as 2d <= a + b + 1
    const bool below_a = !p.a || p.d <= *p.a;
    const bool below_mean = !p.a || !p.b || 2 * p.d <= *p.a + *p.b + 1;
    if (below_a && below_mean) return p;
    return std::nullopt;
}

Theorem21Report verify_theorem21(const Digraph& d) {
    Theorem21Report report;
    for (int v = 0; v < d.order(); ++v) {
        auto params = theorem21_applies(d, v);
        if (!params) continue;
        const int cycles = max_cycles_through(d, v);
        report.checked.push_back({*params, cycles});
        if (cycles < params->d) report.violations.push_back(v);
    }
    return report;
}

}  // namespace arcfas

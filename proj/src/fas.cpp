#include "arcfas/fas.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <set>

namespace arcfas {

namespace {

using Table = std::vector<std::uint16_t>;

void check_cap(const Digraph& d, int cap, const char* what) {
    if (d.order() > cap) {
        throw GraphError(std::string(what) + ": " + std::to_string(d.order()) + " vertices exceeds cap " +
                         std::to_string(cap));
    }
}

// out[v] restricted to the local vertex range, bit i = local vertex i
void fill_table(const std::vector<std::uint32_t>& out, Table& f) {
    const int k = static_cast<int>(out.size());
    const std::uint32_t full = k == 32 ? ~0U : (1U << k) - 1;
    f.assign(std::size_t{full} + 1, 0);
    for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
        unsigned best = std::numeric_limits<unsigned>::max();
        std::uint32_t rest = s;
        while (rest) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const std::uint32_t prefix = s & ~(1U << v);
            const unsigned cost = f[prefix] + static_cast<unsigned>(std::popcount(out[v] & prefix));
            best = std::min(best, cost);
        }
        f[s] = static_cast<std::uint16_t>(best);
    }
}

std::vector<std::uint32_t> full_rows(const Digraph& d) {
    std::vector<std::uint32_t> rows(d.order());
    for (int v = 0; v < d.order(); ++v) rows[v] = static_cast<std::uint32_t>(d.out(v));
    return rows;
}

unsigned step_cost(const std::vector<std::uint32_t>& out, std::uint32_t prefix, int v) {
    return static_cast<unsigned>(std::popcount(out[v] & prefix));
}

}  // namespace

FasResult tau_exact(const Digraph& d, int cap) {
    check_cap(d, std::min(cap, kFasVertexCap), "tau_exact");
    const int n = d.order();
    const auto out = full_rows(d);
    Table f;
    fill_table(out, f);

    std::vector<int> perm(n);
    std::uint32_t s = static_cast<std::uint32_t>(f.size() - 1);
    for (int pos = n - 1; pos >= 0; --pos) {
        // last vertex of prefix s: smallest id attaining the optimum
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1U)) continue;
            const std::uint32_t prefix = s & ~(1U << v);
            if (f[prefix] + step_cost(out, prefix, v) == f[s]) {
                perm[pos] = v;
                s = prefix;
                break;
            }
        }
    }
    FasResult result;
    result.tau = f.back();
    result.ordering = VertexOrdering(std::move(perm));
    result.fas = backward_arcs(d, result.ordering);
    return result;
}

int detail::tau_of_rows(const std::vector<std::uint32_t>& out) {
    thread_local Table f;
    if (out.size() < 2) return 0;
    fill_table(out, f);
    return f.back();
}

int tau_value(const Digraph& d, int cap) {
    int total = 0;
    for (VertexSet comp : strong_components(d)) {
        const int k = popcount(comp);
        if (k < 2) continue;
        if (k > cap) throw GraphError("tau_value: strong component exceeds cap " + std::to_string(cap));
        std::vector<int> local(d.order(), -1);
        const auto members = to_vector(comp);
        for (int i = 0; i < k; ++i) local[members[i]] = i;
        std::vector<std::uint32_t> out(k, 0);
        for (int i = 0; i < k; ++i) {
            for_each_vertex(d.out(members[i]) & comp, [&](int w) { out[i] |= 1U << local[w]; });
        }
        total += detail::tau_of_rows(out);
    }
    return total;
}

std::vector<ArcSet> enumerate_min_fas(const Digraph& d, std::size_t limit, int cap) {
    check_cap(d, std::min(cap, kFasVertexCap), "enumerate_min_fas");
    const int n = d.order();
    const auto out = full_rows(d);
    Table f;
    fill_table(out, f);

    std::set<ArcSet> found;
    std::set<std::pair<std::uint32_t, ArcSet>> visited;
    ArcSet partial;
    // Peel the last vertex of each prefix; the arcs it sends into the prefix are backward.
    std::function<void(std::uint32_t)> walk = [&](std::uint32_t s) {
        if (found.size() >= limit) return;
        if (s == 0) {
            found.insert(partial);
            return;
        }
        if (!visited.emplace(s, partial).second) return;
        for (int v = 0; v < n && found.size() < limit; ++v) {
            if (!((s >> v) & 1U)) continue;
            const std::uint32_t prefix = s & ~(1U << v);
            if (f[prefix] + step_cost(out, prefix, v) != f[s]) continue;
            std::vector<Arc> added;
            for_each_vertex(static_cast<VertexSet>(out[v] & prefix), [&](int w) { added.push_back({v, w}); });
            for (const Arc& a : added) partial.insert(a);
            walk(prefix);
            for (const Arc& a : added) partial.erase(a);
        }
    };
    walk(static_cast<std::uint32_t>(f.size() - 1));
    return {found.begin(), found.end()};
}

int mindeg_lower_bound(const Digraph& d) {
    const int delta = d.min_out_degree();
    return delta * (delta + 1) / 2;
}

IsaakCheck isaak_hypothesis(const Digraph& d, const ArcSet& fas) {
    for (const Arc& a : fas) {
        if (a.tail < 0 || a.head < 0 || a.tail >= d.order() || a.head >= d.order() || !d.has_arc(a.tail, a.head)) {
            throw GraphError("arc (" + to_string(a) + ") is not an arc of the digraph");
        }
    }
    IsaakCheck check;
    check.minimum = static_cast<int>(fas.size()) == tau_value(d) && is_acyclic(d.without(fas)).has_value();
    if (fas.empty()) {
        check.acyclic = true;
        check.path = std::vector<int>{};
        return check;
    }
    const auto sub = arc_induced_subgraph(d, fas);
    check.acyclic = is_acyclic(sub.graph).has_value();
    if (auto path = has_hamiltonian_path(sub.graph)) {
        for (int& v : *path) v = sub.original[v];
        check.path = std::move(path);
    }
    return check;
}

bool isaak_hypothesis_holds(const Digraph& d, const ArcSet& fas) { return isaak_hypothesis(d, fas).holds(); }

}  // namespace arcfas

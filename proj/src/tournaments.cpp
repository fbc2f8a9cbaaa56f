#include "arcfas/tournaments.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "arcfas/fas.hpp"
#include "arcfas/packing.hpp"

namespace arcfas {

std::string to_hex(const CanonicalCode& c) {
    std::ostringstream os;
    const int width = std::max(1, (c.order * (c.order - 1) / 2 + 3) / 4);
    os << std::hex;
    os.width(width);
    os.fill('0');
    os << c.bits;
    return os.str();
}

std::uint64_t tournament_bits(const Digraph& t) {
    std::uint64_t bits = 0;
    for (int i = 0; i < t.order(); ++i) {
        for (int j = i + 1; j < t.order(); ++j) bits = (bits << 1) | (t.has_arc(i, j) ? 1U : 0U);
    }
    return bits;
}

Digraph tournament_from_bits(int n, std::uint64_t bits) {
    std::vector<std::pair<int, int>> arcs;
    int shift = n * (n - 1) / 2;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            --shift;
            if ((bits >> shift) & 1U) {
                arcs.emplace_back(i, j);
            } else {
                arcs.emplace_back(j, i);
            }
        }
    }
    return Digraph::from_arcs(n, arcs);
}

namespace {

void check_tournament(const Digraph& t) {
    if (!t.is_tournament()) throw GraphError("expected a tournament");
    if (t.order() > kCanonicalCap) {
        throw GraphError("canonical form capped at " + std::to_string(kCanonicalCap) + " vertices");
    }
}

// Code of t with position i holding vertex order[i].
std::uint64_t bits_under(const Digraph& t, const std::vector<int>& order) {
    std::uint64_t bits = 0;
    const int n = t.order();
    for (int i = 0; i < n; ++i) {
        const VertexSet row = t.out(order[i]);
        for (int j = i + 1; j < n; ++j) bits = (bits << 1) | ((row >> order[j]) & 1U);
    }
    return bits;
}

}  // namespace

CanonicalCode canonical_code(const Digraph& t) {
    check_tournament(t);
    std::vector<int> order(t.order());
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, bits_under(t, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return {t.order(), best};
}

std::uint64_t aut_group_size(const Digraph& t) {
    check_tournament(t);
    const std::uint64_t own = tournament_bits(t);
    std::vector<int> order(t.order());
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t count = 0;
    do {
        if (bits_under(t, order) == own) ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

namespace {

std::vector<TournamentClass> to_classes(int n, const std::set<std::uint64_t>& codes) {
    std::vector<TournamentClass> classes;
    classes.reserve(codes.size());
    for (std::uint64_t c : codes) classes.push_back({{n, c}, tournament_from_bits(n, c)});
    return classes;
}

void check_order(int n, int cap) {
    if (n < 1 || n > cap) {
        throw GraphError("tournament order " + std::to_string(n) + " outside 1.." + std::to_string(cap));
    }
}

std::vector<TournamentClass> extend_classes(int n) {
    if (n == 1) return to_classes(1, {0});
    std::set<std::uint64_t> codes;
    for (const TournamentClass& parent : enumerate_tournaments(n - 1)) {
        const auto base = parent.graph.arcs();
        for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
            std::vector<std::pair<int, int>> arcs;
            arcs.reserve(base.size() + n - 1);
            for (const Arc& a : base) arcs.emplace_back(a.tail, a.head);
            for (int i = 0; i < n - 1; ++i) {
                if ((mask >> i) & 1U) {
                    arcs.emplace_back(i, n - 1);
                } else {
                    arcs.emplace_back(n - 1, i);
                }
            }
            codes.insert(canonical_code(Digraph::from_arcs(n, arcs)).bits);
        }
    }
    return to_classes(n, codes);
}

}  // namespace

std::vector<TournamentClass> enumerate_tournaments(int n) {
    check_order(n, kEnumerationCap);
    static std::mutex mutex;
    static std::map<int, std::vector<TournamentClass>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    auto classes = extend_classes(n);
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(classes)).first->second;
}

std::vector<TournamentClass> enumerate_tournaments_fullscan(int n) {
    check_order(n, 5);
    std::set<std::uint64_t> codes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t raw = 0; raw < (std::uint64_t{1} << pairs); ++raw) {
        codes.insert(canonical_code(tournament_from_bits(n, raw)).bits);
    }
    return to_classes(n, codes);
}

SweepReport verify_nu_eq_tau_upto(int n) {
    check_order(n, 6);
    SweepReport report;
    report.classes.assign(n + 1, 0);
    for (int k = 1; k <= n; ++k) {
        const auto classes = enumerate_tournaments(k);
        report.classes[k] = static_cast<int>(classes.size());
        for (const TournamentClass& c : classes) {
            ++report.checked;
            const SolveReport nu = nu_exact(c.graph);
            if (!nu.optimal || nu.value != tau_value(c.graph)) report.violations.push_back(c.code);
        }
    }
    return report;
}

bool has_second_neighborhood_vertex(const Digraph& d) {
    for (int v = 0; v < d.order(); ++v) {
        if (d.out_degree(v) <= popcount(second_out_neighborhood(d, v))) return true;
    }
    return false;
}

std::vector<CanonicalCode> search_counterexamples(int n, const std::string& predicate) {
    std::function<bool(const Digraph&)> fails;
    if (predicate == "nu_lt_tau") {
        fails = [](const Digraph& t) {
            const SolveReport nu = nu_exact(t);
            return nu.optimal && nu.value < tau_value(t);
        };
    } else if (predicate == "florek_conjecture_fails") {
        fails = [](const Digraph& t) { return !triangle_conjecture_holds(t); };
    } else if (predicate == "seymour_fails") {
        fails = [](const Digraph& t) { return !has_second_neighborhood_vertex(t); };
    } else {
        throw GraphError("unknown predicate '" + predicate + "'");
    }
    std::vector<CanonicalCode> hits;
    for (const TournamentClass& c : enumerate_tournaments(n)) {
        if (fails(c.graph)) hits.push_back(c.code);
    }
    return hits;
}

}  // namespace arcfas

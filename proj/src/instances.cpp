#include "arcfas/instances.hpp"

#include <charconv>
#include <random>

namespace arcfas {

std::string vertex_name(int v) {
    if (v >= 0 && v < 26) return std::string(1, static_cast<char>('a' + v));
    return std::to_string(v);
}

Arc arc_from_names(const std::string& two_letters) {
    if (two_letters.size() != 2 || two_letters[0] < 'a' || two_letters[0] > 'z' || two_letters[1] < 'a' ||
        two_letters[1] > 'z') {
        throw GraphError("bad arc name '" + two_letters + "'");
    }
    return {two_letters[0] - 'a', two_letters[1] - 'a'};
}

ArcSet arcs_from_names(const std::vector<std::string>& names) {
    ArcSet arcs;
    for (const auto& s : names) arcs.insert(arc_from_names(s));
    return arcs;
}

Digraph tournament_with_backward_arcs(int n, const ArcSet& backward) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (backward.contains({j, i})) {
                arcs.emplace_back(j, i);
            } else {
                arcs.emplace_back(i, j);
            }
        }
    }
    for (const Arc& a : backward) {
        if (a.tail <= a.head || a.tail >= n) throw GraphError("arc (" + to_string(a) + ") is not backward");
    }
    return Digraph::from_arcs(n, arcs);
}

Digraph build_paper_T() {
    return tournament_with_backward_arcs(
        13, arcs_from_names({"ca", "ec", "ge", "ig", "ki", "mk", "ga", "ic", "ke", "mg", "ia", "me"}));
}

Digraph build_paper_Tprime() { return build_paper_T().reversed(arcs_from_names({"cm", "ck", "ak"})); }

Digraph build_paper_T7() { return tournament_with_backward_arcs(7, arcs_from_names({"ca", "ec", "gd", "fb", "fa"})); }

Digraph build_paper_T11() {
    ArcSet backward = arcs_from_names({"ca", "gd", "jh"});
    for (char x : {'h', 'i', 'j'}) {
        for (char y : {'a', 'b', 'c'}) backward.insert({x - 'a', y - 'a'});
    }
    for (char y : {'a', 'b', 'c', 'd', 'e'}) backward.insert({'k' - 'a', y - 'a'});
    return tournament_with_backward_arcs(11, backward);
}

CyclePacking build_family_C() {
    CyclePacking p;
    for (const char* t : {"abc", "cde", "efg", "ghi", "ijk", "klm", "adg", "cfi", "ehk", "gjm", "aei"}) {
        p.cycles.push_back({t[0] - 'a', t[1] - 'a', t[2] - 'a'});
    }
    return p;
}

VertexOrdering alpha_ordering() { return VertexOrdering::identity(13); }

Digraph transitive_tournament(int n) {
    return tournament_with_backward_arcs(n, {});
}

Digraph directed_cycle(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph::from_arcs(n, arcs);
}

namespace {

bool coin(std::mt19937_64& rng, double p) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return u < p;
}

}  // namespace

Digraph random_oriented(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool present = coin(rng, p);
            const bool forward = (rng() & 1U) != 0;
            if (!present) continue;
            if (forward) {
                arcs.emplace_back(i, j);
            } else {
                arcs.emplace_back(j, i);
            }
        }
    }
    return Digraph::from_arcs(n, arcs);
}

Digraph random_tournament(int n, std::uint64_t seed) { return random_oriented(n, 1.0, seed); }

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u != v && coin(rng, p)) arcs.emplace_back(u, v);
        }
    }
    return Digraph::from_arcs(n, arcs);
}

Digraph builtin(const std::string& name) {
    if (name == "paper-T") return build_paper_T();
    if (name == "paper-Tprime") return build_paper_Tprime();
    if (name == "paper-T7") return build_paper_T7();
    if (name == "paper-T11") return build_paper_T11();
    constexpr std::string_view prefix = "transitive-";
    if (name.starts_with(prefix)) {
        int n = 0;
        const char* first = name.data() + prefix.size();
        const char* last = name.data() + name.size();
        const auto [ptr, ec] = std::from_chars(first, last, n);
        if (ec == std::errc{} && ptr == last && first != last && n >= 1 && n <= kMaxVertices) {
            return transitive_tournament(n);
        }
    }
    throw GraphError("unknown builtin '" + name + "'");
}

bool is_builtin(const std::string& name) {
    try {
        builtin(name);
        return true;
    } catch (const GraphError&) {
        return false;
    }
}

std::vector<std::string> builtin_names() { return {"paper-T", "paper-Tprime", "paper-T7", "paper-T11", "transitive-N"}; }

}  // namespace arcfas

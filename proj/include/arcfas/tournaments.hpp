#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcfas/digraph.hpp"

namespace arcfas {

inline constexpr int kEnumerationCap = 7;
inline constexpr int kCanonicalCap = 8;

/// Upper-triangle adjacency bits (pair (i, j), i < j, in lexicographic order,
/// first pair most significant; bit set iff i -> j), minimized over all
/// relabelings. Equal codes iff isomorphic tournaments.
struct CanonicalCode {
    int order = 0;
    std::uint64_t bits = 0;

    auto operator<=>(const CanonicalCode&) const = default;
};

std::string to_hex(const CanonicalCode& c);

/// Raw upper-triangle code of t under its current labels.
std::uint64_t tournament_bits(const Digraph& t);
Digraph tournament_from_bits(int n, std::uint64_t bits);

/// Throws GraphError unless t is a tournament with at most kCanonicalCap vertices.
CanonicalCode canonical_code(const Digraph& t);

/// Number of relabelings mapping t onto itself.
std::uint64_t aut_group_size(const Digraph& t);

struct TournamentClass {
    CanonicalCode code;
    /// Representative labeled so that its raw code equals the canonical code.
    Digraph graph;
};

/// One representative per isomorphism class, ascending by canonical code.
/// Built by extending each class of order n - 1 with a new vertex.
std::vector<TournamentClass> enumerate_tournaments(int n);

/// Same classes found by canonicalizing all labeled tournaments (n <= 5).
std::vector<TournamentClass> enumerate_tournaments_fullscan(int n);

struct SweepReport {
    /// classes[k] = number of classes of order k (index 0 unused).
    std::vector<int> classes;
    int checked = 0;
    std::vector<CanonicalCode> violations;

    bool ok() const { return violations.empty(); }
};

/// nu == tau for every class of every order from 1 to n (n <= 6).
SweepReport verify_nu_eq_tau_upto(int n);

/// Predicates: "nu_lt_tau", "florek_conjecture_fails", "seymour_fails".
/// Throws GraphError for other names.
std::vector<CanonicalCode> search_counterexamples(int n, const std::string& predicate);

/// Some vertex v has |N+(v)| <= |N++(v)|.
bool has_second_neighborhood_vertex(const Digraph& d);

}  // namespace arcfas

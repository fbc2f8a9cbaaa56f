#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcfas/digraph.hpp"
#include "arcfas/packing.hpp"

namespace arcfas {

/// Vertex i of a built-in instance is displayed as the letter 'a' + i.
std::string vertex_name(int v);
/// Parses letter names such as "me" into arcs; throws GraphError on bad input.
Arc arc_from_names(const std::string& two_letters);
ArcSet arcs_from_names(const std::vector<std::string>& names);

/// Tournament on n vertices where every pair points forward (i -> j for i < j)
/// except the pairs listed in `backward`, given as later -> earlier arcs.
Digraph tournament_with_backward_arcs(int n, const ArcSet& backward);

/// The 13-vertex tournament T on a..m: backward arcs under alphabetical order
/// are ca, ec, ge, ig, ki, mk, ga, ic, ke, mg, ia, me.
Digraph build_paper_T();
/// T with the forward arcs cm, ck, ak reversed to mc, kc, ka.
Digraph build_paper_Tprime();
/// 7-vertex tournament on a..g with backward arcs ca, ec, gd, fb, fa.
Digraph build_paper_T7();
/// Eulerian 11-vertex tournament on a..k with backward arcs
/// {h,i,j} x {a,b,c}, k x {a,...,e}, ca, gd, jh.
Digraph build_paper_T11();
/// The eleven arc-disjoint 3-cycles of T.
CyclePacking build_family_C();

/// Alphabetical orderings used to draw the built-in tournaments.
VertexOrdering alpha_ordering();

Digraph transitive_tournament(int n);
Digraph directed_cycle(int n);

/// Each unordered pair receives an arc with probability p, direction uniform.
/// Deterministic in (n, p, seed) across platforms.
Digraph random_oriented(int n, double p, std::uint64_t seed);
Digraph random_tournament(int n, std::uint64_t seed);
/// Each ordered pair (u, v), u != v, is an arc independently with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);

/// Resolve "paper-T", "paper-Tprime", "paper-T7", "paper-T11" or "transitive-N".
/// Throws GraphError for unknown names.
Digraph builtin(const std::string& name);
bool is_builtin(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace arcfas

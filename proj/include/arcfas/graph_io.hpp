#pragma once

#include <iosfwd>
#include <string>

#include "arcfas/digraph.hpp"

namespace arcfas {

// Text format: first non-comment line "n m", then m lines "u v" with 0-based
// endpoints. Lines starting with '#' are comments.

Digraph read_graph(std::istream& in);
Digraph read_graph_file(const std::string& path);

/// Arcs are written in lexicographic order.
void write_graph(std::ostream& out, const Digraph& d);
std::string graph_to_text(const Digraph& d);

}  // namespace arcfas

#include "arcfas/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace arcfas {

namespace {

bool next_data_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

}  // namespace

Digraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!next_data_line(in, line, lineno)) throw GraphError("graph text: missing header line");
    long n = 0;
    long m = 0;
    {
        std::istringstream hdr(line);
        if (!(hdr >> n >> m) || m < 0) throw GraphError("graph text: bad header on line " + std::to_string(lineno));
    }
    if (n < 1 || n > kMaxVertices) throw GraphError("graph text: vertex count " + std::to_string(n) + " outside 1..64");
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        if (!next_data_line(in, line, lineno)) {
            throw GraphError("graph text: expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
        }
        std::istringstream row(line);
        long u = 0;
        long v = 0;
        std::string extra;
        if (!(row >> u >> v) || (row >> extra)) {
            throw GraphError("graph text: bad arc on line " + std::to_string(lineno));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("out-of-range endpoint (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
        arcs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(in, line, lineno)) throw GraphError("graph text: trailing data on line " + std::to_string(lineno));
    return Digraph::from_arcs(static_cast<int>(n), arcs);
}

Digraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open graph file " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Digraph& d) {
    const auto arcs = d.arcs();
    out << d.order() << ' ' << arcs.size() << '\n';
    for (const Arc& a : arcs) out << a.tail << ' ' << a.head << '\n';
}

std::string graph_to_text(const Digraph& d) {
    std::ostringstream os;
    write_graph(os, d);
    return os.str();
}

}  // namespace arcfas

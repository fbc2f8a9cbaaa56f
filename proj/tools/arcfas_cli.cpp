// Command-line front end: exact tau / nu solvers, through-vertex cycles,
// tournament enumeration and the built-in claim suite.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "arcfas/claims.hpp"
#include "arcfas/fas.hpp"
#include "arcfas/flow.hpp"
#include "arcfas/graph_io.hpp"
#include "arcfas/instances.hpp"
#include "arcfas/packing.hpp"
#include "arcfas/tournaments.hpp"

using namespace arcfas;

namespace {

Digraph load(const std::string& source) {
    if (is_builtin(source)) return builtin(source);
    return read_graph_file(source);
}

int parse_vertex(const Digraph& d, const std::string& text) {
    if (text.size() == 1 && text[0] >= 'a' && text[0] <= 'z') {
        const int v = text[0] - 'a';
        if (v < d.order()) return v;
    }
    std::size_t used = 0;
    int v = -1;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 0 || v >= d.order()) throw GraphError("bad vertex '" + text + "'");
    return v;
}

std::string cycle_line(const Cycle& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    return s;
}

void print_cycles(const CyclePacking& p) {
    for (const Cycle& c : p.cycles) std::cout << "cycle " << cycle_line(c) << '\n';
}

int run_tau(const std::string& source) {
    const Digraph d = load(source);
    const FasResult r = tau_exact(d);
    std::cout << "tau=" << r.tau << '\n';
    std::cout << "ordering " << cycle_line(r.ordering.perm()) << '\n';
    for (const Arc& a : r.fas) std::cout << to_string(a) << '\n';
    return 0;
}

int run_nu(const std::string& source, const Budget& budget) {
    const Digraph d = load(source);
    const SolveReport r = nu_exact(d, budget);
    std::cout << "nu=" << r.value << " optimal=" << (r.optimal ? "true" : "false") << '\n';
    std::cout << "nodes=" << r.nodes_explored << " secs=" << r.elapsed_seconds << '\n';
    print_cycles(r.certificate);
    return 0;
}

int run_cycles_through(const std::string& source, const std::string& vertex) {
    const Digraph d = load(source);
    const int v = parse_vertex(d, vertex);
    const ThroughVertex r = cycles_through(d, v);
    std::cout << "cycles=" << r.count << '\n';
    std::cout << "cut";
    for (const Arc& a : r.cut) std::cout << ' ' << a.tail << "->" << a.head;
    std::cout << '\n';
    print_cycles(r.cycles);
    if (d.is_oriented()) {
        if (auto p = theorem21_applies(d, v)) {
            std::cout << "bound applies: d=" << p->d << " a=" << (p->a ? std::to_string(*p->a) : "inf")
                      << " b=" << (p->b ? std::to_string(*p->b) : "inf") << '\n';
        }
    }
    return 0;
}

int run_tri_through(const std::string& source, const std::string& vertex) {
    const Digraph d = load(source);
    const int v = parse_vertex(d, vertex);
    const TrianglePacking r = max_triangles_through(d, v);
    std::cout << "triangles=" << r.count << " total=" << count_triangles_through(d, v)
              << " out_degree=" << d.out_degree(v) << '\n';
    print_cycles(r.triangles);
    return 0;
}

int run_enum(int n, const std::string& predicate) {
    std::vector<CanonicalCode> codes;
    if (predicate.empty()) {
        for (const auto& c : enumerate_tournaments(n)) codes.push_back(c.code);
    } else {
        codes = search_counterexamples(n, predicate);
    }
    for (const auto& c : codes) std::cout << to_hex(c) << '\n';
    std::cout << "# order=" << n << " classes=" << enumerate_tournaments(n).size();
    if (!predicate.empty()) std::cout << " " << predicate << "=" << codes.size();
    std::cout << '\n';
    return 0;
}

int run_random_check(const std::string& model, int n, int count, std::uint64_t seed) {
    int failures = 0;
    for (int i = 0; i < count; ++i) {
        const Digraph d = model == "tournament" ? random_tournament(n, seed + i) : random_oriented(n, 0.5, seed + i);
        std::string problems;
        const int tau = tau_value(d);
        if (tau < mindeg_lower_bound(d)) problems += " tau-below-mindeg-bound";
        const SolveReport nu = nu_exact(d, Budget::from_env());
        if (nu.value > tau) problems += " nu-above-tau";
        if (!verify_theorem21(d).ok()) problems += " through-vertex-bound";
        if (d.is_tournament()) {
            const int delta = d.min_out_degree();
            for (int v = 0; v < d.order(); ++v) {
                if (d.out_degree(v) == delta && count_triangles_through(d, v) < delta) {
                    problems += " landau";
                    break;
                }
            }
            if (!has_second_neighborhood_vertex(d)) problems += " second-neighborhood";
        }
        std::cout << "seed=" << seed + i << " tau=" << tau << " nu=" << nu.value
                  << (nu.optimal ? "" : "+") << (problems.empty() ? " ok" : problems) << '\n';
        if (!problems.empty()) ++failures;
    }
    std::cout << "# checked=" << count << " failures=" << failures << '\n';
    return failures == 0 ? 0 : 1;
}

int run_show(const std::string& source) {
    const Digraph d = load(source);
    if (is_builtin(source) && d.order() <= 26) {
        std::cout << "# " << source << ":";
        for (int v = 0; v < d.order(); ++v) std::cout << ' ' << v << '=' << vertex_name(v);
        std::cout << '\n';
    }
    write_graph(std::cout, d);
    return 0;
}

int run_verify() {
    const auto results = verify_paper();
    int failed = 0;
    double total = 0.0;
    for (const auto& r : results) {
        std::cout << format_claim(r) << '\n';
        if (r.status == ClaimStatus::Fail) ++failed;
        total += r.seconds;
    }
    std::cout << "# " << results.size() - failed << "/" << results.size() << " claims passed in " << total
              << " s\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact feedback arc sets and arc-disjoint cycle packings"};
    app.require_subcommand(1);

    std::string source;
    std::string vertex;
    Budget budget = Budget::from_env();

    app.add_subcommand("verify-paper", "Run the built-in claim suite");

    auto* tau = app.add_subcommand("tau", "Minimum feedback arc set");
    tau->add_option("graph", source, "Graph file or builtin")->required();

    auto* nu = app.add_subcommand("nu", "Maximum arc-disjoint cycle packing");
    nu->add_option("graph", source, "Graph file or builtin")->required();
    nu->add_option("--budget-nodes", budget.max_nodes, "Search node limit");
    nu->add_option("--budget-secs", budget.max_seconds, "Search time limit in seconds");

    auto* through = app.add_subcommand("cycles-through", "Arc-disjoint cycles through a vertex (max flow)");
    through->add_option("graph", source, "Graph file or builtin")->required();
    through->add_option("vertex", vertex, "Vertex id or letter")->required();

    auto* tri = app.add_subcommand("tri-through", "Arc-disjoint 3-cycles through a vertex (matching)");
    tri->add_option("graph", source, "Graph file or builtin")->required();
    tri->add_option("vertex", vertex, "Vertex id or letter")->required();

    int order = 0;
    std::string predicate;
    auto* enumerate = app.add_subcommand("enum", "Tournament isomorphism classes");
    enumerate->add_option("n", order, "Order (1..7)")->required();
    enumerate->add_option("--predicate", predicate, "nu_lt_tau | florek_conjecture_fails | seymour_fails");

    std::string model = "tournament";
    int n = 8;
    int count = 10;
    std::uint64_t seed = 1;
    auto* random = app.add_subcommand("random-check", "Property checks on random instances");
    random->add_option("--model", model)->check(CLI::IsMember({"tournament", "oriented"}));
    random->add_option("--n", n)->check(CLI::Range(1, kFasVertexCap));
    random->add_option("--count", count)->check(CLI::NonNegativeNumber);
    random->add_option("--seed", seed);

    auto* show = app.add_subcommand("show", "Print a graph in text format");
    show->add_option("graph", source, "Graph file or builtin")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("verify-paper")) return run_verify();
        if (*tau) return run_tau(source);
        if (*nu) return run_nu(source, budget);
        if (*through) return run_cycles_through(source, vertex);
        if (*tri) return run_tri_through(source, vertex);
        if (*enumerate) return run_enum(order, predicate);
        if (*random) return run_random_check(model, n, count, seed);
        if (*show) return run_show(source);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include "hochgraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace hochgraph {

namespace {

std::string format_weight(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

WeightedDigraph parse_weighted_edge_list(std::istream& in) {
    std::string line;
    std::int64_t line_no = 0;
    bool have_header = false;
    Vertex vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<double> weights_in_file_order;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;  // blank or comment-only line

        if (!have_header) {
            if (first != "vertices")
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected header 'vertices <n>'");
            if (!(fields >> vertex_count) || vertex_count < 0)
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex count");
            have_header = true;
            continue;
        }

        Vertex u, v;
        std::istringstream edge_fields(line);
        if (!(edge_fields >> u >> v))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v [w]'");
        double w = 1.0;
        std::string rest;
        if (edge_fields >> rest) {
            try {
                std::size_t used = 0;
                w = std::stod(rest, &used);
                if (used != rest.size()) throw std::invalid_argument(rest);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + rest +
                                 "'");
            }
            std::string extra;
            if (edge_fields >> extra)
                throw ParseError("line " + std::to_string(line_no) + ": trailing fields");
        }
        if (!seen.insert({u, v}).second)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge (" +
                             std::to_string(u) + ", " + std::to_string(v) + ")");
        edges.emplace_back(u, v);
        weights_in_file_order.push_back(w);
    }
    if (!have_header) throw ParseError("missing 'vertices <n>' header");

    Digraph g(vertex_count, edges);
    std::vector<double> weights(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k)
        weights[g.edge_index(edges[k].first, edges[k].second)] = weights_in_file_order[k];
    return WeightedDigraph(std::move(g), std::move(weights));
}

WeightedDigraph read_weighted_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_weighted_edge_list(in);
}

std::string serialize_weighted_edge_list(const WeightedDigraph& w) {
    std::ostringstream out;
    out << "vertices " << w.graph.vertex_count() << "\n";
    const auto& edges = w.graph.edges();
    for (std::size_t k = 0; k < edges.size(); ++k)
        out << edges[k].first << ' ' << edges[k].second << ' ' << format_weight(w.weights[k])
            << "\n";
    return out.str();
}

std::string serialize_edge_list(const Digraph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << "\n";
    return out.str();
}

namespace {

std::string render_simplex(const OrderedSimplex& s) {
    std::string out = "(";
    for (std::size_t k = 0; k < s.vertices.size(); ++k) {
        if (k) out += ' ';
        out += std::to_string(s.vertices[k]);
    }
    out += ')';
    return out;
}

}  // namespace

std::string serialize_connectivity(const ConnectivityDigraph& cd) {
    std::ostringstream out;
    out << "vertices " << cd.graph.vertex_count() << "\n";
    for (Vertex v = 0; v < cd.graph.vertex_count(); ++v)
        out << "# " << v << ' ' << render_simplex(cd.vertex_simplices[v]) << "\n";
    for (const auto& [u, v] : cd.graph.edges())
        out << render_simplex(cd.vertex_simplices[u]) << ' '
            << render_simplex(cd.vertex_simplices[v]) << "\n";
    return out.str();
}

std::string serialize_complex(const OrderedSimplicialComplex& complex) {
    std::ostringstream out;
    for (int d = 0; d <= complex.max_dim(); ++d)
        for (const auto& s : complex.simplices(d)) {
            out << d;
            for (Vertex v : s.vertices) out << ' ' << v;
            out << "\n";
        }
    return out.str();
}

}  // namespace hochgraph

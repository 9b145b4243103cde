#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "hochgraph/generators.hpp"
#include "hochgraph/io.hpp"
#include "hochgraph/poset_homology.hpp"

namespace hg = hochgraph;

namespace {

hg::ConnectivitySpec parse_conn_spec(const std::string& text) {
    auto split = [](const std::string& s, char delim) {
        std::vector<std::string> parts;
        std::string item;
        std::istringstream ss(s);
        while (std::getline(ss, item, delim)) parts.push_back(item);
        return parts;
    };
    if (text == "identity") return hg::ConnectivitySpec::identity();
    auto colon = text.find(':');
    if (colon == std::string::npos) throw hg::ParseError("bad connectivity spec '" + text + "'");
    std::string kind = text.substr(0, colon);
    auto params = split(text.substr(colon + 1), ',');
    try {
        if (kind == "npath" && params.size() == 1)
            return hg::ConnectivitySpec::npath(std::stoi(params[0]));
        if (kind == "npath-relaxed" && params.size() == 1)
            return hg::ConnectivitySpec::npath(std::stoi(params[0]), true);
        if (kind == "qdigraph" && params.size() == 4)
            return hg::ConnectivitySpec::qdigraph(std::stoi(params[0]), std::stoi(params[1]),
                                                  std::stoi(params[2]), std::stoi(params[3]));
        if (kind == "qgraph" && params.size() == 2)
            return hg::ConnectivitySpec::qgraph(std::stoi(params[0]), std::stoi(params[1]));
    } catch (const std::exception&) {
        throw hg::ParseError("bad connectivity parameters in '" + text + "'");
    }
    throw hg::ParseError("bad connectivity spec '" + text + "'");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw hg::Error("cannot write '" + path + "'");
    out << content;
}

// A vertex sequence witnessing one oriented cycle, for error messages.
std::vector<hg::Vertex> find_cycle(const hg::Digraph& g) {
    enum { White, Gray, Black };
    std::vector<int> color(g.vertex_count(), White);
    std::vector<hg::Vertex> parent(g.vertex_count(), -1);
    for (hg::Vertex root = 0; root < g.vertex_count(); ++root) {
        if (color[root] != White) continue;
        std::vector<std::pair<hg::Vertex, std::size_t>> stack{{root, 0}};
        color[root] = Gray;
        while (!stack.empty()) {
            auto& [v, child] = stack.back();
            const auto& nbrs = g.out_neighbors(v);
            if (child < nbrs.size()) {
                hg::Vertex w = nbrs[child++];
                if (color[w] == Gray) {
                    std::vector<hg::Vertex> cycle{w};
                    for (hg::Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
                    cycle.push_back(w);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    return cycle;
                }
                if (color[w] == White) {
                    color[w] = Gray;
                    parent[w] = v;
                    stack.emplace_back(w, 0);
                }
            } else {
                color[v] = Black;
                stack.pop_back();
            }
        }
    }
    return {};
}

std::string cycle_message(const hg::Digraph& g) {
    auto cycle = find_cycle(g);
    std::string msg = "NotAcyclic: cycle";
    for (hg::Vertex v : cycle) msg += " " + std::to_string(v);
    return msg;
}

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("HOCHGRAPH_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) return k;
    }
    return 1;
}

int run(int argc, char** argv) {
    CLI::App app{"persistent Hochschild homology of directed graphs"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a weighted edge-list file");
    std::string model, gen_out;
    std::int64_t gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = 0;
    gen->add_option("model", model, "er | necklace | cycle | linear")->required();
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", gen_p, "edge probability (er)");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "output path (default stdout)");

    // hh
    auto* hh = app.add_subcommand("hh", "Hochschild homology dimensions of an acyclic digraph");
    std::string hh_in, hh_mode = "per_component";
    std::int64_t hh_cycles_cap = 0;
    hh->add_option("input", hh_in, "edge-list file")->required();
    hh->add_option("--mode", hh_mode, "per_component | literal");
    hh->add_option("--cycles-cap", hh_cycles_cap, "also count simple cycles, up to this cap");

    // connectivity
    auto* conn_cmd = app.add_subcommand("connectivity", "write a connectivity digraph");
    std::string conn_in, conn_kind, conn_out, dump_complex_path;
    int conn_n = 1, conn_q = 0, conn_i = 0, conn_j = 1, conn_max_dim = -1;
    bool conn_relaxed = false;
    conn_cmd->add_option("input", conn_in)->required();
    conn_cmd->add_option("--kind", conn_kind, "npath | qdigraph | qgraph")->required();
    conn_cmd->add_option("--n", conn_n, "simplex dimension (npath)");
    conn_cmd->add_flag("--relaxed", conn_relaxed, "relax i < j to i <= j (npath)");
    conn_cmd->add_option("--q", conn_q);
    conn_cmd->add_option("--i", conn_i);
    conn_cmd->add_option("--j", conn_j);
    conn_cmd->add_option("--max-dim", conn_max_dim, "flag complex cap (default n+1 / q+2)");
    conn_cmd->add_option("--out", conn_out, "output path (default stdout)");
    conn_cmd->add_option("--dump-complex", dump_complex_path, "also dump the flag complex");

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "Hochschild characteristic curve");
    std::string pipe_in, pipe_conn = "identity", pipe_mode = "per_component", pipe_csv,
                pipe_svg;
    std::int64_t pipe_cycles_cap = 0;
    int pipe_threads = 0;
    pipe->add_option("input", pipe_in)->required();
    pipe->add_option("--conn", pipe_conn,
                     "identity | npath:n | npath-relaxed:n | qdigraph:q,i,j,maxdim | "
                     "qgraph:q,maxdim");
    pipe->add_option("--mode", pipe_mode, "per_component | literal");
    pipe->add_option("--cycles-cap", pipe_cycles_cap,
                     "count pre-condensation simple cycles, up to this cap");
    pipe->add_option("--csv", pipe_csv, "curve output path (default stdout)");
    pipe->add_option("--svg", pipe_svg, "optional SVG plot path");
    pipe->add_option("--threads", pipe_threads, "worker threads (env HOCHGRAPH_THREADS)");

    // diagram
    auto* diag = app.add_subcommand("diagram", "persistence diagram of an acyclic filtration");
    std::string diag_in, diag_conn = "identity", diag_csv;
    int diag_degree = 1;
    diag->add_option("input", diag_in)->required();
    diag->add_option("--conn", diag_conn);
    diag->add_option("--degree", diag_degree, "0 or 1")->check(CLI::Range(0, 1));
    diag->add_option("--csv", diag_csv, "output path (default stdout)");

    // bottleneck
    auto* bn = app.add_subcommand("bottleneck", "bottleneck distance of two diagram CSVs");
    std::string bn_a, bn_b;
    bn->add_option("first", bn_a)->required();
    bn->add_option("second", bn_b)->required();

    // qhomotopy
    auto* qh = app.add_subcommand("qhomotopy",
                                  "Betti numbers of the condensed q-digraph's order complex");
    std::string qh_in;
    int qh_q = 1, qh_i = 1, qh_j = 2, qh_max_dim = -1;
    qh->add_option("input", qh_in)->required();
    qh->add_option("--q", qh_q);
    qh->add_option("--i", qh_i);
    qh->add_option("--j", qh_j);
    qh->add_option("--max-dim", qh_max_dim, "flag complex cap (default q+2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    auto parse_mode = [](const std::string& text) {
        if (text == "per_component") return hg::HHMode::per_component;
        if (text == "literal") return hg::HHMode::literal;
        throw hg::ParseError("bad mode '" + text + "'");
    };

    if (gen->parsed()) {
        hg::WeightedDigraph w;
        if (model == "er") {
            w = hg::erdos_renyi_weighted(static_cast<hg::Vertex>(gen_n), gen_p, {gen_seed});
        } else if (model == "necklace") {
            w = hg::necklace_weighted(static_cast<hg::Vertex>(gen_n), {gen_seed});
        } else if (model == "cycle") {
            auto g = hg::cycle_digraph(static_cast<hg::Vertex>(gen_n));
            w = hg::WeightedDigraph(g, std::vector<double>(g.edge_count(), 1.0));
        } else if (model == "linear") {
            auto g = hg::linear_digraph(static_cast<hg::Vertex>(gen_n));
            w = hg::WeightedDigraph(g, std::vector<double>(g.edge_count(), 1.0));
        } else {
            throw hg::ParseError("unknown model '" + model + "'");
        }
        auto text = hg::serialize_weighted_edge_list(w);
        if (gen_out.empty())
            std::cout << text;
        else
            write_file(gen_out, text);
        return 0;
    }

    if (hh->parsed()) {
        auto w = hg::read_weighted_edge_list(hh_in);
        if (!hg::is_acyclic(w.graph)) {
            std::cerr << cycle_message(w.graph) << "\n";
            return 3;
        }
        auto summary = hg::hh_dimensions(w.graph, parse_mode(hh_mode));
        std::string cycles = "na";
        if (hh_cycles_cap > 0)
            cycles = std::to_string(hg::count_simple_cycles(w.graph, hh_cycles_cap));
        std::cout << "hh0=" << summary.dim_hh0 << " hh1=" << summary.dim_hh1
                  << " paths=" << summary.path_sum << " cycles=" << cycles
                  << " chi=" << summary.characteristic << "\n";
        return 0;
    }

    if (conn_cmd->parsed()) {
        auto w = hg::read_weighted_edge_list(conn_in);
        hg::ConnectivityDigraph cd;
        int dump_dim = 0;
        if (conn_kind == "npath") {
            cd = hg::n_path_digraph(w.graph, conn_n, conn_relaxed);
            dump_dim = conn_max_dim >= 0 ? conn_max_dim : conn_n + 1;
        } else if (conn_kind == "qdigraph") {
            int md = conn_max_dim >= 0 ? conn_max_dim : conn_q + 2;
            cd = hg::q_digraph(w.graph, conn_q, conn_i, conn_j, md);
            dump_dim = md;
        } else if (conn_kind == "qgraph") {
            int md = conn_max_dim >= 0 ? conn_max_dim : conn_q + 2;
            cd = hg::q_graph(w.graph, conn_q, md);
            dump_dim = md;
        } else {
            throw hg::ParseError("unknown kind '" + conn_kind + "'");
        }
        auto text = hg::serialize_connectivity(cd);
        if (conn_out.empty())
            std::cout << text;
        else
            write_file(conn_out, text);
        if (!dump_complex_path.empty())
            write_file(dump_complex_path,
                       hg::serialize_complex(hg::directed_flag_complex(w.graph, dump_dim)));
        return 0;
    }

    if (pipe->parsed()) {
        auto w = hg::read_weighted_edge_list(pipe_in);
        std::optional<std::int64_t> cap;
        if (pipe_cycles_cap > 0) cap = pipe_cycles_cap;
        auto curve = hg::characteristic_pipeline(w, parse_conn_spec(pipe_conn),
                                                 parse_mode(pipe_mode), cap,
                                                 thread_count(pipe_threads));
        if (pipe_csv.empty())
            std::cout << curve.to_csv();
        else
            write_file(pipe_csv, curve.to_csv());
        if (!pipe_svg.empty()) write_file(pipe_svg, hg::curve_svg(curve));
        return 0;
    }

    if (diag->parsed()) {
        auto w = hg::read_weighted_edge_list(diag_in);
        auto table = hg::persistent_betti(w, parse_conn_spec(diag_conn), diag_degree);
        auto diagram = hg::persistence_diagram(table);
        if (diag_csv.empty())
            std::cout << diagram.to_csv();
        else
            write_file(diag_csv, diagram.to_csv());
        return 0;
    }

    if (bn->parsed()) {
        auto parse_diagram = [](const std::string& path) {
            std::ifstream in(path);
            if (!in) throw hg::ParseError("cannot open '" + path + "'");
            hg::PersistenceDiagram d;
            std::string line;
            std::getline(in, line);  // header
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                std::replace(line.begin(), line.end(), ',', ' ');
                std::istringstream fields(line);
                std::string birth, death, mult;
                if (!(fields >> birth >> death >> mult))
                    throw hg::ParseError("bad diagram line '" + line + "'");
                hg::PersistencePoint pt;
                pt.birth = std::stod(birth);
                pt.death = death == "inf" ? std::numeric_limits<double>::infinity()
                                          : std::stod(death);
                pt.multiplicity = hg::BigInt(mult);
                d.points.push_back(pt);
            }
            return d;
        };
        double dist = hg::bottleneck_distance(parse_diagram(bn_a), parse_diagram(bn_b));
        char buf[64];
        if (dist == std::numeric_limits<double>::infinity())
            std::cout << "inf\n";
        else {
            std::snprintf(buf, sizeof(buf), "%.17g", dist);
            std::cout << buf << "\n";
        }
        return 0;
    }

    if (qh->parsed()) {
        auto w = hg::read_weighted_edge_list(qh_in);
        int md = qh_max_dim >= 0 ? qh_max_dim : qh_q + 2;
        auto cd = hg::q_digraph(w.graph, qh_q, qh_i, qh_j, md);
        auto [condensed, part] = hg::condensation(cd.graph);
        auto poset = hg::reachability_poset(condensed);

        // Longest strict chain bounds the order-complex dimension exactly.
        int n = poset.element_count();
        std::vector<int> depth(n, -1);
        std::function<int(int)> longest = [&](int x) {
            if (depth[x] >= 0) return depth[x];
            int best = 0;
            for (int y = 0; y < n; ++y)
                if (poset.less(x, y)) best = std::max(best, 1 + longest(y));
            return depth[x] = best;
        };
        int height = 0;
        for (int x = 0; x < n; ++x) height = std::max(height, longest(x));

        auto complex = hg::order_complex(poset, std::max(height, 1));
        auto betti = hg::betti_f2(complex, complex.top_dim());
        for (std::size_t k = 0; k < betti.size(); ++k) {
            if (k) std::cout << ' ';
            std::cout << "beta" << k << '=' << betti[k];
        }
        std::cout << "\n";
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hg::NotAcyclicAtStageError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const hg::NotAcyclicError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const hg::CycleCapExceededError& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

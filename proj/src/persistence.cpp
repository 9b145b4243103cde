#include "hochgraph/persistence.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace hochgraph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_real(double x) {
    if (x == -kInf) return "-inf";
    if (x == kInf) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

WeightedDigraph::WeightedDigraph(Digraph g, std::vector<double> w)
    : graph(std::move(g)), weights(std::move(w)) {
    if (static_cast<std::int64_t>(weights.size()) != graph.edge_count())
        throw Error("weight count does not match edge count");
    for (double x : weights)
        if (!std::isfinite(x)) throw Error("edge weights must be finite");
}

double WeightedDigraph::weight_of(Vertex u, Vertex v) const {
    auto idx = graph.edge_index(u, v);
    if (idx < 0) throw Error("no such edge");
    return weights[idx];
}

std::vector<double> critical_values(const WeightedDigraph& w) {
    std::vector<double> values = w.weights;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

Digraph sublevel_digraph(const WeightedDigraph& w, double t) {
    std::vector<Edge> kept;
    const auto& edges = w.graph.edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (w.weights[e] <= t) kept.push_back(edges[e]);
    return Digraph(w.graph.vertex_count(), kept, w.graph.allow_loops());
}

namespace {

CurveRow pipeline_row(const WeightedDigraph& w, const ConnectivitySpec& conn, HHMode mode,
                      std::optional<std::int64_t> cycles_cap, double t, bool initial) {
    CurveRow row;
    row.t = initial ? -kInf : t;
    row.initial = initial;
    Digraph stage = sublevel_digraph(w, row.t);
    ConnectivityDigraph cd = apply_connectivity(stage, conn);
    row.conn_vertices = cd.graph.vertex_count();
    row.conn_edges = cd.graph.edge_count();
    if (cycles_cap) row.cycles = count_simple_cycles(cd.graph, *cycles_cap);
    auto [condensed, part] = condensation(cd.graph);
    HHSummary s = hh_dimensions(condensed, mode);
    row.hh0 = s.dim_hh0;
    row.hh1 = s.dim_hh1;
    row.chi = s.characteristic;
    return row;
}

}  // namespace

PersistenceCurve characteristic_pipeline(const WeightedDigraph& w, const ConnectivitySpec& conn,
                                         HHMode mode, std::optional<std::int64_t> cycles_cap,
                                         int threads) {
    PersistenceCurve curve;
    curve.conn = conn;
    curve.mode = mode;
    auto critical = critical_values(w);
    const std::size_t row_count = critical.size() + 1;
    curve.rows.resize(row_count);

    auto compute = [&](std::size_t idx) {
        if (idx == 0)
            curve.rows[0] = pipeline_row(w, conn, mode, cycles_cap, 0.0, true);
        else
            curve.rows[idx] = pipeline_row(w, conn, mode, cycles_cap, critical[idx - 1], false);
    };

    if (threads <= 1 || row_count <= 1) {
        for (std::size_t idx = 0; idx < row_count; ++idx) compute(idx);
        return curve;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= row_count) return;
            try {
                compute(idx);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return curve;
}

std::string PersistenceCurve::to_csv() const {
    std::ostringstream out;
    out << "t,hh0,hh1,cycles,chi,conn_v,conn_e\n";
    for (const auto& row : rows) {
        out << format_real(row.t) << ',' << row.hh0 << ',' << row.hh1 << ','
            << (row.cycles ? std::to_string(*row.cycles) : std::string("na")) << ',' << row.chi
            << ',' << row.conn_vertices << ',' << row.conn_edges << '\n';
    }
    return out.str();
}

PersistentBettiTable persistent_betti(const WeightedDigraph& w, const ConnectivitySpec& conn,
                                      int degree) {
    if (degree != 0 && degree != 1) throw Error("persistent Betti degree must be 0 or 1");
    PersistentBettiTable table;
    table.degree = degree;
    table.critical = critical_values(w);
    const std::size_t m = table.critical.size();

    std::vector<ConnectivityDigraph> stages;
    stages.reserve(m);
    for (double t : table.critical) {
        stages.push_back(apply_connectivity(sublevel_digraph(w, t), conn));
        if (!is_acyclic(stages.back().graph)) throw NotAcyclicAtStageError(t);
    }

    table.p.assign(m, std::vector<BigInt>(m, 0));
    if (degree == 1) {
        // HH_1 maps induced by filtration inclusions are injective, so the
        // rank from stage i to stage j is the dimension at stage i.
        for (std::size_t i = 0; i < m; ++i) {
            BigInt dim = hh_dimensions(stages[i].graph, HHMode::per_component).dim_hh1;
            for (std::size_t j = i; j < m; ++j) table.p[i][j] = dim;
        }
        return table;
    }

    // Degree 0: number of weak components of stage j that contain at least
    // one simplex already present at stage i, via the tuple identification.
    std::vector<Partition> comps;
    std::vector<std::map<OrderedSimplex, std::int32_t>> block_of;
    comps.reserve(m);
    block_of.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        comps.push_back(weak_components(stages[j].graph));
        for (Vertex v = 0; v < stages[j].graph.vertex_count(); ++v)
            block_of[j].emplace(stages[j].vertex_simplices[v], comps[j].block_of[v]);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            std::vector<bool> hit(comps[j].block_count, false);
            std::int64_t count = 0;
            for (const auto& s : stages[i].vertex_simplices) {
                auto it = block_of[j].find(s);
                if (it == block_of[j].end())
                    throw Error("filtration stages are not nested");
                if (!hit[it->second]) {
                    hit[it->second] = true;
                    ++count;
                }
            }
            table.p[i][j] = count;
        }
    }
    return table;
}

bool satisfies_persistence_inequalities(const PersistentBettiTable& table) {
    const std::size_t m = table.critical.size();
    for (std::size_t u1 = 0; u1 < m; ++u1)
        for (std::size_t u2 = u1; u2 < m; ++u2)
            for (std::size_t v1 = u2; v1 < m; ++v1)
                for (std::size_t v2 = v1; v2 < m; ++v2) {
                    if (table.at(u1, v1) > table.at(u2, v1)) return false;
                    if (table.at(u2, v2) > table.at(u2, v1)) return false;
                    if (table.at(u2, v1) - table.at(u1, v1) <
                        table.at(u2, v2) - table.at(u1, v2))
                        return false;
                }
    return true;
}

PersistenceDiagram persistence_diagram(const PersistentBettiTable& table) {
    const std::size_t m = table.critical.size();
    PersistenceDiagram diagram;
    if (m == 0) return diagram;

    // p with the p(t_{-1}, .) = 0 boundary convention.
    auto p = [&](std::ptrdiff_t i, std::ptrdiff_t j) -> BigInt {
        if (i < 0) return 0;
        return table.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    };

    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
        for (std::ptrdiff_t j = i + 1; j < static_cast<std::ptrdiff_t>(m); ++j) {
            BigInt mu = p(i, j - 1) - p(i - 1, j - 1) - p(i, j) + p(i - 1, j);
            if (mu < 0)
                throw NegativeMultiplicityError("negative multiplicity at (" +
                                                format_real(table.critical[i]) + ", " +
                                                format_real(table.critical[j]) + ")");
            if (mu > 0)
                diagram.points.push_back({table.critical[i], table.critical[j], mu});
        }
        BigInt essential = p(i, m - 1) - p(i - 1, m - 1);
        if (essential < 0)
            throw NegativeMultiplicityError("negative essential multiplicity at " +
                                            format_real(table.critical[i]));
        if (essential > 0) diagram.points.push_back({table.critical[i], kInf, essential});
    }
    std::sort(diagram.points.begin(), diagram.points.end(), [](const auto& a, const auto& b) {
        return std::tie(a.birth, a.death) < std::tie(b.birth, b.death);
    });
    return diagram;
}

std::string PersistenceDiagram::to_csv() const {
    std::ostringstream out;
    out << "birth,death,multiplicity\n";
    for (const auto& pt : points)
        out << format_real(pt.birth) << ',' << format_real(pt.death) << ',' << pt.multiplicity
            << '\n';
    return out.str();
}

namespace {

constexpr std::int64_t kExpansionCap = 1 << 20;

struct SplitDiagram {
    std::vector<double> essential_births;
    std::vector<std::pair<double, double>> finite;
};

SplitDiagram split_diagram(const PersistenceDiagram& d) {
    SplitDiagram out;
    std::int64_t total = 0;
    for (const auto& pt : d.points) {
        if (pt.multiplicity > kExpansionCap || (total += pt.multiplicity.convert_to<std::int64_t>()) > kExpansionCap)
            throw Error("diagram too large for bottleneck matching");
        auto copies = pt.multiplicity.convert_to<std::int64_t>();
        for (std::int64_t k = 0; k < copies; ++k) {
            if (pt.death == kInf)
                out.essential_births.push_back(pt.birth);
            else
                out.finite.emplace_back(pt.birth, pt.death);
        }
    }
    std::sort(out.essential_births.begin(), out.essential_births.end());
    return out;
}

double diagonal_cost(const std::pair<double, double>& pt) { return (pt.second - pt.first) / 2; }

double linf(const std::pair<double, double>& a, const std::pair<double, double>& b) {
    return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
}

// Perfect matching in the augmented bipartite graph (points of A plus one
// diagonal proxy per point of B, against points of B plus proxies of A).
// Proxy-proxy pairs are free, so it suffices to match every A point and every
// B point either across (cost <= r) or to the diagonal (own cost <= r).
bool feasible(const std::vector<std::pair<double, double>>& A,
              const std::vector<std::pair<double, double>>& B, double r) {
    const std::size_t na = A.size(), nb = B.size();
    const std::size_t left = na + nb, right = nb + na;
    std::vector<std::vector<std::int32_t>> adj(left);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < nb; ++j)
            if (linf(A[i], B[j]) <= r) adj[i].push_back(static_cast<std::int32_t>(j));
        if (diagonal_cost(A[i]) <= r)
            for (std::size_t j = 0; j < na; ++j)
                adj[i].push_back(static_cast<std::int32_t>(nb + j));
    }
    for (std::size_t i = 0; i < nb; ++i) {
        if (diagonal_cost(B[i]) <= r) adj[na + i].push_back(static_cast<std::int32_t>(i));
        for (std::size_t j = 0; j < na; ++j)
            adj[na + i].push_back(static_cast<std::int32_t>(nb + j));
    }

    std::vector<std::int32_t> match_right(right, -1);
    std::vector<bool> visited(right);
    std::function<bool(std::int32_t)> augment = [&](std::int32_t u) {
        for (std::int32_t v : adj[u]) {
            if (visited[v]) continue;
            visited[v] = true;
            if (match_right[v] < 0 || augment(match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };
    std::size_t matched = 0;
    for (std::size_t u = 0; u < left; ++u) {
        std::fill(visited.begin(), visited.end(), false);
        if (augment(static_cast<std::int32_t>(u))) ++matched;
    }
    return matched == left;
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
    SplitDiagram da = split_diagram(a), db = split_diagram(b);

    if (da.essential_births.size() != db.essential_births.size()) return kInf;
    double essential_cost = 0;
    for (std::size_t k = 0; k < da.essential_births.size(); ++k)
        essential_cost =
            std::max(essential_cost, std::abs(da.essential_births[k] - db.essential_births[k]));

    std::vector<double> candidates{0.0, essential_cost};
    for (const auto& p : da.finite) candidates.push_back(diagonal_cost(p));
    for (const auto& p : db.finite) candidates.push_back(diagonal_cost(p));
    for (const auto& p : da.finite)
        for (const auto& q : db.finite) candidates.push_back(linf(p, q));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    candidates.erase(std::remove_if(candidates.begin(), candidates.end(),
                                    [&](double r) { return r < essential_cost; }),
                     candidates.end());

    // Smallest candidate radius admitting a perfect matching.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible(da.finite, db.finite, candidates[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo];
}

std::string curve_svg(const PersistenceCurve& curve) {
    const int width = 800, height = 500, margin = 60;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    std::vector<std::pair<double, double>> pts;
    for (const auto& row : curve.rows)
        if (!row.initial) pts.emplace_back(row.t, row.chi.convert_to<double>());

    if (!pts.empty()) {
        double xmin = pts.front().first, xmax = pts.back().first;
        double ymin = pts.front().second, ymax = pts.front().second;
        for (const auto& [x, y] : pts) {
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
        if (xmax == xmin) xmax = xmin + 1;
        if (ymax == ymin) ymax = ymin + 1;
        auto sx = [&](double x) {
            return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
        };
        auto sy = [&](double y) {
            return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
        };
        svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
            << width - margin << "\" y2=\"" << height - margin
            << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
            << "\" y2=\"" << height - margin << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        for (int k = 0; k <= 4; ++k) {
            double xv = xmin + (xmax - xmin) * k / 4;
            double yv = ymin + (ymax - ymin) * k / 4;
            svg << "<text x=\"" << sx(xv) << "\" y=\"" << height - margin + 18
                << "\" font-size=\"11\" text-anchor=\"middle\">" << format_real(xv)
                << "</text>\n";
            svg << "<text x=\"" << margin - 6 << "\" y=\"" << sy(yv) + 4
                << "\" font-size=\"11\" text-anchor=\"end\">" << format_real(yv) << "</text>\n";
        }
        svg << "<polyline fill=\"none\" stroke=\"#b22222\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) svg << sx(x) << ',' << sy(y) << ' ';
        svg << "\"/>\n";
    }
    svg << "<text x=\"" << width / 2 << "\" y=\"" << margin / 2
        << "\" font-size=\"14\" text-anchor=\"middle\">chi (" << curve.conn.label()
        << ")</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace hochgraph

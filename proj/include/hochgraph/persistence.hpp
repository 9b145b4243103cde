#pragma once

#include <optional>
#include <string>

#include "hochgraph/connectivity.hpp"
#include "hochgraph/hochschild.hpp"

namespace hochgraph {

// Digraph with one finite real weight per edge, defining the sublevel
// filtration: all vertices are present from the start, an edge enters at its
// weight (inclusively), ties enter simultaneously.
struct WeightedDigraph {
    Digraph graph;
    std::vector<double> weights;  // parallel to graph.edges()

    WeightedDigraph() = default;
    WeightedDigraph(Digraph g, std::vector<double> w);

    double weight_of(Vertex u, Vertex v) const;
};

// Strictly increasing distinct edge weights.
std::vector<double> critical_values(const WeightedDigraph& w);

// Same vertex set, edges with weight <= t.
Digraph sublevel_digraph(const WeightedDigraph& w, double t);

struct CurveRow {
    double t = 0;                  // filtration value; the initial stage uses -infinity
    bool initial = false;          // t = -inf row (empty edge set)
    std::int64_t hh0 = 0;          // weak components of the condensation
    BigInt hh1 = 0;                // degree-1 term of the condensation
    std::optional<std::int64_t> cycles;  // simple cycles of the pre-condensation stage
    BigInt chi = 0;
    std::int64_t conn_vertices = 0;
    std::int64_t conn_edges = 0;
};

struct PersistenceCurve {
    ConnectivitySpec conn;
    HHMode mode = HHMode::per_component;
    std::vector<CurveRow> rows;

    // CSV with header t,hh0,hh1,cycles,chi,conn_v,conn_e; reals at 17
    // significant digits, -inf for the initial stage, na for uncounted cycles.
    std::string to_csv() const;
};

// The condensation pipeline: per stage, build the sublevel digraph, apply the
// connectivity construction, (optionally) count its simple cycles, condense,
// and evaluate the Hochschild characteristic of the condensation. Rows are
// independent; any thread count produces identical output.
PersistenceCurve characteristic_pipeline(const WeightedDigraph& w, const ConnectivitySpec& conn,
                                         HHMode mode = HHMode::per_component,
                                         std::optional<std::int64_t> cycles_cap = std::nullopt,
                                         int threads = 1);

// Table of persistent Betti numbers p(t_i, t_j), i <= j, over the critical
// values. Requires every connectivity stage to be acyclic.
struct PersistentBettiTable {
    int degree = 0;
    std::vector<double> critical;
    std::vector<std::vector<BigInt>> p;  // p[i][j], valid for i <= j

    const BigInt& at(std::size_t i, std::size_t j) const { return p[i][j]; }
};

PersistentBettiTable persistent_betti(const WeightedDigraph& w, const ConnectivitySpec& conn,
                                      int degree);

// Both categorical-persistence-function inequalities over all index
// quadruples u1 <= u2 <= v1 <= v2.
bool satisfies_persistence_inequalities(const PersistentBettiTable& table);

struct PersistencePoint {
    double birth = 0;
    double death = 0;  // +infinity for essential points
    BigInt multiplicity = 1;
};

struct PersistenceDiagram {
    std::vector<PersistencePoint> points;  // sorted by (birth, death)

    // CSV birth,death,multiplicity with inf for essential deaths.
    std::string to_csv() const;
};

// Discrete multiplicity over consecutive critical values:
//   mu(t_i, t_j)  = p(t_i, t_{j-1}) - p(t_{i-1}, t_{j-1}) - p(t_i, t_j) + p(t_{i-1}, t_j)
//   mu(t_i, +inf) = p(t_i, t_m) - p(t_{i-1}, t_m)
// with p(t_{-1}, .) = 0. A negative multiplicity signals an upstream bug and
// throws NegativeMultiplicity.
PersistenceDiagram persistence_diagram(const PersistentBettiTable& table);

// Min-max matching distance; unmatched finite points pair with the diagonal
// at cost (death - birth) / 2, essential points match only each other.
// Returns +infinity when the essential-point counts differ.
double bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

// Self-contained SVG line plot of chi against t.
std::string curve_svg(const PersistenceCurve& curve);

}  // namespace hochgraph

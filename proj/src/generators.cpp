#include "hochgraph/generators.hpp"

namespace hochgraph {

WeightedDigraph erdos_renyi_weighted(Vertex n, double p, Seed seed) {
    if (n < 0) throw Error("vertex count must be >= 0");
    if (p < 0 || p > 1) throw Error("edge probability must be in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::vector<double> weights;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            if (rng.uniform01() < p) {
                edges.emplace_back(u, v);
                weights.push_back(rng.uniform01());
            }
        }
    }
    // Row-major emission is already edge-sorted, so weights stay aligned with
    // the digraph's canonical edge order.
    return WeightedDigraph(Digraph(n, edges), std::move(weights));
}

WeightedDigraph necklace_weighted(Vertex n, Seed seed) {
    if (n < 1) throw Error("necklace needs n >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::vector<double> draw_order_weights;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
        draw_order_weights.push_back(rng.uniform01());
        edges.emplace_back(i + 1, i);
        draw_order_weights.push_back(rng.uniform01());
    }
    Digraph g(n, edges);
    // Map draw-order weights onto the canonical edge order.
    std::vector<double> weights(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k)
        weights[g.edge_index(edges[k].first, edges[k].second)] = draw_order_weights[k];
    return WeightedDigraph(std::move(g), std::move(weights));
}

Digraph cycle_digraph(Vertex n) {
    if (n < 2) throw CycleTooSmallError("cycle digraph needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Digraph(n, edges);
}

Digraph linear_digraph(Vertex n) {
    if (n < 1) throw Error("linear digraph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Digraph(n, edges);
}

Digraph cone(const Digraph& g) {
    std::vector<Edge> edges = g.edges();
    const Vertex apex = g.vertex_count();
    for (Vertex v = 0; v < g.vertex_count(); ++v) edges.emplace_back(v, apex);
    return Digraph(g.vertex_count() + 1, edges, g.allow_loops());
}

}  // namespace hochgraph

#include "hochgraph/hochschild.hpp"

#include <algorithm>

namespace hochgraph {

namespace {

std::vector<Vertex> require_topological_order(const Digraph& g) {
    auto order = is_acyclic(g);
    if (!order) throw NotAcyclicError("digraph has an oriented cycle");
    return std::move(*order);
}

// Path counts from a single source to every vertex, along a topological order.
std::vector<BigInt> paths_from(const Digraph& g, Vertex source,
                               const std::vector<Vertex>& topo_order) {
    std::vector<BigInt> counts(g.vertex_count(), 0);
    counts[source] = 1;
    for (Vertex v : topo_order) {
        if (counts[v] == 0) continue;
        for (Vertex w : g.out_neighbors(v)) counts[w] += counts[v];
    }
    return counts;
}

}  // namespace

BigInt count_paths(const Digraph& g, Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw OutOfRangeVertexError("count_paths endpoint out of range");
    auto order = require_topological_order(g);
    return paths_from(g, u, order)[v];
}

BigInt path_sum(const Digraph& g) {
    auto order = require_topological_order(g);
    // One DP pass per distinct edge source.
    BigInt total = 0;
    std::vector<BigInt> counts;
    Vertex current_source = -1;
    for (const auto& [u, v] : g.edges()) {
        if (u != current_source) {
            counts = paths_from(g, u, order);
            current_source = u;
        }
        total += counts[v];
    }
    return total;
}

HHSummary hh_dimensions(const Digraph& g, HHMode mode) {
    HHSummary summary;
    Partition weak = weak_components(g);
    summary.dim_hh0 = weak.block_count;
    summary.path_sum = path_sum(g);
    const BigInt n = g.vertex_count();
    if (mode == HHMode::literal) {
        summary.dim_hh1 = 1 - n + summary.path_sum;
    } else {
        // Sum of (1 - n_c + path_sum_c) over weak components telescopes to
        // c - n + path_sum; each component term is >= 0.
        summary.dim_hh1 = BigInt(weak.block_count) - n + summary.path_sum;
    }
    summary.characteristic = BigInt(summary.dim_hh0) - summary.dim_hh1;
    return summary;
}

namespace {

// Johnson's blocked search restricted to vertices >= start, so every cycle is
// counted exactly once, rooted at its minimal vertex.
struct CycleCounter {
    const Digraph& g;
    std::int64_t cap;
    std::int64_t found = 0;
    std::vector<bool> blocked;
    std::vector<std::vector<Vertex>> block_list;
    std::vector<Vertex> path;
    Vertex start = 0;

    CycleCounter(const Digraph& graph, std::int64_t cap)
        : g(graph), cap(cap), blocked(graph.vertex_count(), false),
          block_list(graph.vertex_count()) {}

    void unblock(Vertex v) {
        blocked[v] = false;
        for (Vertex w : block_list[v])
            if (blocked[w]) unblock(w);
        block_list[v].clear();
    }

    bool circuit(Vertex v) {
        bool closed = false;
        blocked[v] = true;
        path.push_back(v);
        for (Vertex w : g.out_neighbors(v)) {
            if (w < start) continue;
            if (w == start) {
                if (++found > cap) throw CycleCapExceededError(cap);
                closed = true;
            } else if (!blocked[w]) {
                if (circuit(w)) closed = true;
            }
        }
        if (closed) {
            unblock(v);
        } else {
            for (Vertex w : g.out_neighbors(v)) {
                if (w < start) continue;
                auto& lst = block_list[w];
                if (std::find(lst.begin(), lst.end(), v) == lst.end()) lst.push_back(v);
            }
        }
        path.pop_back();
        return closed;
    }
};

}  // namespace

std::int64_t count_simple_cycles(const Digraph& g, std::int64_t cap) {
    if (cap <= 0) throw Error("cycle cap must be positive");
    // Loops are found as 1-cycles by the search itself (w == start on the
    // first frame), so no separate pass is needed.
    CycleCounter counter(g, cap);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        counter.start = s;
        std::fill(counter.blocked.begin(), counter.blocked.end(), false);
        for (auto& lst : counter.block_list) lst.clear();
        counter.circuit(s);
    }
    return counter.found;
}

BigInt hochschild_characteristic(const Digraph& g, HHMode mode) {
    if (!is_acyclic(g))
        throw NotAcyclicError(
            "Hochschild characteristic needs an acyclic digraph; condense the input first");
    return hh_dimensions(g, mode).characteristic;
}

}  // namespace hochgraph

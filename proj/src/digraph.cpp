#include "hochgraph/digraph.hpp"

#include <algorithm>
#include <cassert>

namespace hochgraph {

Digraph::Digraph(Vertex vertex_count, std::span<const Edge> edges, bool allow_loops,
                 std::vector<std::string> vertex_labels)
    : vertex_count_(vertex_count), allow_loops_(allow_loops), labels_(std::move(vertex_labels)) {
    edges_.assign(edges.begin(), edges.end());
    for (const auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
            throw OutOfRangeVertexError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") out of range for " + std::to_string(vertex_count_) +
                                        " vertices");
        if (u == v && !allow_loops_)
            throw SelfLoopForbiddenError("self-loop at vertex " + std::to_string(u));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    out_.resize(vertex_count_);
    in_.resize(vertex_count_);
    for (const auto& [u, v] : edges_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    // edges_ is sorted, so out-lists are already sorted; in-lists are not.
    for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= vertex_count_) return false;
    const auto& nbrs = out_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::int64_t Digraph::edge_index(Vertex u, Vertex v) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return it - edges_.begin();
}

Digraph digraph_new(Vertex vertex_count, std::span<const Edge> edges, bool allow_loops) {
    return Digraph(vertex_count, edges, allow_loops);
}

Partition weak_components(const Digraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::int32_t> parent(n);
    for (Vertex v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](std::int32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [u, v] : g.edges()) {
        auto ru = find(u), rv = find(v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    }
    Partition part;
    part.block_of.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        auto root = find(v);
        if (part.block_of[root] == -1) part.block_of[root] = part.block_count++;
        part.block_of[v] = part.block_of[root];
    }
    return part;
}

namespace {

// Iterative Tarjan; recursion is a stack-overflow hazard on the large
// connectivity digraphs the pipeline produces.
struct TarjanState {
    const Digraph& g;
    std::vector<std::int32_t> index, lowlink, component;
    std::vector<bool> on_stack;
    std::vector<Vertex> stack;
    std::int32_t next_index = 0;
    std::int32_t component_count = 0;

    explicit TarjanState(const Digraph& graph)
        : g(graph),
          index(graph.vertex_count(), -1),
          lowlink(graph.vertex_count(), 0),
          component(graph.vertex_count(), -1),
          on_stack(graph.vertex_count(), false) {}

    void run(Vertex root) {
        struct Frame {
            Vertex v;
            std::size_t next_child;
        };
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, next_child] = frames.back();
            const auto& nbrs = g.out_neighbors(v);
            if (next_child < nbrs.size()) {
                Vertex w = nbrs[next_child++];
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
            } else {
                if (lowlink[v] == index[v]) {
                    while (true) {
                        Vertex w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component[w] = component_count;
                        if (w == v) break;
                    }
                    ++component_count;
                }
                Vertex finished = v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] =
                        std::min(lowlink[frames.back().v], lowlink[finished]);
            }
        }
    }
};

}  // namespace

Partition strongly_connected_components(const Digraph& g) {
    const Vertex n = g.vertex_count();
    TarjanState tarjan(g);
    for (Vertex v = 0; v < n; ++v)
        if (tarjan.index[v] == -1) tarjan.run(v);

    // Renumber blocks by smallest member vertex for reproducible output.
    std::vector<Vertex> min_vertex(tarjan.component_count, n);
    for (Vertex v = 0; v < n; ++v)
        min_vertex[tarjan.component[v]] = std::min(min_vertex[tarjan.component[v]], v);
    std::vector<std::int32_t> order(tarjan.component_count);
    for (std::int32_t c = 0; c < tarjan.component_count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](std::int32_t a, std::int32_t b) { return min_vertex[a] < min_vertex[b]; });
    std::vector<std::int32_t> renumber(tarjan.component_count);
    for (std::int32_t rank = 0; rank < tarjan.component_count; ++rank)
        renumber[order[rank]] = rank;

    Partition part;
    part.block_count = tarjan.component_count;
    part.block_of.resize(n);
    for (Vertex v = 0; v < n; ++v) part.block_of[v] = renumber[tarjan.component[v]];
    return part;
}

std::pair<Digraph, Partition> condensation(const Digraph& g) {
    Partition scc = strongly_connected_components(g);
    std::vector<Edge> block_edges;
    for (const auto& [u, v] : g.edges()) {
        auto bu = scc.block_of[u], bv = scc.block_of[v];
        if (bu != bv) block_edges.emplace_back(bu, bv);
    }
    Digraph condensed(scc.block_count, block_edges, /*allow_loops=*/false);
    assert(is_acyclic(condensed).has_value());
    return {std::move(condensed), std::move(scc)};
}

std::optional<std::vector<Vertex>> is_acyclic(const Digraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::int64_t> indegree(n, 0);
    for (const auto& [u, v] : g.edges()) ++indegree[v];
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex v = 0; v < n; ++v)
        if (indegree[v] == 0) queue.push_back(v);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        order.push_back(v);
        for (Vertex w : g.out_neighbors(v))
            if (--indegree[w] == 0) queue.push_back(w);
    }
    if (static_cast<Vertex>(order.size()) != n) return std::nullopt;
    return order;
}

Digraph line_digraph(const Digraph& g) {
    const auto& edges = g.edges();
    const auto m = static_cast<std::int64_t>(edges.size());
    // For each vertex, the indices of edges with that source; edges() is
    // sorted, so these index ranges are contiguous and ascending.
    std::vector<std::vector<std::int32_t>> by_source(g.vertex_count());
    for (std::int64_t p = 0; p < m; ++p) by_source[edges[p].first].push_back(p);

    std::vector<Edge> line_edges;
    for (std::int64_t p = 0; p < m; ++p) {
        Vertex target = edges[p].second;
        for (std::int32_t q : by_source[target]) {
            if (p == static_cast<std::int64_t>(q) && !g.allow_loops()) continue;
            line_edges.emplace_back(static_cast<Vertex>(p), q);
        }
    }
    return Digraph(static_cast<Vertex>(m), line_edges, g.allow_loops());
}

}  // namespace hochgraph

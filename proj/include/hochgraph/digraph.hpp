#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hochgraph/errors.hpp"

namespace hochgraph {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple directed graph. Vertices are dense indices 0..n-1, the edge
// set is stored sorted and deduplicated, and both out- and in-adjacency are
// materialized. Values are immutable after construction.
class Digraph {
  public:
    Digraph() = default;

    Digraph(Vertex vertex_count, std::span<const Edge> edges, bool allow_loops = false,
            std::vector<std::string> vertex_labels = {});

    Digraph(Vertex vertex_count, std::initializer_list<Edge> edges, bool allow_loops = false)
        : Digraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()), allow_loops) {}

    Vertex vertex_count() const { return vertex_count_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    bool allow_loops() const { return allow_loops_; }

    // Canonically sorted edge list; the position of an edge in this list is
    // its edge index, used e.g. as the vertex numbering of the line digraph.
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_[v]; }
    const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_[v]; }
    std::int64_t out_degree(Vertex v) const { return static_cast<std::int64_t>(out_[v].size()); }
    std::int64_t in_degree(Vertex v) const { return static_cast<std::int64_t>(in_[v].size()); }

    bool has_edge(Vertex u, Vertex v) const;

    // Index of (u, v) in edges(), or -1.
    std::int64_t edge_index(Vertex u, Vertex v) const;

    const std::vector<std::string>& vertex_labels() const { return labels_; }

    bool operator==(const Digraph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
    }

  private:
    Vertex vertex_count_ = 0;
    bool allow_loops_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::string> labels_;
};

// Partition of the vertex set into contiguously numbered blocks.
struct Partition {
    std::vector<std::int32_t> block_of;
    std::int32_t block_count = 0;
};

Digraph digraph_new(Vertex vertex_count, std::span<const Edge> edges, bool allow_loops = false);

// Blocks are the connected components of the underlying undirected graph.
Partition weak_components(const Digraph& g);

// Maximal strongly connected vertex sets, Tarjan's algorithm (iterative).
// Blocks are numbered by their smallest contained vertex, ascending.
Partition strongly_connected_components(const Digraph& g);

// Quotient by strongly connected components. Edge (X, Y) exists iff some
// (x, y) with x in X, y in Y and X != Y; the result is always acyclic.
std::pair<Digraph, Partition> condensation(const Digraph& g);

// Topological order if g has no oriented cycle (loops count), else nullopt.
std::optional<std::vector<Vertex>> is_acyclic(const Digraph& g);

// Digraph on the edges of g with (p, q) whenever target(e_p) = source(e_q).
Digraph line_digraph(const Digraph& g);

}  // namespace hochgraph

#pragma once

#include <vector>

#include "hochgraph/digraph.hpp"

namespace hochgraph {

// Ordered simplex: a tuple of distinct vertices forming an ordered clique of
// the source digraph ((v_i, v_j) is an edge for every i < j).
struct OrderedSimplex {
    std::vector<Vertex> vertices;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    auto operator<=>(const OrderedSimplex&) const = default;
};

bool is_ordered_clique(const Digraph& g, const OrderedSimplex& s);

// Standard face map d_i: removes the i-th vertex. Requires 0 <= i <= dim(s)
// and dim(s) >= 1.
OrderedSimplex face(const OrderedSimplex& s, int i);

// Extended face map: removes the vertex at position min(i, dim(s)).
OrderedSimplex extended_face(const OrderedSimplex& s, int i);

// All ordered (k+1)-cliques of a digraph for k <= max_dim, sorted
// lexicographically per dimension. Dimension 0 is the vertex set, dimension 1
// the edge set; the complex is closed under face maps by construction.
class OrderedSimplicialComplex {
  public:
    OrderedSimplicialComplex(int max_dim) : by_dim_(max_dim + 1) {}

    int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

    const std::vector<OrderedSimplex>& simplices(int dim) const { return by_dim_[dim]; }

    std::int64_t count(int dim) const {
        return dim >= 0 && dim <= max_dim() ? static_cast<std::int64_t>(by_dim_[dim].size()) : 0;
    }

    // Index into simplices(dim) (lists are lex-sorted), or -1 when absent.
    std::int64_t index_of(const OrderedSimplex& s) const;

    bool contains(const OrderedSimplex& s) const { return index_of(s) >= 0; }

  private:
    friend OrderedSimplicialComplex directed_flag_complex(const Digraph& g, int max_dim);
    std::vector<std::vector<OrderedSimplex>> by_dim_;
};

// Enumerates the directed flag complex of a loop-free digraph up to max_dim
// by depth-first extension of ordered cliques over sorted out-neighborhood
// intersections. Deterministic, output lex-sorted per dimension.
OrderedSimplicialComplex directed_flag_complex(const Digraph& g, int max_dim);

}  // namespace hochgraph

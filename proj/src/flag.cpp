#include "hochgraph/flag.hpp"

#include <algorithm>

namespace hochgraph {

bool is_ordered_clique(const Digraph& g, const OrderedSimplex& s) {
    const auto& v = s.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!g.has_edge(v[i], v[j])) return false;
    return true;
}

OrderedSimplex face(const OrderedSimplex& s, int i) {
    if (s.dim() < 1) throw IndexOutOfRangeError("face of a 0-dimensional simplex");
    if (i < 0 || i > s.dim())
        throw IndexOutOfRangeError("face index " + std::to_string(i) +
                                   " out of range for dimension " + std::to_string(s.dim()));
    OrderedSimplex result;
    result.vertices.reserve(s.vertices.size() - 1);
    for (int k = 0; k <= s.dim(); ++k)
        if (k != i) result.vertices.push_back(s.vertices[k]);
    return result;
}

OrderedSimplex extended_face(const OrderedSimplex& s, int i) {
    if (s.dim() < 1) throw IndexOutOfRangeError("extended face of a 0-dimensional simplex");
    if (i < 0) throw IndexOutOfRangeError("negative extended face index");
    return face(s, std::min(i, s.dim()));
}

std::int64_t OrderedSimplicialComplex::index_of(const OrderedSimplex& s) const {
    int d = s.dim();
    if (d < 0 || d > max_dim()) return -1;
    const auto& list = by_dim_[d];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it == list.end() || *it != s) return -1;
    return it - list.begin();
}

namespace {

// Depth-first extension: a clique (v_0..v_k) grows by any w adjacent from all
// of its vertices, i.e. any member of the running out-neighborhood
// intersection. Ascending roots and sorted candidate lists make the emission
// order lexicographic per dimension.
void extend(const Digraph& g, std::vector<Vertex>& clique, const std::vector<Vertex>& candidates,
            int max_dim, std::vector<std::vector<OrderedSimplex>>& by_dim) {
    if (static_cast<int>(clique.size()) - 1 >= max_dim) return;
    for (Vertex w : candidates) {
        clique.push_back(w);
        by_dim[clique.size() - 1].push_back(OrderedSimplex{clique});
        std::vector<Vertex> narrowed;
        const auto& next = g.out_neighbors(w);
        std::set_intersection(candidates.begin(), candidates.end(), next.begin(), next.end(),
                              std::back_inserter(narrowed));
        extend(g, clique, narrowed, max_dim, by_dim);
        clique.pop_back();
    }
}

}  // namespace

OrderedSimplicialComplex directed_flag_complex(const Digraph& g, int max_dim) {
    if (max_dim < 0) throw NegativeDimensionError("max_dim must be >= 0");
    if (g.allow_loops())
        for (const auto& [u, v] : g.edges())
            if (u == v) throw LoopsPresentError("flag complex requires a loop-free digraph");

    OrderedSimplicialComplex complex(max_dim);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<Vertex> clique{v};
        complex.by_dim_[0].push_back(OrderedSimplex{clique});
        if (max_dim >= 1) extend(g, clique, g.out_neighbors(v), max_dim, complex.by_dim_);
    }
    return complex;
}

}  // namespace hochgraph

#include "hochgraph/connectivity.hpp"

#include <map>

namespace hochgraph {

std::string ConnectivitySpec::label() const {
    switch (kind) {
        case ConnKind::n_path:
            return n == 0 ? "identity" : "npath:" + std::to_string(n);
        case ConnKind::n_path_relaxed:
            return "npath-relaxed:" + std::to_string(n);
        case ConnKind::q_digraph:
            return "qdigraph:" + std::to_string(q) + "," + std::to_string(i) + "," +
                   std::to_string(j) + "," + std::to_string(max_dim);
        case ConnKind::q_graph:
            return "qgraph:" + std::to_string(q) + "," + std::to_string(max_dim);
    }
    return "?";
}

namespace {

// All faces of s with dimension exactly q, i.e. subsequences of length q+1.
std::vector<OrderedSimplex> q_faces(const OrderedSimplex& s, int q) {
    std::vector<OrderedSimplex> out;
    const int k = static_cast<int>(s.vertices.size());
    if (q + 1 > k || q < 0) return out;
    std::vector<int> pick(q + 1);
    for (int i = 0; i <= q; ++i) pick[i] = i;
    while (true) {
        OrderedSimplex f;
        f.vertices.reserve(q + 1);
        for (int idx : pick) f.vertices.push_back(s.vertices[idx]);
        out.push_back(std::move(f));
        int pos = q;
        while (pos >= 0 && pick[pos] == k - (q + 1 - pos)) --pos;
        if (pos < 0) break;
        ++pick[pos];
        for (int t = pos + 1; t <= q; ++t) pick[t] = pick[t - 1] + 1;
    }
    return out;
}

std::vector<OrderedSimplex> identity_simplices(const Digraph& g) {
    std::vector<OrderedSimplex> out;
    out.reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(OrderedSimplex{{v}});
    return out;
}

}  // namespace

ConnectivityDigraph n_path_digraph(const Digraph& g, int n, bool relaxed) {
    if (n < 0) throw NegativeDimensionError("n-path digraph needs n >= 0");
    ConnectivityDigraph result;
    result.spec = ConnectivitySpec::npath(n, relaxed);
    if (n == 0) {
        result.graph = g;
        result.vertex_simplices = identity_simplices(g);
        return result;
    }

    auto complex = directed_flag_complex(g, n);
    const auto& simplices = complex.simplices(n);
    const auto m = static_cast<Vertex>(simplices.size());

    // Bucket (face index, simplex) pairs by the shared (n-1)-face.
    std::map<OrderedSimplex, std::vector<std::pair<int, Vertex>>> buckets;
    for (Vertex p = 0; p < m; ++p)
        for (int i = 0; i <= n; ++i) buckets[face(simplices[p], i)].emplace_back(i, p);

    std::vector<Edge> edges;
    for (const auto& [alpha, entries] : buckets) {
        for (const auto& [i, p] : entries) {
            for (const auto& [j, q] : entries) {
                if (i < j)
                    edges.emplace_back(p, q);
                else if (relaxed && i == j && p != q)
                    edges.emplace_back(p, q);
            }
        }
    }
    result.graph = Digraph(m, edges);
    result.vertex_simplices = simplices;
    return result;
}

namespace {

// Shared scaffolding for the two q-constructions: the vertex list is all
// simplices with dimension in [q, max_dim], dimension-major then lex.
struct QVertices {
    std::vector<OrderedSimplex> simplices;
    std::map<OrderedSimplex, Vertex> index;
};

QVertices collect_q_vertices(const OrderedSimplicialComplex& complex, int q) {
    QVertices out;
    for (int d = q; d <= complex.max_dim(); ++d)
        for (const auto& s : complex.simplices(d)) {
            out.index.emplace(s, static_cast<Vertex>(out.simplices.size()));
            out.simplices.push_back(s);
        }
    return out;
}

}  // namespace

ConnectivityDigraph q_digraph(const Digraph& g, int q, int i, int j, int max_dim) {
    if (q < 0) throw NegativeDimensionError("q must be >= 0");
    if (i < 0 || j < 0) throw IndexOutOfRangeError("face-map indices must be >= 0");
    if (max_dim < q) throw NegativeDimensionError("max_dim must be >= q");

    auto complex = directed_flag_complex(g, max_dim);
    auto verts = collect_q_vertices(complex, q);
    const auto m = static_cast<Vertex>(verts.simplices.size());

    std::vector<Edge> edges;

    // Condition 1: proper face inclusions with both dimensions >= q.
    for (Vertex t = 0; t < m; ++t) {
        const auto& tau = verts.simplices[t];
        for (int d = q; d < tau.dim(); ++d)
            for (const auto& f : q_faces(tau, d)) edges.emplace_back(verts.index.at(f), t);
    }

    // Condition 2: a q-simplex alpha below both extended faces. Bucket the
    // sources by the q-faces of d^_i, the targets by the q-faces of d^_j,
    // then join per witness alpha.
    std::map<OrderedSimplex, std::vector<Vertex>> sources, targets;
    for (Vertex v = 0; v < m; ++v) {
        const auto& s = verts.simplices[v];
        if (s.dim() < 1) continue;
        for (auto& alpha : q_faces(extended_face(s, i), q)) sources[std::move(alpha)].push_back(v);
        for (auto& alpha : q_faces(extended_face(s, j), q)) targets[std::move(alpha)].push_back(v);
    }
    for (const auto& [alpha, from] : sources) {
        auto it = targets.find(alpha);
        if (it == targets.end()) continue;
        for (Vertex a : from)
            for (Vertex b : it->second)
                if (a != b) edges.emplace_back(a, b);
    }

    ConnectivityDigraph result;
    result.spec = ConnectivitySpec::qdigraph(q, i, j, max_dim);
    result.graph = Digraph(m, edges);
    result.vertex_simplices = std::move(verts.simplices);
    return result;
}

ConnectivityDigraph q_graph(const Digraph& g, int q, int max_dim) {
    if (q < 0) throw NegativeDimensionError("q must be >= 0");
    if (max_dim < q) throw NegativeDimensionError("max_dim must be >= q");

    auto complex = directed_flag_complex(g, max_dim);
    auto verts = collect_q_vertices(complex, q);
    const auto m = static_cast<Vertex>(verts.simplices.size());

    std::map<OrderedSimplex, std::vector<Vertex>> buckets;
    for (Vertex v = 0; v < m; ++v)
        for (auto& alpha : q_faces(verts.simplices[v], q)) buckets[std::move(alpha)].push_back(v);

    std::vector<Edge> edges;
    for (const auto& [alpha, members] : buckets)
        for (Vertex a : members)
            for (Vertex b : members)
                if (a != b) edges.emplace_back(a, b);

    ConnectivityDigraph result;
    result.spec = ConnectivitySpec::qgraph(q, max_dim);
    result.graph = Digraph(m, edges);
    result.vertex_simplices = std::move(verts.simplices);
    return result;
}

ConnectivityDigraph apply_connectivity(const Digraph& g, const ConnectivitySpec& spec) {
    switch (spec.kind) {
        case ConnKind::n_path:
            return n_path_digraph(g, spec.n, false);
        case ConnKind::n_path_relaxed:
            return n_path_digraph(g, spec.n, true);
        case ConnKind::q_digraph:
            return q_digraph(g, spec.q, spec.i, spec.j, spec.max_dim);
        case ConnKind::q_graph:
            return q_graph(g, spec.q, spec.max_dim);
    }
    throw Error("unknown connectivity kind");
}

}  // namespace hochgraph

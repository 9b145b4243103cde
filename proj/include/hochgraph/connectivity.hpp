#pragma once

#include <string>
#include <vector>

#include "hochgraph/flag.hpp"

namespace hochgraph {

enum class ConnKind { n_path, n_path_relaxed, q_digraph, q_graph };

// Descriptor of a connectivity-digraph construction. n_path with n = 0 is
// the identity construction (the digraph itself).
struct ConnectivitySpec {
    ConnKind kind = ConnKind::n_path;
    int n = 0;
    int q = 0;
    int i = 0;
    int j = 0;
    int max_dim = 0;

    static ConnectivitySpec identity() { return {ConnKind::n_path, 0}; }
    static ConnectivitySpec npath(int n, bool relaxed = false) {
        ConnectivitySpec s;
        s.kind = relaxed ? ConnKind::n_path_relaxed : ConnKind::n_path;
        s.n = n;
        return s;
    }
    static ConnectivitySpec qdigraph(int q, int i, int j, int max_dim) {
        return {ConnKind::q_digraph, 0, q, i, j, max_dim};
    }
    static ConnectivitySpec qgraph(int q, int max_dim) {
        return {ConnKind::q_graph, 0, q, 0, 0, max_dim};
    }

    std::string label() const;
};

// A digraph whose vertices are simplices of a flag complex, with the edge
// relation given by the construction in `spec`.
struct ConnectivityDigraph {
    Digraph graph;
    std::vector<OrderedSimplex> vertex_simplices;
    ConnectivitySpec spec;
};

// n-path digraph: vertices are the n-simplices of dFl(g); edge (sigma, tau)
// iff d_i(sigma) = alpha = d_j(tau) for some (n-1)-simplex alpha and i < j
// (i <= j with sigma != tau in relaxed mode). PG^(0) is g itself.
ConnectivityDigraph n_path_digraph(const Digraph& g, int n, bool relaxed = false);

// (q, d^_i, d^_j)-digraph on the simplices of dimension in [q, max_dim]:
// edge (sigma, tau), sigma != tau, iff sigma is a proper face of tau, or some
// q-simplex alpha is a common face of extended_face(sigma, i) and
// extended_face(tau, j). Reflexive loops are omitted.
ConnectivityDigraph q_digraph(const Digraph& g, int q, int i, int j, int max_dim);

// Undirected q-graph (encoded as reciprocal edge pairs): edge iff the two
// simplices share a q-face.
ConnectivityDigraph q_graph(const Digraph& g, int q, int max_dim);

ConnectivityDigraph apply_connectivity(const Digraph& g, const ConnectivitySpec& spec);

}  // namespace hochgraph

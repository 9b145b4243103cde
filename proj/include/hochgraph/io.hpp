#pragma once

#include <iosfwd>
#include <string>

#include "hochgraph/connectivity.hpp"
#include "hochgraph/persistence.hpp"

namespace hochgraph {

// Edge-list text format shared by the library and the CLI:
//   vertices <n>
//   u v [w]
// Whitespace-separated decimal fields, '#' starts a comment line, blank lines
// are ignored. Unweighted lines are promoted to weight 1.0; a duplicate
// (u, v) line is a parse error.
WeightedDigraph parse_weighted_edge_list(std::istream& in);
WeightedDigraph read_weighted_edge_list(const std::string& path);

// Serializes with weights printed at 17 significant digits, so that
// parse(serialize(x)) == x.
std::string serialize_weighted_edge_list(const WeightedDigraph& w);

// Unweighted variant (`u v` lines only).
std::string serialize_edge_list(const Digraph& g);

// Edge list whose vertices are simplex tuples rendered as "(v0 v1 ... vk)".
std::string serialize_connectivity(const ConnectivityDigraph& cd);

// Lines "dim v0 v1 ... vk", for --dump-complex.
std::string serialize_complex(const OrderedSimplicialComplex& complex);

}  // namespace hochgraph

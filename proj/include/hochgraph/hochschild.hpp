#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "hochgraph/digraph.hpp"

namespace hochgraph {

using BigInt = boost::multiprecision::cpp_int;

// Happel's theorem is stated for connected acyclic digraphs. per_component
// sums the degree-1 term over weak components (the path algebra of a disjoint
// union is the product of the component algebras); literal evaluates the
// single formula 1 - n + path_sum regardless of connectedness. The two agree
// on connected inputs.
enum class HHMode { per_component, literal };

struct HHSummary {
    std::int64_t dim_hh0 = 0;           // number of weak components
    BigInt dim_hh1 = 0;                 // degree-1 term in the chosen mode
    BigInt path_sum = 0;                // sum over edges e of #paths(s(e) -> t(e))
    std::optional<std::int64_t> simple_cycles;
    BigInt characteristic = 0;          // dim_hh0 - dim_hh1 (+ cycles when present)
};

// Number of directed paths from u to v, counting the trivial path when
// u == v. Dynamic programming along a topological order; throws NotAcyclic
// on cyclic input.
BigInt count_paths(const Digraph& g, Vertex u, Vertex v);

// Sum over all edges e of count_paths(s(e), t(e)).
BigInt path_sum(const Digraph& g);

// Degree-0 and degree-1 Hochschild dimensions of the path algebra of an
// acyclic digraph. The cycles field is left empty.
HHSummary hh_dimensions(const Digraph& g, HHMode mode = HHMode::per_component);

// Number of distinct simple oriented cycles (no repeated vertices except the
// endpoints; rotations identified, direction preserved; a reciprocal pair is
// one 2-cycle). Johnson-style enumeration, aborts past `cap`.
std::int64_t count_simple_cycles(const Digraph& g, std::int64_t cap);

// dim HH_0 - (degree-1 term) for acyclic digraphs; the simple-cycle term of
// the characteristic vanishes there. Throws NotAcyclic otherwise: cyclic
// inputs must be condensed first, as in the persistence pipeline.
BigInt hochschild_characteristic(const Digraph& g, HHMode mode = HHMode::per_component);

}  // namespace hochgraph

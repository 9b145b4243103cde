#pragma once

#include "hochgraph/persistence.hpp"

namespace hochgraph {

struct Seed {
    std::uint64_t value = 0;
};

// splitmix64. Self-contained so that generated test vectors are identical on
// every platform; uniform [0,1) takes the top 53 bits of a draw over 2^53.
class SplitMix64 {
  public:
    explicit SplitMix64(Seed seed) : state_(seed.value) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double uniform01() { return static_cast<double>(next() >> 11) / 9007199254740992.0; }

  private:
    std::uint64_t state_;
};

// Each ordered pair (u, v), u != v, present independently with probability p,
// visited in row-major order; present edges draw a uniform [0,1) weight
// immediately after their presence draw.
WeightedDigraph erdos_renyi_weighted(Vertex n, double p, Seed seed);

// Open reciprocal chain: (i, i+1) and (i+1, i) for 0 <= i < n-1, weights
// drawn in that order.
WeightedDigraph necklace_weighted(Vertex n, Seed seed);

// Coherently oriented cycle (i, (i+1) mod n); needs n >= 2 to stay loop-free.
Digraph cycle_digraph(Vertex n);

// Path 0 -> 1 -> ... -> n-1.
Digraph linear_digraph(Vertex n);

// g plus a new apex vertex with an edge (v, apex) from every original vertex.
Digraph cone(const Digraph& g);

}  // namespace hochgraph

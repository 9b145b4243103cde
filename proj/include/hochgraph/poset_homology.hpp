#pragma once

#include <cstdint>
#include <vector>

#include "hochgraph/digraph.hpp"

namespace hochgraph {

// Strict partial order as a reachability relation, rows bit-packed.
class Poset {
  public:
    Poset() = default;
    explicit Poset(std::int32_t element_count)
        : element_count_(element_count),
          words_per_row_((element_count + 63) / 64),
          bits_(static_cast<std::size_t>(element_count) * words_per_row_, 0) {}

    std::int32_t element_count() const { return element_count_; }

    bool less(std::int32_t x, std::int32_t y) const {
        return (bits_[static_cast<std::size_t>(x) * words_per_row_ + y / 64] >> (y % 64)) & 1u;
    }

    void set_less(std::int32_t x, std::int32_t y) {
        bits_[static_cast<std::size_t>(x) * words_per_row_ + y / 64] |= std::uint64_t(1)
                                                                        << (y % 64);
    }

    // Row of x as words, for closure propagation.
    std::uint64_t* row(std::int32_t x) { return bits_.data() + static_cast<std::size_t>(x) * words_per_row_; }
    const std::uint64_t* row(std::int32_t x) const {
        return bits_.data() + static_cast<std::size_t>(x) * words_per_row_;
    }
    std::int32_t words_per_row() const { return words_per_row_; }

    std::vector<std::pair<std::int32_t, std::int32_t>> pairs() const;

  private:
    std::int32_t element_count_ = 0;
    std::int32_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

// x < y iff a nonempty directed path x -> y exists. Requires acyclic input.
Poset reachability_poset(const Digraph& g);

// Chain complex over the 2-element field. simplices[k] lists the k-simplices
// (strict chains of poset elements); boundary[k][c] lists the row indices of
// the facets of the c-th k-simplex, i.e. the sparse column of the boundary
// map C_k -> C_{k-1}.
struct ChainComplexF2 {
    std::vector<std::vector<std::vector<std::int32_t>>> simplices;
    std::vector<std::vector<std::vector<std::int32_t>>> boundary;
    bool truncated = false;  // some max_dim-chains extend further

    int top_dim() const { return static_cast<int>(simplices.size()) - 1; }
    std::int64_t count(int dim) const {
        return dim >= 0 && dim <= top_dim() ? static_cast<std::int64_t>(simplices[dim].size())
                                            : 0;
    }
};

// Order complex (nerve) of a poset: k-simplices are the strict chains
// x_0 < ... < x_k, enumerated up to max_dim.
ChainComplexF2 order_complex(const Poset& p, int max_dim);

// Rank of a boundary matrix over F2, rows bit-packed.
std::int64_t rank_f2(std::int64_t rows, const std::vector<std::vector<std::int32_t>>& columns);

// Betti numbers beta_0..beta_max_deg over F2 by rank-nullity. Boundary maps
// beyond the built complex are the zero maps.
std::vector<std::int64_t> betti_f2(const ChainComplexF2& c, int max_deg);

}  // namespace hochgraph

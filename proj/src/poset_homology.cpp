#include "hochgraph/poset_homology.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace hochgraph {

std::vector<std::pair<std::int32_t, std::int32_t>> Poset::pairs() const {
    std::vector<std::pair<std::int32_t, std::int32_t>> out;
    for (std::int32_t x = 0; x < element_count_; ++x)
        for (std::int32_t y = 0; y < element_count_; ++y)
            if (less(x, y)) out.emplace_back(x, y);
    return out;
}

Poset reachability_poset(const Digraph& g) {
    auto order = is_acyclic(g);
    if (!order) throw NotAcyclicError("reachability poset requires an acyclic digraph");

    Poset p(g.vertex_count());
    // Reverse topological order: reach(x) = union over edges x->y of
    // {y} + reach(y).
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        Vertex x = *it;
        for (Vertex y : g.out_neighbors(x)) {
            p.set_less(x, y);
            const std::uint64_t* src = p.row(y);
            std::uint64_t* dst = p.row(x);
            for (std::int32_t w = 0; w < p.words_per_row(); ++w) dst[w] |= src[w];
        }
    }
    return p;
}

namespace {

void extend_chain(const Poset& p, std::vector<std::int32_t>& chain, int max_dim,
                  ChainComplexF2& out) {
    int dim = static_cast<int>(chain.size()) - 1;
    out.simplices[dim].push_back(chain);
    if (dim == max_dim) {
        if (!out.truncated) {
            std::int32_t last = chain.back();
            for (std::int32_t z = 0; z < p.element_count(); ++z)
                if (p.less(last, z)) {
                    out.truncated = true;
                    break;
                }
        }
        return;
    }
    for (std::int32_t z = 0; z < p.element_count(); ++z) {
        if (p.less(chain.back(), z)) {
            chain.push_back(z);
            extend_chain(p, chain, max_dim, out);
            chain.pop_back();
        }
    }
}

}  // namespace

ChainComplexF2 order_complex(const Poset& p, int max_dim) {
    if (max_dim < 0) throw NegativeDimensionError("order complex needs max_dim >= 0");
    ChainComplexF2 out;
    out.simplices.resize(max_dim + 1);
    out.boundary.resize(max_dim + 1);

    for (std::int32_t x = 0; x < p.element_count(); ++x) {
        std::vector<std::int32_t> chain{x};
        extend_chain(p, chain, max_dim, out);
    }

    // Drop trailing empty dimensions so top_dim reflects the actual complex.
    while (out.simplices.size() > 1 && out.simplices.back().empty()) {
        out.simplices.pop_back();
        out.boundary.pop_back();
    }

    // Boundary of a chain is the F2 sum of its facets (each facet of a chain
    // is again a chain). Chains are enumerated in lex order per dimension, so
    // facet lookup is a binary search.
    for (int k = 1; k <= out.top_dim(); ++k) {
        const auto& below = out.simplices[k - 1];
        out.boundary[k].reserve(out.simplices[k].size());
        for (const auto& chain : out.simplices[k]) {
            std::vector<std::int32_t> column;
            column.reserve(chain.size());
            std::vector<std::int32_t> facet(chain.size() - 1);
            for (std::size_t drop = 0; drop < chain.size(); ++drop) {
                facet.clear();
                for (std::size_t t = 0; t < chain.size(); ++t)
                    if (t != drop) facet.push_back(chain[t]);
                auto it = std::lower_bound(below.begin(), below.end(), facet);
                assert(it != below.end() && *it == facet);
                column.push_back(static_cast<std::int32_t>(it - below.begin()));
            }
            std::sort(column.begin(), column.end());
            out.boundary[k].push_back(std::move(column));
        }
    }
    return out;
}

std::int64_t rank_f2(std::int64_t rows, const std::vector<std::vector<std::int32_t>>& columns) {
    if (rows == 0 || columns.empty()) return 0;
    const std::int64_t words = (rows + 63) / 64;
    // One bit-packed row of length `rows` per matrix column; eliminate over
    // the column vectors.
    std::vector<std::vector<std::uint64_t>> packed;
    packed.reserve(columns.size());
    for (const auto& col : columns) {
        std::vector<std::uint64_t> bits(words, 0);
        for (std::int32_t r : col) bits[r / 64] ^= std::uint64_t(1) << (r % 64);
        packed.push_back(std::move(bits));
    }
    std::int64_t rank = 0;
    std::vector<std::int64_t> pivot_of;  // pivot row index per reduced vector
    std::vector<std::size_t> reduced;    // indices into packed
    for (std::size_t c = 0; c < packed.size(); ++c) {
        auto& vec = packed[c];
        std::int64_t pivot = -1;
        while (true) {
            pivot = -1;
            for (std::int64_t w = words - 1; w >= 0 && pivot < 0; --w)
                if (vec[w]) pivot = w * 64 + (63 - std::countl_zero(vec[w]));
            if (pivot < 0) break;
            bool collided = false;
            for (std::size_t k = 0; k < reduced.size(); ++k) {
                if (pivot_of[k] == pivot) {
                    const auto& other = packed[reduced[k]];
                    for (std::int64_t w = 0; w < words; ++w) vec[w] ^= other[w];
                    collided = true;
                    break;
                }
            }
            if (!collided) break;
        }
        if (pivot >= 0) {
            pivot_of.push_back(pivot);
            reduced.push_back(c);
            ++rank;
        }
    }
    return rank;
}

std::vector<std::int64_t> betti_f2(const ChainComplexF2& c, int max_deg) {
    std::vector<std::int64_t> betti(max_deg + 1, 0);
    std::vector<std::int64_t> rank(c.top_dim() + 2, 0);  // rank[k] = rank of d_k: C_k -> C_{k-1}
    for (int k = 1; k <= c.top_dim(); ++k) rank[k] = rank_f2(c.count(k - 1), c.boundary[k]);
    for (int k = 0; k <= max_deg; ++k) {
        std::int64_t dim_ck = c.count(k);
        std::int64_t d_out = k >= 1 && k <= c.top_dim() ? rank[k] : 0;
        std::int64_t d_in = k + 1 <= c.top_dim() ? rank[k + 1] : 0;
        betti[k] = dim_ck - d_out - d_in;
    }
    return betti;
}

}  // namespace hochgraph

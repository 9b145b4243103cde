#include <doctest.h>

#include "hochgraph/hochschild.hpp"
#include "hochgraph/generators.hpp"
#include "oracles.hpp"

using namespace hochgraph;

namespace {

Digraph square() { return Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}); }
Digraph square_with_diagonal() { return Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}}); }

}  // namespace

TEST_CASE("path counting") {
    CHECK(count_paths(square(), 0, 3) == 2);
    CHECK(count_paths(square(), 2, 2) == 1);  // the trivial path
    CHECK(count_paths(square_with_diagonal(), 0, 3) == 3);
    CHECK(count_paths(square(), 3, 0) == 0);
    CHECK_THROWS_AS(count_paths(cycle_digraph(3), 0, 1), NotAcyclicError);
}

TEST_CASE("path counting matches DFS enumeration") {
    SplitMix64 rng({2718});
    for (int trial = 0; trial < 150; ++trial) {
        auto g = oracles::random_dag(2 + trial % 11, 0.3, rng);
        Vertex u = static_cast<Vertex>(rng.next() % g.vertex_count());
        Vertex v = static_cast<Vertex>(rng.next() % g.vertex_count());
        CHECK(count_paths(g, u, v) == BigInt(oracles::count_paths_dfs(g, u, v)));
    }
}

TEST_CASE("path counts exceed 64 bits without overflow") {
    // complete DAG on 70 vertices: 2^68 paths from 0 to 69
    std::vector<Edge> edges;
    for (Vertex u = 0; u < 70; ++u)
        for (Vertex v = u + 1; v < 70; ++v) edges.emplace_back(u, v);
    Digraph dag(70, edges);
    BigInt expected = BigInt(1) << 68;
    CHECK(count_paths(dag, 0, 69) == expected);
}

TEST_CASE("Hochschild dimensions of the worked examples") {
    CHECK(hh_dimensions(square()).dim_hh0 == 1);
    CHECK(hh_dimensions(square()).dim_hh1 == 1);
    CHECK(hh_dimensions(square_with_diagonal()).dim_hh1 == 4);

    Digraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(hh_dimensions(triangle).dim_hh1 == 2);

    // 4-vertex target of the morphism figure
    Digraph target(4, {{0, 3}, {0, 1}, {1, 2}, {0, 2}, {3, 1}});
    CHECK(hh_dimensions(target).dim_hh1 == 5);

    Digraph g1(5, {{0, 1}, {0, 2}, {2, 4}, {1, 2}, {3, 1}, {3, 2}, {3, 4}});
    Digraph g2(5, {{0, 1}, {0, 2}, {2, 4}, {1, 2}, {1, 3}, {2, 3}, {4, 3}});
    CHECK(hh_dimensions(g1).dim_hh1 == 7);
    CHECK(hh_dimensions(g2).dim_hh1 == 7);
}

TEST_CASE("modes on disconnected inputs") {
    Digraph edgeless(6, {});
    auto per = hh_dimensions(edgeless, HHMode::per_component);
    CHECK(per.dim_hh0 == 6);
    CHECK(per.dim_hh1 == 0);
    auto lit = hh_dimensions(edgeless, HHMode::literal);
    CHECK(lit.dim_hh0 == 6);
    CHECK(lit.dim_hh1 == 1 - 6);

    // the modes agree on connected inputs
    SplitMix64 rng({555});
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracles::random_dag(2 + trial % 9, 0.6, rng);
        if (weak_components(g).block_count != 1) continue;
        CHECK(hh_dimensions(g, HHMode::per_component).dim_hh1 ==
              hh_dimensions(g, HHMode::literal).dim_hh1);
    }
}

TEST_CASE("per-component dimension is nonnegative and monotone under edge insertion") {
    SplitMix64 rng({9090});
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracles::random_dag(3 + trial % 9, 0.25, rng);
        auto before = hh_dimensions(g).dim_hh1;
        CHECK(before >= 0);

        // insert one edge that keeps the graph acyclic (low index -> high)
        Vertex n = g.vertex_count();
        Vertex u = static_cast<Vertex>(rng.next() % n);
        Vertex v = static_cast<Vertex>(rng.next() % n);
        if (u > v) std::swap(u, v);
        if (u == v) continue;
        auto edges = g.edges();
        edges.emplace_back(u, v);
        CHECK(hh_dimensions(Digraph(n, edges)).dim_hh1 >= before);
    }
}

TEST_CASE("simple cycle counting") {
    CHECK(count_simple_cycles(square(), 100) == 0);
    for (Vertex n = 2; n <= 6; ++n) CHECK(count_simple_cycles(cycle_digraph(n), 100) == 1);

    Digraph k3(3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}});
    CHECK(count_simple_cycles(k3, 100) == 5);  // three 2-cycles, two 3-cycles

    Digraph looped(2, {{0, 0}, {0, 1}}, /*allow_loops=*/true);
    CHECK(count_simple_cycles(looped, 100) == 1);

    CHECK_THROWS_AS(count_simple_cycles(k3, 4), CycleCapExceededError);
}

TEST_CASE("simple cycle counting matches brute force") {
    SplitMix64 rng({141421});
    for (int trial = 0; trial < 150; ++trial) {
        auto g = oracles::random_digraph(2 + trial % 6, 0.4, rng);
        CHECK(count_simple_cycles(g, 1 << 20) == oracles::simple_cycles_bruteforce(g));
    }
}

TEST_CASE("Hochschild characteristic") {
    CHECK(hochschild_characteristic(square()) == 0);
    CHECK(hochschild_characteristic(Digraph(20, {}), HHMode::per_component) == 20);

    auto [point, part] = condensation(cycle_digraph(7));
    CHECK(hochschild_characteristic(point) == 1);

    CHECK_THROWS_AS(hochschild_characteristic(cycle_digraph(3)), NotAcyclicError);

    // algebraic identity: chi = |V| - path_sum in per_component mode
    SplitMix64 rng({6174});
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracles::random_dag(2 + trial % 10, 0.4, rng);
        CHECK(hochschild_characteristic(g) == BigInt(g.vertex_count()) - path_sum(g));
    }
}

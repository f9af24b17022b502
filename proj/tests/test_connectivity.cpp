#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "nonsep/bruteforce.hpp"
#include "nonsep/connectivity.hpp"

using namespace nonsep;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// two triangles sharing vertex 2
Graph bowtie() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return g;
}

Graph random_graph(SplitMix64& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_below(100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("cut vertices on the named small graphs") {
    CHECK(cut_vertices(path(3)) == VertexSet{1});
    CHECK(cut_vertices(cycle(5)) == VertexSet{});
    CHECK(cut_vertices(bowtie()) == VertexSet{2});
    CHECK(cut_vertices(complete(6)) == VertexSet{});
    CHECK(cut_vertices(Graph(1)) == VertexSet{});
}

TEST_CASE("blocks on the named small graphs") {
    auto bt = brute::sorted_blocks(blocks(bowtie()));
    REQUIRE(bt.size() == 2);
    CHECK(bt[0] == VertexSet{0, 1, 2});
    CHECK(bt[1] == VertexSet{2, 3, 4});

    auto p4 = brute::sorted_blocks(blocks(path(4)));
    REQUIRE(p4.size() == 3);
    CHECK(p4[0] == VertexSet{0, 1});
    CHECK(p4[1] == VertexSet{1, 2});
    CHECK(p4[2] == VertexSet{2, 3});

    auto k5 = blocks(complete(5));
    REQUIRE(k5.size() == 1);
    CHECK(k5[0] == VertexSet{0, 1, 2, 3, 4});

    // isolated vertices are singleton blocks
    Graph g(3);
    g.add_edge(0, 1);
    auto bs = brute::sorted_blocks(blocks(g));
    REQUIRE(bs.size() == 2);
    CHECK(bs[0] == VertexSet{0, 1});
    CHECK(bs[1] == VertexSet{2});
}

TEST_CASE("is_biconnected conventions") {
    CHECK(is_biconnected(complete(3)));
    CHECK_FALSE(is_biconnected(path(3)));
    CHECK_FALSE(is_biconnected(complete(2)));  // order below 3
    CHECK_FALSE(is_biconnected(Graph(1)));
    CHECK(is_biconnected(cycle(6)));
    CHECK_FALSE(is_biconnected(bowtie()));
}

TEST_CASE("is_k_connected on the named graphs") {
    CHECK(is_k_connected(complete(5), 4));
    CHECK_FALSE(is_k_connected(complete(5), 5));  // n must exceed k
    CHECK_FALSE(is_k_connected(cycle(5), 3));
    CHECK(is_k_connected(cycle(5), 2));
    CHECK_THROWS_AS(is_k_connected(complete(3), 0), std::invalid_argument);

    Graph pt = petersen();
    CHECK(brute::is_k_connected(pt, 3));  // reference value
    CHECK(is_k_connected(pt, 3));
    CHECK_FALSE(is_k_connected(pt, 4));
}

TEST_CASE("blocks and cut vertices agree with brute force") {
    SplitMix64 rng(1337);
    for (int i = 0; i < 250; ++i) {
        int n = 1 + static_cast<int>(rng.next_below(10));
        Graph g = random_graph(rng, n, 10 + static_cast<int>(rng.next_below(80)));
        CHECK(cut_vertices(g) == brute::cut_vertices(g));
        CHECK(brute::sorted_blocks(blocks(g)) == brute::sorted_blocks(brute::blocks(g)));
    }
}

TEST_CASE("is_k_connected agrees with brute force") {
    SplitMix64 rng(4242);
    for (int i = 0; i < 150; ++i) {
        int n = 2 + static_cast<int>(rng.next_below(9));
        Graph g = random_graph(rng, n, 15 + static_cast<int>(rng.next_below(75)));
        for (int k = 1; k <= 4; ++k) CHECK(is_k_connected(g, k) == brute::is_k_connected(g, k));
        CHECK(is_biconnected(g) == is_k_connected(g, 2));
    }
}

TEST_CASE("block_structure of an intact cycle") {
    auto bs = block_structure(cycle(6), VertexSet{});
    CHECK(bs.block == VertexSet{0, 1, 2, 3, 4, 5});
    CHECK(bs.component_count() == 0);
    CHECK(bs.biconnected);
}

TEST_CASE("block_structure of the bowtie") {
    auto bs = block_structure(bowtie(), VertexSet{});
    CHECK(bs.block == VertexSet{0, 1, 2});  // tie broken towards vertex 0
    REQUIRE(bs.component_count() == 1);
    CHECK(bs.components[0] == VertexSet{3, 4});
    REQUIRE(bs.attach[0].has_value());
    CHECK(*bs.attach[0] == 2);
    CHECK_FALSE(bs.biconnected);
}

TEST_CASE("block_structure after removals") {
    // keep only a triangle of K5
    auto bs = block_structure(complete(5), VertexSet{3, 4});
    CHECK(bs.block == VertexSet{0, 1, 2});
    CHECK(bs.component_count() == 0);
    CHECK(bs.biconnected);

    // peeling a C6 down to two vertices is not 2-connected
    auto bs2 = block_structure(cycle(6), VertexSet{0, 1, 2, 3});
    CHECK(bs2.block.size() == 2);
    CHECK_FALSE(bs2.biconnected);

    CHECK_THROWS_AS(block_structure(cycle(4), VertexSet{0, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("block_structure orders components by size then min id") {
    // triangle with three pendant paths of different lengths
    Graph g = Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {1, 6}, {6, 7}, {2, 8}});
    auto bs = block_structure(g, VertexSet{9});
    CHECK(bs.block == VertexSet{0, 1, 2});
    REQUIRE(bs.component_count() == 3);
    CHECK(bs.components[0] == VertexSet{3, 4, 5});
    CHECK(bs.components[1] == VertexSet{6, 7});
    CHECK(bs.components[2] == VertexSet{8});
    CHECK(*bs.attach[0] == 0);
    CHECK(*bs.attach[1] == 1);
    CHECK(*bs.attach[2] == 2);
}

TEST_CASE("potential comparison") {
    Potential a{5, {3, 1}};
    Potential b{6, {}};
    Potential c{5, {3, 2}};
    Potential d{5, {3}};
    Potential e{5, {3, 1}};
    CHECK(compare_potential(a, b) == std::strong_ordering::less);  // block size dominates
    CHECK(compare_potential(a, c) == std::strong_ordering::less);  // lexicographic tail
    CHECK(compare_potential(d, a) == std::strong_ordering::less);  // missing entries are 0
    CHECK(compare_potential(a, e) == std::strong_ordering::equal);
    CHECK(compare_potential(b, a) == std::strong_ordering::greater);
}

TEST_CASE("potential order is total and consistent") {
    SplitMix64 rng(777);
    auto random_potential = [&rng] {
        Potential p;
        p.block_size = 1 + static_cast<int>(rng.next_below(4));
        int k = static_cast<int>(rng.next_below(4));
        for (int i = 0; i < k; ++i)
            p.component_sizes.push_back(1 + static_cast<int>(rng.next_below(3)));
        std::sort(p.component_sizes.rbegin(), p.component_sizes.rend());
        return p;
    };
    for (int i = 0; i < 200; ++i) {
        Potential x = random_potential(), y = random_potential(), z = random_potential();
        auto xy = compare_potential(x, y);
        CHECK(compare_potential(y, x) == (0 <=> xy));  // antisymmetry
        if (xy == std::strong_ordering::equal) {
            // equal exactly when equal after zero padding
            auto xs = x.component_sizes, ys = y.component_sizes;
            while (xs.size() < ys.size()) xs.push_back(0);
            while (ys.size() < xs.size()) ys.push_back(0);
            CHECK(x.block_size == y.block_size);
            CHECK(xs == ys);
        }
        if (xy != std::strong_ordering::greater &&
            compare_potential(y, z) != std::strong_ordering::greater)
            CHECK(compare_potential(x, z) != std::strong_ordering::greater);  // transitivity
    }
}

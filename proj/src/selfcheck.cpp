#include "nonsep/selfcheck.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "nonsep/bruteforce.hpp"
#include "nonsep/connectivity.hpp"
#include "nonsep/embed.hpp"
#include "nonsep/graph.hpp"

namespace nonsep {

namespace {

Graph random_graph(SplitMix64& rng, int n, int percent) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_below(100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
    return g;
}

bool check_roundtrip() {
    SplitMix64 rng(0xabcdef12345ULL);
    for (int i = 0; i < 300; ++i) {
        int n = static_cast<int>(rng.next_below(63));
        Graph g = random_graph(rng, n, 10 + static_cast<int>(rng.next_below(80)));
        if (parse_graph6(serialize_graph6(g)) != g) return false;
    }
    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph k3 = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    return serialize_graph6(k4) == "C~" && serialize_graph6(k3) == "Bw";
}

bool check_blocks() {
    SplitMix64 rng(0x51deca5eULL);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng.next_below(8));
        Graph g = random_graph(rng, n, 15 + static_cast<int>(rng.next_below(70)));
        if (cut_vertices(g) != brute::cut_vertices(g)) return false;
        if (brute::sorted_blocks(blocks(g)) != brute::sorted_blocks(brute::blocks(g)))
            return false;
    }
    return true;
}

bool check_k_connectivity() {
    SplitMix64 rng(0xc0a2b3c7ULL);
    for (int i = 0; i < 150; ++i) {
        int n = 2 + static_cast<int>(rng.next_below(7));
        Graph g = random_graph(rng, n, 20 + static_cast<int>(rng.next_below(70)));
        for (int k = 1; k <= 4; ++k)
            if (is_k_connected(g, k) != brute::is_k_connected(g, k)) return false;
        if (is_biconnected(g) != is_k_connected(g, 2)) return false;
    }
    return true;
}

bool check_double_star_embedding() {
    SplitMix64 rng(0xd57a1ULL);
    int tried = 0;
    while (tried < 200) {
        int n = 5 + static_cast<int>(rng.next_below(6));
        Graph g = random_graph(rng, n, 30 + static_cast<int>(rng.next_below(60)));
        if (g.edge_count() == 0) continue;
        int u = -1, v = -1;
        for (int x = 0; x < n && u == -1; ++x)
            if (g.degree(x) > 0) {
                u = x;
                v = g.neighbors(x).front();
            }
        std::vector<int> forb_ids;
        for (int x = 0; x < n; ++x)
            if (x != u && x != v && rng.next_below(100) < 20) forb_ids.push_back(x);
        VertexSet forbidden(std::move(forb_ids));
        int m = 4 + static_cast<int>(rng.next_below(5));
        for (int r = 1; 2 * r <= m - 2; ++r) {
            TreeSpec spec = TreeSpec::double_star(m, r, m - 2 - r);
            bool got = embed_double_star(g, u, v, spec, forbidden).has_value();
            bool want = brute::double_star_embeddable(g, u, v, spec.r, spec.s, forbidden);
            if (got != want) return false;
            if (got && !verify_tree(g, *embed_double_star(g, u, v, spec, forbidden), spec))
                return false;
        }
        ++tried;
    }
    return true;
}

bool report(std::ostream& out, const char* name, bool ok) {
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
    return ok;
}

}  // namespace

bool run_selfcheck(std::ostream& out) {
    bool all = true;
    all &= report(out, "graph6 round-trip", check_roundtrip());
    all &= report(out, "blocks and cut vertices vs brute force", check_blocks());
    all &= report(out, "k-connectivity vs brute force", check_k_connectivity());
    all &= report(out, "double-star embedding vs brute force", check_double_star_embedding());
    return all;
}

}  // namespace nonsep

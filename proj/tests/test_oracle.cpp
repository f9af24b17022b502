#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <string>

#include "doctest.h"
#include "nonsep/finder.hpp"
#include "nonsep/oracle.hpp"
#include "nonsep/scan.hpp"

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

long long count_stars(const Graph& g, int m) {
    StarEnumerator e(g, m);
    long long k = 0;
    while (e.next()) ++k;
    return k;
}

long long count_dstars(const Graph& g, const TreeSpec& spec) {
    DoubleStarEnumerator e(g, spec);
    long long k = 0;
    while (e.next()) ++k;
    return k;
}

long long choose(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("star enumeration counts on the named graphs") {
    CHECK(count_stars(complete(5), 3) == 30);  // 5 * C(4,2)
    CHECK(count_stars(cycle(5), 4) == 0);      // max degree 2
    CHECK(count_stars(complete(4), 4) == 4);   // 4 * C(3,3)
}

TEST_CASE("star enumeration is deterministic, complete and duplicate-free") {
    Graph g = complete(5);
    StarEnumerator e(g, 3);
    std::vector<StarTree> all;
    while (auto t = e.next()) all.push_back(*t);
    REQUIRE(all.size() == 30);
    CHECK(all.front().root == 0);
    CHECK(all.front().leaves == VertexSet{1, 2});
    CHECK(all.back().root == 4);
    std::set<std::pair<int, std::vector<int>>> seen;
    for (const auto& t : all) {
        CHECK(verify_tree(g, t, TreeSpec::star(3)));
        CHECK(seen.insert({t.root, t.leaves.ids()}).second);
    }
    // roots ascending, combinations lexicographic within a root
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i - 1].root == all[i].root)
            CHECK(all[i - 1].leaves.ids() < all[i].leaves.ids());
        else
            CHECK(all[i - 1].root < all[i].root);
    }
}

TEST_CASE("double-star enumeration counts on the named graphs") {
    // labeled 4-vertex paths of K5: C(5,4) * 4!/2
    CHECK(count_dstars(complete(5), TreeSpec::double_star(4, 1, 1)) == 60);

    // star graph: no edge has both endpoints with extra neighbors
    Graph k14(5);
    for (int leaf = 1; leaf < 5; ++leaf) k14.add_edge(0, leaf);
    CHECK(count_dstars(k14, TreeSpec::double_star(5, 1, 2)) == 0);
}

TEST_CASE("double-star enumeration emits each labeled subtree once") {
    Graph g = complete(5);
    for (auto spec : {TreeSpec::double_star(4, 1, 1), TreeSpec::double_star(5, 1, 2)}) {
        DoubleStarEnumerator e(g, spec);
        std::set<std::string> seen;
        long long total = 0;
        while (auto t = e.next()) {
            ++total;
            CHECK(verify_tree(g, *t, spec));
            CHECK(seen.insert(tree_json(TreeVariant{t->normalized()})).second);
        }
        CHECK(static_cast<long long>(seen.size()) == total);
    }
}

TEST_CASE("enumeration counts match closed forms on complete graphs") {
    for (int n = 5; n <= 8; ++n) {
        Graph g = complete(n);
        CHECK(count_stars(g, 4) == n * choose(n - 1, 3));
        // (1,2): per edge both orientations; leaves drawn from the other n-2
        long long edges = n * (n - 1) / 2;
        long long want12 =
            edges * (choose(n - 2, 1) * choose(n - 3, 2) + choose(n - 2, 2) * choose(n - 4, 1));
        CHECK(count_dstars(g, TreeSpec::double_star(5, 1, 2)) == want12);
        long long want22 = edges * choose(n - 2, 2) * choose(n - 4, 2);
        CHECK(count_dstars(g, TreeSpec::double_star(6, 2, 2)) == want22);
    }
}

TEST_CASE("enumeration counts match binomial counting on random graphs") {
    SplitMix64 rng(606);
    for (int i = 0; i < 60; ++i) {
        int n = 4 + static_cast<int>(rng.next_below(5));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_below(100) < 30 + rng.next_below(60)) g.add_edge(u, v);

        for (int m = 3; m <= 5; ++m) {
            long long want = 0;
            for (int root = 0; root < n; ++root) want += choose(g.degree(root), m - 1);
            CHECK(count_stars(g, m) == want);
        }

        // per edge and orientation, run over the subsets A of one side and
        // count the remaining choices on the other side directly
        for (auto spec : {TreeSpec::double_star(4, 1, 1), TreeSpec::double_star(5, 1, 2),
                          TreeSpec::double_star(6, 2, 2)}) {
            long long want = 0;
            for (int u = 0; u < n; ++u) {
                for (int v : g.neighbors(u)) {
                    if (v < u) continue;
                    std::vector<int> nu, nv;
                    for (int w : g.neighbors(u))
                        if (w != v) nu.push_back(w);
                    for (int w : g.neighbors(v))
                        if (w != u) nv.push_back(w);
                    auto oriented = [&](int r, int s) {
                        long long total = 0;
                        for (unsigned mask = 0; mask < (1u << nu.size()); ++mask) {
                            if (__builtin_popcount(mask) != r) continue;
                            int free_v = 0;
                            for (int w : nv) {
                                bool taken = false;
                                for (std::size_t b = 0; b < nu.size(); ++b)
                                    if ((mask >> b) & 1u) taken |= nu[b] == w;
                                free_v += !taken;
                            }
                            total += choose(free_v, s);
                        }
                        return total;
                    };
                    want += oriented(spec.r, spec.s);
                    if (spec.r != spec.s) want += oriented(spec.s, spec.r);
                }
            }
            CHECK(count_dstars(g, spec) == want);
        }
    }
}

TEST_CASE("oracle on K7: every star works") {
    auto rep = oracle_find(complete(7), TreeSpec::star(4), /*count_all=*/true);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.exists);
    CHECK(rep.n_candidates == 7 * choose(6, 3));
    CHECK(rep.n_valid == rep.n_candidates);
    REQUIRE(rep.witness.has_value());
    CHECK(std::get<StarTree>(*rep.witness).root == 0);
}

TEST_CASE("oracle on C6: hypotheses fail and nothing exists") {
    auto rep = oracle_find(cycle(6), TreeSpec::star(3), /*count_all=*/true);
    CHECK_FALSE(rep.hypotheses_ok);
    CHECK_FALSE(rep.exists);
    CHECK(rep.n_candidates == 6);  // one star per root
    CHECK(rep.n_valid == 0);
    CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("oracle early exit reports the first witness") {
    auto rep = oracle_find(complete(7), TreeSpec::star(4));
    CHECK(rep.exists);
    CHECK(rep.n_valid == 1);
    CHECK(rep.n_candidates == 1);  // the very first candidate already works
}

TEST_CASE("existence holds on every generated instance") {
    for (int i = 0; i < 20; ++i) {
        int n = 9 + (i % 4);
        Graph g = gen_hypothesis_graph(n, 6, 9000 + i);
        auto rep = oracle_find(g, TreeSpec::star(4));
        CHECK(rep.hypotheses_ok);
        CHECK(rep.exists);
    }
    for (int i = 0; i < 10; ++i) {
        Graph g = gen_hypothesis_graph(10 + (i % 3), 7, 9500 + i);
        auto rep = oracle_find(g, TreeSpec::double_star(5, 1, 2));
        CHECK(rep.hypotheses_ok);
        CHECK(rep.exists);
    }
}

TEST_CASE("finder output is always inside the oracle enumeration") {
    for (int i = 0; i < 6; ++i) {
        Graph g = gen_hypothesis_graph(11, 6, 7700 + i);
        auto res = find_nonseparating_star(g, 4);
        StarEnumerator e(g, 4);
        bool member = false;
        while (auto t = e.next()) {
            if (*t == res.tree) {
                auto sub = remove_vertices(g, t->vertices());
                member = is_biconnected(sub.graph);
                break;
            }
        }
        CHECK(member);
    }
}

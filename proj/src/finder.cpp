#include "nonsep/finder.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <sstream>

namespace nonsep {

const char* to_string(ClaimTag tag) {
    switch (tag) {
        case ClaimTag::C2: return "C2";
        case ClaimTag::C3: return "C3";
        case ClaimTag::C4: return "C4";
        case ClaimTag::C5: return "C5";
        case ClaimTag::C5a: return "C5a";
        case ClaimTag::C5b: return "C5b";
        case ClaimTag::C6i: return "C6i";
        case ClaimTag::C6ii: return "C6ii";
        case ClaimTag::C7a: return "C7a";
        case ClaimTag::C7b: return "C7b";
        case ClaimTag::C7c: return "C7c";
        case ClaimTag::ENDGAME: return "ENDGAME";
    }
    return "?";
}

namespace {

void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

MoveWitness witness(std::initializer_list<std::pair<std::string, int>> named,
                    std::vector<int> path = {}) {
    MoveWitness w;
    w.named.assign(named.begin(), named.end());
    w.path = std::move(path);
    return w;
}

// Read-only view of a search state with the membership masks the move
// generators keep asking for.
struct StateView {
    const Graph& g;
    const BlockStructure& bs;
    std::vector<char> in_block;
    std::vector<char> in_tree;
    std::vector<int> tree_verts;  // sorted

    StateView(const Graph& graph, const SearchState& st) : g(graph), bs(st.bs) {
        int n = g.vertex_count();
        in_block.assign(n, 0);
        for (int v : bs.block) in_block[v] = 1;
        VertexSet tv = tree_vertices(st.tree);
        tree_verts.assign(tv.begin(), tv.end());
        in_tree.assign(n, 0);
        for (int v : tree_verts) in_tree[v] = 1;
    }

    VertexSet block_neighbors(int v) const {
        std::vector<int> out;
        for (int w : g.neighbors(v))
            if (in_block[w]) out.push_back(w);
        return VertexSet(std::move(out));
    }

    VertexSet tree_block_attach() const {  // block vertices adjacent to the tree
        VertexSet out;
        for (int t : tree_verts)
            for (int w : g.neighbors(t))
                if (in_block[w]) out.insert(w);
        return out;
    }

    std::vector<std::pair<int, int>> edges_within(const VertexSet& s) const {
        std::vector<std::pair<int, int>> out;
        for (int x : s)
            for (int y : g.neighbors(x))
                if (x < y && s.contains(y)) out.emplace_back(x, y);
        return out;
    }

    // smallest tree endpoint of a tree-H1 edge, with its smallest H1 neighbor
    std::pair<int, int> tree_h1_edge() const {
        const VertexSet& h1 = bs.components.front();
        for (int t : tree_verts)
            for (int w : g.neighbors(t))
                if (h1.contains(w)) return {t, w};
        internal_check(false, "no edge between the tree and H1");
        return {-1, -1};
    }

    void check_components_attached() const {
        for (const auto& comp : bs.components) {
            bool attached = false;
            for (int x : comp) {
                for (int y : g.neighbors(x))
                    if (in_tree[y]) {
                        attached = true;
                        break;
                    }
                if (attached) break;
            }
            internal_check(attached, "component with no tree attachment in a 2-connected input");
        }
    }
};

// First (x, y) with x in a, y in b, x != y; ascending by x then y.
std::optional<std::pair<int, int>> distinct_pair(const VertexSet& a, const VertexSet& b) {
    for (int x : a)
        for (int y : b)
            if (x != y) return std::make_pair(x, y);
    return std::nullopt;
}

// Shortest z..w path whose interior stays inside `allowed`, never taking a
// direct z-w edge. Empty when no such path exists.
std::vector<int> ear_path(const Graph& g, int z, int w, const std::vector<char>& allowed) {
    int n = g.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(z);
    seen[z] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int x : g.neighbors(v)) {
            if (v == z && x == w) continue;
            if (!allowed[x] || seen[x]) continue;
            seen[x] = 1;
            parent[x] = v;
            if (x == w) {
                std::vector<int> path;
                for (int p = w; p != -1; p = parent[p]) path.push_back(p);
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(x);
        }
    }
    return {};
}

void common_state_checks(const StateView& sv) {
    internal_check(sv.bs.block.size() >= 3,
                   "maximum block of the remainder smaller than 3 under the degree hypothesis");
    internal_check(!sv.bs.components.empty(), "non-terminal state without components");
    sv.check_components_attached();
}

}  // namespace

std::vector<MoveCandidate> propose_star_moves(const Graph& g, const SearchState& st) {
    const StarTree* tp = std::get_if<StarTree>(&st.tree);
    if (!tp) throw std::invalid_argument("propose_star_moves: state does not hold a star");
    if (st.terminal()) throw std::invalid_argument("propose_star_moves: state is terminal");
    const StarTree& tree = *tp;
    const BlockStructure& bs = st.bs;
    StateView sv(g, st);
    common_state_checks(sv);

    int n = g.vertex_count();
    int m = tree.order();
    int l = bs.component_count();
    const VertexSet& h1 = bs.components.front();

    std::vector<MoveCandidate> out;
    auto push = [&](std::optional<StarTree> t, ClaimTag tag, MoveWitness w) {
        if (t) out.push_back({std::move(*t), tag, std::move(w)});
    };

    // C2: a second component exists. Re-root in the smallest one, protecting
    // the block and the tree endpoint t of a tree-H1 edge, so H1 grows by t.
    if (l >= 2) {
        auto [t, h] = sv.tree_h1_edge();
        VertexSet forb = bs.block.united({t});
        for (int x : bs.components.back())
            push(embed_star(g, x, m, forb), ClaimTag::C2, witness({{"t", t}, {"h", h}, {"x", x}}));
    }

    // C3: some tree vertex has two block neighbors. Re-root in H1 protecting
    // the block and that vertex; the block then absorbs it.
    for (int t : sv.tree_verts) {
        if (sv.block_neighbors(t).size() < 2) continue;
        VertexSet forb = bs.block.united({t});
        for (int x : h1)
            push(embed_star(g, x, m, forb), ClaimTag::C3, witness({{"t", t}, {"x", x}}));
    }

    // C4: a tree edge whose endpoints reach two distinct block vertices.
    for (int leaf : tree.leaves) {
        auto br = sv.block_neighbors(tree.root);
        auto bl = sv.block_neighbors(leaf);
        auto pr = distinct_pair(br, bl);
        if (!pr && br.united(bl).size() < 2) continue;
        int b1 = pr ? pr->first : -1, b2 = pr ? pr->second : -1;
        VertexSet forb = bs.block.united({tree.root, leaf});
        for (int x : h1)
            push(embed_star(g, x, m, forb), ClaimTag::C4,
                 witness({{"t1", tree.root}, {"t2", leaf}, {"b1", b1}, {"b2", b2}, {"x", x}}));
    }

    // C5: the tree reaches the block through two leaves with distinct block
    // neighbors w, w'.
    if (sv.tree_block_attach().size() >= 2) {
        std::vector<std::pair<int, VertexSet>> attached;
        for (int leaf : tree.leaves) {
            auto bn = sv.block_neighbors(leaf);
            if (!bn.empty()) attached.emplace_back(leaf, std::move(bn));
        }
        int va = -1, vb = -1, w = -1, wp = -1;
        for (std::size_t i = 0; i < attached.size() && va == -1; ++i)
            for (std::size_t j = i + 1; j < attached.size(); ++j)
                if (auto pr = distinct_pair(attached[i].second, attached[j].second)) {
                    va = attached[i].first;
                    vb = attached[j].first;
                    w = pr->first;
                    wp = pr->second;
                    break;
                }
        if (va != -1) {
            for (int v3 : tree.leaves) {
                if (v3 == va || v3 == vb) continue;
                auto bn3 = sv.block_neighbors(v3);
                int adj = (g.has_edge(v3, va) ? 1 : 0) + (g.has_edge(v3, vb) ? 1 : 0);
                if (bn3.empty() || adj <= 1) {
                    // C5a: v3 can take over as root away from the pair
                    push(embed_star(g, v3, m, bs.block.united({tree.root, va, vb})),
                         ClaimTag::C5a,
                         witness({{"u", tree.root}, {"v1", va}, {"v2", vb}, {"w", w}, {"w'", wp}, {"v3", v3}}));
                } else {
                    // C5b: v3 hangs on the block and on both leaves; re-root at
                    // the center, protecting v3 and one of the pair (both
                    // labelings tried).
                    push(embed_star(g, tree.root, m, bs.block.united({va, v3})),
                         ClaimTag::C5b,
                         witness({{"u", tree.root}, {"v1", va}, {"v2", vb}, {"v3", v3}}));
                    push(embed_star(g, tree.root, m, bs.block.united({vb, v3})),
                         ClaimTag::C5b,
                         witness({{"u", tree.root}, {"v1", vb}, {"v2", va}, {"v3", v3}}));
                }
            }
        }
    }

    // ENDGAME: single component, single attachment w of the tree and z of H1.
    // Protect the block plus a shortest ear z..w through H1 and the tree, and
    // re-root anywhere outside it.
    VertexSet tb = sv.tree_block_attach();
    if (l == 1 && tb.size() == 1) {
        int w = tb.min();
        internal_check(bs.attach[0].has_value(), "endgame: H1 not attached to the block");
        int z = *bs.attach[0];
        internal_check(z != w, "endgame: z == w would be a cut vertex of a 2-connected input");
        std::vector<char> allowed(n, 0);
        for (int v : h1) allowed[v] = 1;
        for (int v : sv.tree_verts) allowed[v] = 1;
        allowed[z] = allowed[w] = 1;
        std::vector<int> path = ear_path(g, z, w, allowed);
        internal_check(path.size() >= 3, "endgame: no ear path from z to w");
        VertexSet prot = bs.block;
        for (int p : path) prot.insert(p);
        VertexSet pathset(path);
        for (int x = 0; x < n; ++x) {
            if (prot.contains(x)) continue;
            int on_path = 0;
            for (int y : g.neighbors(x))
                if (pathset.contains(y)) ++on_path;
            internal_check(on_path <= 3, "endgame: vertex adjacent to >3 vertices of a shortest ear");
            push(embed_star(g, x, m, prot), ClaimTag::ENDGAME,
                 witness({{"z", z}, {"w", w}, {"x", x}}, path));
        }
    }

    return out;
}

namespace {

std::vector<std::pair<int, int>> dstar_tree_edges(const DoubleStarTree& t) {
    std::vector<std::pair<int, int>> out{{t.u, t.v}};
    for (int x : t.u_leaves) out.emplace_back(t.u, x);
    for (int x : t.v_leaves) out.emplace_back(t.v, x);
    return out;
}

// All paths a-mid-c on three tree vertices, mid one of the centers.
std::vector<std::array<int, 3>> dstar_three_paths(const DoubleStarTree& t) {
    std::vector<std::array<int, 3>> out;
    auto around = [&out](int mid, VertexSet nbrs) {
        std::vector<int> v(nbrs.begin(), nbrs.end());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j)
                out.push_back({v[i], mid, v[j]});
    };
    around(t.u, t.u_leaves.united({t.v}));
    around(t.v, t.v_leaves.united({t.u}));
    return out;
}

}  // namespace

std::vector<MoveCandidate> propose_dstar_moves(const Graph& g, const SearchState& st) {
    const DoubleStarTree* tp = std::get_if<DoubleStarTree>(&st.tree);
    if (!tp) throw std::invalid_argument("propose_dstar_moves: state does not hold a double-star");
    if (st.terminal()) throw std::invalid_argument("propose_dstar_moves: state is terminal");
    const DoubleStarTree& tree = *tp;
    const BlockStructure& bs = st.bs;
    StateView sv(g, st);
    common_state_checks(sv);

    int n = g.vertex_count();
    int m = tree.order();
    int small = std::min(tree.u_leaves.size(), tree.v_leaves.size());
    int large = std::max(tree.u_leaves.size(), tree.v_leaves.size());
    TreeSpec spec = TreeSpec::double_star(m, small, large);
    int l = bs.component_count();
    const VertexSet& h1 = bs.components.front();
    auto h1_edges = sv.edges_within(h1);

    // forced under the degree hypothesis: every component keeps an edge
    for (const auto& comp : bs.components)
        internal_check(comp.size() >= 2, "singleton component under the degree hypothesis");

    std::vector<MoveCandidate> out;
    auto push = [&](std::optional<DoubleStarTree> t, ClaimTag tag, MoveWitness w) {
        if (t) out.push_back({std::move(*t), tag, std::move(w)});
    };

    // C3: a second component exists; recenter on an edge of the smallest one.
    if (l >= 2) {
        auto [t, h] = sv.tree_h1_edge();
        VertexSet forb = bs.block.united({t});
        for (auto [x, y] : sv.edges_within(bs.components.back()))
            push(embed_double_star_either(g, x, y, spec, forb), ClaimTag::C3,
                 witness({{"t", t}, {"h", h}, {"x", x}, {"y", y}}));
    }

    // C4: some tree vertex has two block neighbors.
    for (int t : sv.tree_verts) {
        if (sv.block_neighbors(t).size() < 2) continue;
        VertexSet forb = bs.block.united({t});
        for (auto [x, y] : h1_edges)
            push(embed_double_star_either(g, x, y, spec, forb), ClaimTag::C4,
                 witness({{"t", t}, {"x", x}, {"y", y}}));
    }

    // C5: a tree edge reaching two distinct block vertices.
    for (auto [t1, t2] : dstar_tree_edges(tree)) {
        auto b1s = sv.block_neighbors(t1);
        auto b2s = sv.block_neighbors(t2);
        if (b1s.united(b2s).size() < 2) continue;
        VertexSet forb = bs.block.united({t1, t2});
        for (auto [x, y] : h1_edges)
            push(embed_double_star_either(g, x, y, spec, forb), ClaimTag::C5,
                 witness({{"t1", t1}, {"t2", t2}, {"x", x}, {"y", y}}));
    }

    // C6: a 3-path in the tree whose ends reach distinct block vertices.
    for (auto [a, mid, c] : dstar_three_paths(tree)) {
        auto pr = distinct_pair(sv.block_neighbors(a), sv.block_neighbors(c));
        if (!pr) continue;
        auto [b1, b3] = *pr;
        VertexSet forb = bs.block.united({a, mid, c});
        bool any = false;
        for (auto [x, y] : h1_edges) {
            auto t = embed_double_star_either(g, x, y, spec, forb);
            if (t) {
                any = true;
                out.push_back({std::move(*t), ClaimTag::C6i,
                               witness({{"t1", a}, {"t2", mid}, {"t3", c},
                                        {"b1", b1}, {"b3", b3}, {"x", x}, {"y", y}})});
            }
        }
        if (!any) {
            // No H1 edge can host the tree while the 3-path is protected; H1
            // is then uniformly joined to the outside. Recenter on a
            // tree-to-H1 edge instead, protecting one 3-path end and one H1
            // vertex (both end labelings tried).
            for (int t4 : sv.tree_verts) {
                if (t4 == a || t4 == mid || t4 == c) continue;
                for (int h4 : g.neighbors(t4)) {
                    if (!h1.contains(h4)) continue;
                    for (int h1v : h1) {
                        if (h1v == h4) continue;
                        for (int prot : {a, c})
                            push(embed_double_star_either(g, t4, h4, spec,
                                                          bs.block.united({prot, h1v})),
                                 ClaimTag::C6ii,
                                 witness({{"t1", a}, {"t2", mid}, {"t3", c},
                                          {"t4", t4}, {"h4", h4}, {"h1", h1v},
                                          {"protected", prot}}));
                    }
                }
            }
        }
    }

    // C7: both centers off the block, one attached leaf per side, with
    // distinct block neighbors w, w'.
    if (sv.tree_block_attach().size() >= 2) {
        int u1 = -1, v1 = -1, w = -1, wp = -1;
        for (int x : tree.u_leaves) {
            auto bx = sv.block_neighbors(x);
            if (bx.empty()) continue;
            for (int y : tree.v_leaves) {
                auto by = sv.block_neighbors(y);
                if (by.empty()) continue;
                if (auto pr = distinct_pair(bx, by)) {
                    u1 = x;
                    v1 = y;
                    w = pr->first;
                    wp = pr->second;
                    break;
                }
            }
            if (u1 != -1) break;
        }
        if (u1 != -1) {
            VertexSet all_four = bs.block.united({tree.u, tree.v, u1, v1});
            auto base_witness = [&](int x) {
                return witness({{"u1", u1}, {"v1", v1}, {"w", w}, {"w'", wp}, {"leaf", x}});
            };
            auto side_a = [&](int x, bool on_v_side) {
                int cen = on_v_side ? tree.v : tree.u;
                int ocen = on_v_side ? tree.u : tree.v;
                int oleaf = on_v_side ? u1 : v1;
                if (g.has_edge(x, ocen))
                    for (int c2 : g.neighbors(cen)) {
                        if (!h1.contains(c2)) continue;
                        push(embed_double_star_either(g, cen, c2, spec,
                                                      bs.block.united({ocen, oleaf, x})),
                             ClaimTag::C7a, base_witness(x));
                    }
                if (g.has_edge(x, oleaf))
                    for (int c2 : g.neighbors(cen)) {
                        if (!h1.contains(c2)) continue;
                        push(embed_double_star_either(g, cen, c2, spec,
                                                      bs.block.united({oleaf, x})),
                             ClaimTag::C7a, base_witness(x));
                    }
                if (!g.has_edge(x, ocen) && !g.has_edge(x, oleaf))
                    for (int x2 : g.neighbors(x)) {
                        if (!h1.contains(x2)) continue;
                        push(embed_double_star_either(g, x, x2, spec, all_four),
                             ClaimTag::C7a, base_witness(x));
                    }
            };
            // (a) further attached leaves
            for (int x : tree.u_leaves)
                if (x != u1 && !sv.block_neighbors(x).empty()) side_a(x, false);
            for (int x : tree.v_leaves)
                if (x != v1 && !sv.block_neighbors(x).empty()) side_a(x, true);
            // (b) unattached second leaves recentered into H1
            for (int x : tree.u_leaves)
                if (x != u1 && sv.block_neighbors(x).empty())
                    for (int x2 : g.neighbors(x)) {
                        if (!h1.contains(x2)) continue;
                        push(embed_double_star_either(g, x, x2, spec, all_four),
                             ClaimTag::C7b, base_witness(x));
                    }
            for (int x : tree.v_leaves)
                if (x != v1 && sv.block_neighbors(x).empty())
                    for (int x2 : g.neighbors(x)) {
                        if (!h1.contains(x2)) continue;
                        push(embed_double_star_either(g, x, x2, spec, all_four),
                             ClaimTag::C7b, base_witness(x));
                    }
            // (c) keep the center edge, shed everything else
            for (int x : tree.u_leaves.united(tree.v_leaves)) {
                if (x == u1 || x == v1) continue;
                push(embed_double_star_either(g, tree.u, tree.v, spec,
                                              bs.block.united({u1, v1, x})),
                     ClaimTag::C7c, base_witness(x));
            }
        }
    }

    // ENDGAME: mirror of the star endgame over center edges outside B u P.
    VertexSet tb = sv.tree_block_attach();
    if (l == 1 && tb.size() == 1) {
        int w = tb.min();
        internal_check(bs.attach[0].has_value(), "endgame: H1 not attached to the block");
        int z = *bs.attach[0];
        internal_check(z != w, "endgame: z == w would be a cut vertex of a 2-connected input");
        std::vector<char> allowed(n, 0);
        for (int v : h1) allowed[v] = 1;
        for (int v : sv.tree_verts) allowed[v] = 1;
        allowed[z] = allowed[w] = 1;
        std::vector<int> path = ear_path(g, z, w, allowed);
        internal_check(path.size() >= 3, "endgame: no ear path from z to w");
        VertexSet prot = bs.block;
        for (int p : path) prot.insert(p);
        VertexSet pathset(path);
        for (int x = 0; x < n; ++x) {
            if (prot.contains(x)) continue;
            int on_path = 0;
            for (int y : g.neighbors(x))
                if (pathset.contains(y)) ++on_path;
            internal_check(on_path <= 3, "endgame: vertex adjacent to >3 vertices of a shortest ear");
        }
        for (int x = 0; x < n; ++x) {
            if (prot.contains(x)) continue;
            for (int y : g.neighbors(x)) {
                if (y <= x || prot.contains(y)) continue;
                push(embed_double_star_either(g, x, y, spec, prot), ClaimTag::ENDGAME,
                     witness({{"z", z}, {"w", w}, {"x", x}, {"y", y}}, path));
            }
        }
    }

    return out;
}

namespace {

std::string dump_state(const Graph& g, const SearchState& st) {
    std::ostringstream os;
    os << "graph6=" << serialize_graph6(g) << " iteration=" << st.iteration << " potential=("
       << st.pot.block_size << ';';
    for (int c : st.pot.component_sizes) os << ' ' << c;
    os << ") tree=";
    if (const auto* s = std::get_if<StarTree>(&st.tree)) {
        os << "star root=" << s->root << " leaves=";
        for (int x : s->leaves) os << x << ' ';
    } else {
        const auto& d = std::get<DoubleStarTree>(st.tree);
        os << "dstar centers=" << d.u << ',' << d.v << " u_leaves=";
        for (int x : d.u_leaves) os << x << ' ';
        os << "v_leaves=";
        for (int x : d.v_leaves) os << x << ' ';
    }
    return os.str();
}

void check_hypotheses(const Graph& g, const TreeSpec& spec) {
    if (spec.kind == TreeKind::star && spec.m < 4)
        throw hypothesis_error(
            "stars of order <= 3 are paths and outside this search; the oracle can test them");
    if (spec.kind == TreeKind::double_star && spec.m < 5)
        throw hypothesis_error(
            "double-stars of order 4 are paths and outside this search; the oracle can test them");
    if (g.vertex_count() == 0 || g.min_degree() < spec.m + 2)
        throw hypothesis_error("minimum degree is below m + 2");
    if (!is_k_connected(g, 2)) throw hypothesis_error("input graph is not 2-connected");
}

TreeVariant seed_tree(const Graph& g, const TreeSpec& spec) {
    int n = g.vertex_count();
    if (spec.kind == TreeKind::star) {
        int root = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(root)) root = v;
        auto t = embed_star(g, root, spec.m, {});
        internal_check(t.has_value(), "seed star failed despite the degree hypothesis");
        return *t;
    }
    int bu = -1, bv = -1, best = -1;
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            int dsum = g.degree(u) + g.degree(v);
            if (dsum > best) {
                best = dsum;
                bu = u;
                bv = v;
            }
        }
    internal_check(bu != -1, "seed: graph has no edges");
    auto t = embed_double_star_either(g, bu, bv, spec, {});
    internal_check(t.has_value(), "seed double-star failed despite the degree hypothesis");
    return *t;
}

SearchState make_state(const Graph& g, TreeVariant tree) {
    SearchState st;
    st.tree = std::move(tree);
    st.bs = block_structure(g, tree_vertices(st.tree));
    st.pot = potential_of(st.bs);
    return st;
}

}  // namespace

SearchResult run_to_fixpoint(const Graph& g, const TreeSpec& spec, const SearchOptions& opts) {
    check_hypotheses(g, spec);

    SearchResult res;
    SearchState st = make_state(g, seed_tree(g, spec));
    res.initial_pot = st.pot;
    long long cap = static_cast<long long>(g.vertex_count()) * g.vertex_count();

    while (!st.terminal()) {
        if (st.iteration >= cap)
            throw search_failure("iteration cap exceeded (non-termination): " + dump_state(g, st));

        auto cands = spec.kind == TreeKind::star ? propose_star_moves(g, st)
                                                 : propose_dstar_moves(g, st);
        bool accepted = false;
        std::size_t chosen = 0;
        BlockStructure chosen_bs;
        Potential chosen_pot;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            internal_check(verify_tree(g, cands[i].proposal, spec),
                           "move generator emitted an invalid tree");
            BlockStructure bs2 = block_structure(g, tree_vertices(cands[i].proposal));
            Potential pot2 = potential_of(bs2);
            if (compare_potential(pot2, st.pot) != std::strong_ordering::greater) continue;
            if (!accepted || compare_potential(pot2, chosen_pot) == std::strong_ordering::greater) {
                accepted = true;
                chosen = i;
                chosen_bs = std::move(bs2);
                chosen_pot = std::move(pot2);
            }
            if (!opts.best_improving) break;
        }
        if (!accepted)
            throw search_failure("no strictly improving candidate among " +
                                 std::to_string(cands.size()) + ": " + dump_state(g, st));

        st.tree = std::move(cands[chosen].proposal);
        st.bs = std::move(chosen_bs);
        st.pot = std::move(chosen_pot);
        ++st.iteration;
        res.trace.push_back({st.iteration, cands[chosen].tag, st.pot});
    }

    internal_check(verify_tree(g, st.tree, spec), "terminal tree failed verification");
    internal_check(is_biconnected(remove_vertices(g, tree_vertices(st.tree)).graph),
                   "terminal remainder is not 2-connected");
    res.state = std::move(st);
    return res;
}

StarSearch find_nonseparating_star(const Graph& g, int m, const SearchOptions& opts) {
    auto res = run_to_fixpoint(g, TreeSpec::star(m), opts);
    return {std::get<StarTree>(res.state.tree), std::move(res.trace), std::move(res.initial_pot)};
}

DoubleStarSearch find_nonseparating_double_star(const Graph& g, const TreeSpec& spec,
                                                const SearchOptions& opts) {
    if (spec.kind != TreeKind::double_star)
        throw std::invalid_argument("find_nonseparating_double_star: spec is not a double-star");
    auto res = run_to_fixpoint(g, spec, opts);
    return {std::get<DoubleStarTree>(res.state.tree), std::move(res.trace),
            std::move(res.initial_pot)};
}

}  // namespace nonsep

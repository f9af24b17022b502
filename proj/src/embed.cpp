#include "nonsep/embed.hpp"

#include <algorithm>

namespace nonsep {

TreeSpec TreeSpec::star(int m) {
    if (m < 3) throw std::invalid_argument("star spec requires m >= 3");
    return TreeSpec{TreeKind::star, m, 0, 0};
}

TreeSpec TreeSpec::double_star(int m, int r, int s) {
    if (m < 4) throw std::invalid_argument("double-star spec requires m >= 4");
    if (r < 1 || r > s) throw std::invalid_argument("double-star spec requires 1 <= r <= s");
    if (r + s != m - 2) throw std::invalid_argument("double-star spec requires r + s = m - 2");
    return TreeSpec{TreeKind::double_star, m, r, s};
}

DoubleStarTree DoubleStarTree::normalized() const {
    if (u <= v) return *this;
    return DoubleStarTree{v, u, v_leaves, u_leaves};
}

VertexSet tree_vertices(const TreeVariant& t) {
    return std::visit([](const auto& tr) { return tr.vertices(); }, t);
}

int tree_order(const TreeVariant& t) {
    return std::visit([](const auto& tr) { return tr.order(); }, t);
}

std::optional<StarTree> embed_star(const Graph& g, int root, int m,
                                   const VertexSet& forbidden) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("embed_star: root out of range");
    if (forbidden.contains(root))
        throw std::invalid_argument("embed_star: root is forbidden");
    if (m < 2) throw std::invalid_argument("embed_star: m must be >= 2");

    std::vector<int> leaves;
    for (int w : g.neighbors(root)) {
        if (forbidden.contains(w)) continue;
        leaves.push_back(w);
        if (static_cast<int>(leaves.size()) == m - 1) break;
    }
    if (static_cast<int>(leaves.size()) < m - 1) return std::nullopt;
    return StarTree{root, VertexSet(std::move(leaves))};
}

namespace {

std::optional<DoubleStarTree> embed_oriented(const Graph& g, int u, int v,
                                             int at_u, int at_v,
                                             const VertexSet& forbidden) {
    std::vector<int> a, c;
    for (int w : g.neighbors(u))
        if (w != v && !forbidden.contains(w)) a.push_back(w);
    for (int w : g.neighbors(v))
        if (w != u && !forbidden.contains(w)) c.push_back(w);

    if (static_cast<int>(a.size()) < at_u || static_cast<int>(c.size()) < at_v)
        return std::nullopt;
    std::vector<int> both;
    std::set_union(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(both));
    if (static_cast<int>(both.size()) < at_u + at_v) return std::nullopt;

    std::vector<int> u_leaves;
    std::vector<char> taken(g.vertex_count(), 0);
    std::vector<int> c_set(c.begin(), c.end());
    for (int w : a) {  // private neighbors of u first
        if (static_cast<int>(u_leaves.size()) == at_u) break;
        if (!std::binary_search(c_set.begin(), c_set.end(), w)) {
            u_leaves.push_back(w);
            taken[w] = 1;
        }
    }
    for (int w : a) {  // then the shared pool
        if (static_cast<int>(u_leaves.size()) == at_u) break;
        if (!taken[w]) {
            u_leaves.push_back(w);
            taken[w] = 1;
        }
    }
    std::vector<int> v_leaves;
    for (int w : c) {
        if (static_cast<int>(v_leaves.size()) == at_v) break;
        if (!taken[w]) {
            v_leaves.push_back(w);
            taken[w] = 1;
        }
    }
    if (static_cast<int>(v_leaves.size()) < at_v) return std::nullopt;
    return DoubleStarTree{u, v, VertexSet(std::move(u_leaves)), VertexSet(std::move(v_leaves))};
}

void check_center_edge(const Graph& g, int u, int v, const TreeSpec& spec,
                       const VertexSet& forbidden) {
    if (spec.kind != TreeKind::double_star)
        throw std::invalid_argument("embed_double_star: spec is not a double-star");
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("embed_double_star: center out of range");
    if (!g.has_edge(u, v))
        throw std::invalid_argument("embed_double_star: uv is not an edge");
    if (forbidden.contains(u) || forbidden.contains(v))
        throw std::invalid_argument("embed_double_star: center is forbidden");
}

}  // namespace

std::optional<DoubleStarTree> embed_double_star(const Graph& g, int u, int v,
                                                const TreeSpec& spec,
                                                const VertexSet& forbidden) {
    check_center_edge(g, u, v, spec, forbidden);
    return embed_oriented(g, u, v, spec.r, spec.s, forbidden);
}

std::optional<DoubleStarTree> embed_double_star_either(const Graph& g, int u, int v,
                                                       const TreeSpec& spec,
                                                       const VertexSet& forbidden) {
    check_center_edge(g, u, v, spec, forbidden);
    if (auto t = embed_oriented(g, u, v, spec.r, spec.s, forbidden)) return t;
    if (spec.r != spec.s) return embed_oriented(g, u, v, spec.s, spec.r, forbidden);
    return std::nullopt;
}

bool verify_tree(const Graph& g, const StarTree& t, const TreeSpec& spec) {
    if (spec.kind != TreeKind::star) return false;
    if (t.root < 0 || t.root >= g.vertex_count()) return false;
    if (t.order() != spec.m) return false;
    if (t.leaves.contains(t.root)) return false;
    for (int w : t.leaves) {
        if (w < 0 || w >= g.vertex_count()) return false;
        if (!g.has_edge(t.root, w)) return false;
    }
    return true;
}

bool verify_tree(const Graph& g, const DoubleStarTree& t, const TreeSpec& spec) {
    if (spec.kind != TreeKind::double_star) return false;
    int n = g.vertex_count();
    if (t.u < 0 || t.u >= n || t.v < 0 || t.v >= n || t.u == t.v) return false;
    if (!g.has_edge(t.u, t.v)) return false;
    if (t.order() != spec.m) return false;
    int a = t.u_leaves.size(), b = t.v_leaves.size();
    if (!((a == spec.r && b == spec.s) || (a == spec.s && b == spec.r))) return false;
    if (t.u_leaves.intersects(t.v_leaves)) return false;
    for (int w : t.u_leaves) {
        if (w == t.u || w == t.v || w < 0 || w >= n) return false;
        if (!g.has_edge(t.u, w)) return false;
    }
    for (int w : t.v_leaves) {
        if (w == t.u || w == t.v || w < 0 || w >= n) return false;
        if (!g.has_edge(t.v, w)) return false;
    }
    return true;
}

bool verify_tree(const Graph& g, const TreeVariant& t, const TreeSpec& spec) {
    return std::visit([&](const auto& tr) { return verify_tree(g, tr, spec); }, t);
}

}  // namespace nonsep

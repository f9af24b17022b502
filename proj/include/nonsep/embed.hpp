#pragma once

#include <optional>
#include <variant>

#include "nonsep/graph.hpp"

namespace nonsep {

enum class TreeKind { star, double_star };

/// Shape of the tree to embed: a star of order m, or a double-star with r
/// leaves on one center and s on the other (1 <= r <= s, r + s = m - 2).
struct TreeSpec {
    TreeKind kind = TreeKind::star;
    int m = 0;
    int r = 0, s = 0;

    static TreeSpec star(int m);
    static TreeSpec double_star(int m, int r, int s);
};

struct StarTree {
    int root = -1;
    VertexSet leaves;
    int order() const { return 1 + leaves.size(); }
    VertexSet vertices() const { return leaves.united({root}); }
    bool operator==(const StarTree&) const = default;
};

struct DoubleStarTree {
    int u = -1, v = -1;
    VertexSet u_leaves, v_leaves;
    int order() const { return 2 + u_leaves.size() + v_leaves.size(); }
    VertexSet vertices() const { return u_leaves.united(v_leaves).united({u, v}); }
    DoubleStarTree normalized() const;  // centers ordered u < v
    bool operator==(const DoubleStarTree&) const = default;
};

using TreeVariant = std::variant<StarTree, DoubleStarTree>;

VertexSet tree_vertices(const TreeVariant& t);
int tree_order(const TreeVariant& t);

/// Star of order m rooted at `root`, leaves the m-1 smallest eligible
/// neighbors, never touching `forbidden`. Succeeds iff root has at least
/// m-1 neighbors outside forbidden.
std::optional<StarTree> embed_star(const Graph& g, int root, int m,
                                   const VertexSet& forbidden);

/// Double-star with center-edge uv, r leaves at u and s at v, avoiding
/// `forbidden`. With A = N(u) and C = N(v) (both minus {u,v} and forbidden),
/// feasible iff |A| >= r, |C| >= s and |A u C| >= r+s; u is served first from
/// A \ C, then the shared pool, smallest ids throughout.
std::optional<DoubleStarTree> embed_double_star(const Graph& g, int u, int v,
                                                const TreeSpec& spec,
                                                const VertexSet& forbidden);

/// Tries (r at u, s at v) first, then the swapped orientation.
std::optional<DoubleStarTree> embed_double_star_either(const Graph& g, int u, int v,
                                                       const TreeSpec& spec,
                                                       const VertexSet& forbidden);

bool verify_tree(const Graph& g, const StarTree& t, const TreeSpec& spec);
bool verify_tree(const Graph& g, const DoubleStarTree& t, const TreeSpec& spec);
bool verify_tree(const Graph& g, const TreeVariant& t, const TreeSpec& spec);

}  // namespace nonsep

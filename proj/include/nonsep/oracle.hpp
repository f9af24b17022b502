#pragma once

#include <optional>

#include "nonsep/connectivity.hpp"
#include "nonsep/embed.hpp"

namespace nonsep {

/// Streams every labeled star of order m in g: each (root, leaf set) with the
/// leaves an (m-1)-subset of N(root). Roots ascending, leaf combinations in
/// lexicographic order.
class StarEnumerator {
public:
    StarEnumerator(const Graph& g, int m);
    std::optional<StarTree> next();

private:
    const Graph& g_;
    int m_;
    int root_ = -1;
    std::vector<int> comb_;  // indices into neighbors(root_)
    bool fresh_ = false;     // comb_ not yet emitted
    bool advance_root();
    bool advance_comb();
};

/// Streams every labeled double-star of shape (r, s) in g: for each edge uv
/// (u < v), every disjoint pair of an r-subset of N(u)\{v} and an s-subset of
/// N(v)\{u}; when r != s the swapped orientation follows. Each labeled
/// subtree appears exactly once.
class DoubleStarEnumerator {
public:
    DoubleStarEnumerator(const Graph& g, const TreeSpec& spec);
    std::optional<DoubleStarTree> next();

private:
    const Graph& g_;
    TreeSpec spec_;
    std::vector<std::pair<int, int>> edges_;
    std::size_t edge_ = 0;
    int orientation_ = 0;  // 0: r at u; 1: s at u
    std::vector<int> base_u_, base_v_;
    std::vector<int> comb_u_, comb_v_;
    std::vector<int> avail_v_;
    bool ready_ = false;

    bool load_edge();
    bool load_orientation();
    bool rebuild_avail();
    bool advance();
    int at_u() const;
    int at_v() const;
};

/// Exhaustive ground truth for one graph and shape.
struct OracleReport {
    bool hypotheses_ok = false;  // 2-connected and min degree >= m + 2
    bool exists = false;
    std::optional<TreeVariant> witness;  // first valid tree in enumeration order
    long long n_candidates = 0;          // examined (all of them with count_all)
    long long n_valid = 0;
};

/// Tests every enumerated tree for a 2-connected remainder. Stops at the
/// first valid one unless count_all is set.
OracleReport oracle_find(const Graph& g, const TreeSpec& spec, bool count_all = false);

}  // namespace nonsep

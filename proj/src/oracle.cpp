#include "nonsep/oracle.hpp"

#include <numeric>

namespace nonsep {

namespace {

// next lexicographic k-combination of 0..n-1; false when exhausted
bool advance_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

}  // namespace

// ---------------------------------------------------------- StarEnumerator

StarEnumerator::StarEnumerator(const Graph& g, int m) : g_(g), m_(m) {
    if (m < 3) throw std::invalid_argument("star enumeration requires m >= 3");
}

bool StarEnumerator::advance_root() {
    int k = m_ - 1;
    for (++root_; root_ < g_.vertex_count(); ++root_) {
        if (g_.degree(root_) >= k) {
            comb_.resize(k);
            std::iota(comb_.begin(), comb_.end(), 0);
            fresh_ = true;
            return true;
        }
    }
    return false;
}

bool StarEnumerator::advance_comb() {
    return advance_combination(comb_, g_.degree(root_));
}

std::optional<StarTree> StarEnumerator::next() {
    if (root_ >= g_.vertex_count() && root_ != -1) return std::nullopt;
    if (!fresh_) {
        if (root_ == -1 || !advance_comb()) {
            if (!advance_root()) return std::nullopt;
        }
    }
    fresh_ = false;
    const auto& nb = g_.neighbors(root_);
    std::vector<int> leaves;
    leaves.reserve(comb_.size());
    for (int idx : comb_) leaves.push_back(nb[idx]);
    return StarTree{root_, VertexSet(std::move(leaves))};
}

// ---------------------------------------------------- DoubleStarEnumerator

DoubleStarEnumerator::DoubleStarEnumerator(const Graph& g, const TreeSpec& spec)
    : g_(g), spec_(spec) {
    if (spec.kind != TreeKind::double_star)
        throw std::invalid_argument("double-star enumeration requires a double-star spec");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) edges_.emplace_back(u, v);
}

int DoubleStarEnumerator::at_u() const { return orientation_ == 0 ? spec_.r : spec_.s; }
int DoubleStarEnumerator::at_v() const { return orientation_ == 0 ? spec_.s : spec_.r; }

bool DoubleStarEnumerator::rebuild_avail() {
    std::vector<char> chosen(g_.vertex_count(), 0);
    for (int idx : comb_u_) chosen[base_u_[idx]] = 1;
    avail_v_.clear();
    for (int w : base_v_)
        if (!chosen[w]) avail_v_.push_back(w);
    int kv = at_v();
    if (static_cast<int>(avail_v_.size()) < kv) return false;
    comb_v_.resize(kv);
    std::iota(comb_v_.begin(), comb_v_.end(), 0);
    return true;
}

bool DoubleStarEnumerator::load_orientation() {
    auto [u, v] = edges_[edge_];
    base_u_.clear();
    base_v_.clear();
    for (int w : g_.neighbors(u))
        if (w != v) base_u_.push_back(w);
    for (int w : g_.neighbors(v))
        if (w != u) base_v_.push_back(w);
    int ku = at_u();
    if (static_cast<int>(base_u_.size()) < ku) return false;
    comb_u_.resize(ku);
    std::iota(comb_u_.begin(), comb_u_.end(), 0);
    while (true) {
        if (rebuild_avail()) return true;
        if (!advance_combination(comb_u_, static_cast<int>(base_u_.size()))) return false;
    }
}

// move to the next (edge, orientation) position that admits an assignment;
// with include_current, try the current position first
bool DoubleStarEnumerator::load_edge() {
    while (edge_ < edges_.size()) {
        if (load_orientation()) return true;
        if (orientation_ == 0 && spec_.r != spec_.s) {
            orientation_ = 1;
        } else {
            orientation_ = 0;
            ++edge_;
        }
    }
    return false;
}

bool DoubleStarEnumerator::advance() {
    if (advance_combination(comb_v_, static_cast<int>(avail_v_.size()))) return true;
    while (advance_combination(comb_u_, static_cast<int>(base_u_.size())))
        if (rebuild_avail()) return true;
    if (orientation_ == 0 && spec_.r != spec_.s) {
        orientation_ = 1;
    } else {
        orientation_ = 0;
        ++edge_;
    }
    return load_edge();
}

std::optional<DoubleStarTree> DoubleStarEnumerator::next() {
    if (!ready_) {
        ready_ = true;
        edge_ = 0;
        orientation_ = 0;
        if (!load_edge()) {
            edge_ = edges_.size();
            return std::nullopt;
        }
    } else {
        if (edge_ >= edges_.size()) return std::nullopt;
        if (!advance()) {
            edge_ = edges_.size();
            return std::nullopt;
        }
    }
    auto [u, v] = edges_[edge_];
    std::vector<int> ul, vl;
    ul.reserve(comb_u_.size());
    vl.reserve(comb_v_.size());
    for (int i : comb_u_) ul.push_back(base_u_[i]);
    for (int i : comb_v_) vl.push_back(avail_v_[i]);
    return DoubleStarTree{u, v, VertexSet(std::move(ul)), VertexSet(std::move(vl))};
}

// ------------------------------------------------------------- oracle_find

OracleReport oracle_find(const Graph& g, const TreeSpec& spec, bool count_all) {
    OracleReport rep;
    rep.hypotheses_ok = g.vertex_count() > 0 && g.min_degree() >= spec.m + 2 &&
                        is_k_connected(g, 2);

    auto consider = [&](TreeVariant t) -> bool {
        ++rep.n_candidates;
        auto sub = remove_vertices(g, tree_vertices(t));
        if (is_biconnected(sub.graph)) {
            ++rep.n_valid;
            if (!rep.witness) {
                rep.witness = std::move(t);
                rep.exists = true;
            }
            if (!count_all) return false;
        }
        return true;
    };

    if (spec.kind == TreeKind::star) {
        StarEnumerator e(g, spec.m);
        while (auto t = e.next())
            if (!consider(std::move(*t))) break;
    } else {
        DoubleStarEnumerator e(g, spec);
        while (auto t = e.next())
            if (!consider(std::move(*t))) break;
    }
    return rep;
}

}  // namespace nonsep

#include "nonsep/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace nonsep {

namespace {

struct Frame {
    int v;
    std::size_t idx;
};

}  // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n;
}

VertexSet cut_vertices(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<char> cut(n, 0);
    int timer = 0;

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        int root_children = 0;
        disc[root] = low[root] = timer++;
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.idx < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.idx++];
                if (disc[w] == -1) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    if (v == root) ++root_children;
                    frames.push_back({w, 0});
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty()) {
                    int p = frames.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) cut[p] = 1;
                }
            }
        }
        if (root_children >= 2) cut[root] = 1;
    }

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return VertexSet(std::move(out));
}

std::vector<VertexSet> blocks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::pair<int, int>> estack;
    std::vector<VertexSet> out;
    int timer = 0;

    auto flush_block = [&](int p, int v) {
        std::vector<int> verts;
        while (true) {
            auto [a, b] = estack.back();
            estack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == p && b == v) break;
        }
        out.emplace_back(std::move(verts));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            out.push_back(VertexSet{root});
            disc[root] = timer++;
            continue;
        }
        disc[root] = low[root] = timer++;
        std::vector<Frame> frames{{root, 0}};
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            if (f.idx < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.idx++];
                if (disc[w] == -1) {
                    estack.push_back({v, w});
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, 0});
                } else if (w != parent[v] && disc[w] < disc[v]) {
                    estack.push_back({v, w});
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty()) {
                    int p = frames.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= disc[p]) flush_block(p, v);
                }
            }
        }
    }
    return out;
}

bool is_biconnected(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

namespace {

// Unit-capacity vertex-split max-flow, capped at `limit`. Nodes 2v (in) and
// 2v+1 (out); each in->out arc has capacity 1, each edge contributes
// out->in arcs both ways.
class VertexFlow {
public:
    explicit VertexFlow(const Graph& g) : g_(g), n_(g.vertex_count()) {
        head_.assign(2 * n_, {});
        for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v))
                add_arc(2 * v + 1, 2 * w);
    }

    int max_flow(int s, int t, int limit) {
        for (auto& a : arcs_) a.cap = a.base_cap;
        int src = 2 * s + 1, dst = 2 * t;
        int flow = 0;
        while (flow < limit && augment(src, dst)) ++flow;
        return flow;
    }

private:
    struct Arc {
        int to;
        int cap;
        int base_cap;
    };

    void add_arc(int from, int to) {
        head_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, 1, 1});
        head_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0, 0});
    }

    bool augment(int src, int dst) {
        std::vector<int> pred(2 * n_, -1);
        std::queue<int> q;
        q.push(src);
        pred[src] = -2;
        while (!q.empty() && pred[dst] == -1) {
            int v = q.front();
            q.pop();
            for (int ai : head_[v]) {
                const Arc& a = arcs_[ai];
                if (a.cap > 0 && pred[a.to] == -1) {
                    pred[a.to] = ai;
                    q.push(a.to);
                }
            }
        }
        if (pred[dst] == -1) return false;
        for (int v = dst; v != src;) {
            int ai = pred[v];
            arcs_[ai].cap -= 1;
            arcs_[ai ^ 1].cap += 1;
            v = arcs_[ai ^ 1].to;
        }
        return true;
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
};

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_connected: k must be >= 1");
    int n = g.vertex_count();
    if (n <= k) return false;
    if (g.min_degree() < k) return false;

    int v = 0;
    for (int u = 1; u < n; ++u)
        if (g.degree(u) < g.degree(v)) v = u;

    VertexFlow flow(g);
    for (int t = 0; t < n; ++t)
        if (t != v && !g.has_edge(v, t) && flow.max_flow(v, t, k) < k) return false;
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j]) && flow.max_flow(nb[i], nb[j], k) < k) return false;
    return true;
}

BlockStructure block_structure(const Graph& g, const VertexSet& removed) {
    int n = g.vertex_count();
    for (int v : removed)
        if (v < 0 || v >= n) throw std::invalid_argument("block_structure: id out of range");
    if (removed.size() >= n) throw std::invalid_argument("block_structure: empty remainder");

    auto sub = remove_vertices(g, removed);
    auto blks = blocks(sub.graph);

    auto lift = [&](const VertexSet& s) {
        std::vector<int> ids;
        ids.reserve(s.size());
        for (int v : s) ids.push_back(sub.to_old[v]);
        return VertexSet(std::move(ids));
    };

    int best = 0;
    for (std::size_t i = 1; i < blks.size(); ++i) {
        const auto& a = blks[i];
        const auto& b = blks[best];
        if (a.size() > b.size() ||
            (a.size() == b.size() && a.ids() < b.ids()))
            best = static_cast<int>(i);
    }

    BlockStructure bs;
    bs.removed = removed;
    bs.block = lift(blks[best]);

    // components of G' - B
    int sn = sub.graph.vertex_count();
    std::vector<char> in_block(sn, 0);
    for (int v : blks[best]) in_block[v] = 1;
    std::vector<int> comp(sn, -1);
    std::vector<std::vector<int>> comp_verts;
    for (int v = 0; v < sn; ++v) {
        if (in_block[v] || comp[v] != -1) continue;
        int id = static_cast<int>(comp_verts.size());
        comp_verts.emplace_back();
        std::vector<int> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp_verts[id].push_back(x);
            for (int w : sub.graph.neighbors(x)) {
                if (!in_block[w] && comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<std::pair<VertexSet, std::optional<int>>> comps;
    for (auto& verts : comp_verts) {
        VertexSet h = lift(VertexSet(verts));
        VertexSet attach_set;
        for (int x : verts)
            for (int w : sub.graph.neighbors(x))
                if (in_block[w]) attach_set.insert(sub.to_old[w]);
        if (attach_set.size() > 1)
            throw std::logic_error("block_structure: component attached to the block twice");
        std::optional<int> attach;
        if (attach_set.size() == 1) attach = attach_set.min();
        comps.emplace_back(std::move(h), attach);
    }
    std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
        return a.first.min() < b.first.min();
    });
    for (auto& [h, a] : comps) {
        bs.components.push_back(std::move(h));
        bs.attach.push_back(a);
    }

    bs.biconnected = bs.components.empty() && bs.block.size() >= 3;
    return bs;
}

Potential potential_of(const BlockStructure& bs) {
    Potential p;
    p.block_size = bs.block.size();
    for (const auto& h : bs.components) p.component_sizes.push_back(h.size());
    return p;
}

std::strong_ordering compare_potential(const Potential& a, const Potential& b) {
    if (a.block_size != b.block_size) return a.block_size <=> b.block_size;
    std::size_t len = std::max(a.component_sizes.size(), b.component_sizes.size());
    for (std::size_t i = 0; i < len; ++i) {
        int x = i < a.component_sizes.size() ? a.component_sizes[i] : 0;
        int y = i < b.component_sizes.size() ? b.component_sizes[i] : 0;
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

}  // namespace nonsep

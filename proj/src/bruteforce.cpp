#include "nonsep/bruteforce.hpp"

#include <algorithm>

namespace nonsep::brute {

namespace {

int component_count(const Graph& g, const std::vector<char>& alive) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (!alive[v] || seen[v]) continue;
        ++comps;
        std::vector<int> stack{v};
        seen[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(x))
                if (alive[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

bool subset_connected(const Graph& g, unsigned mask, int n) {
    std::vector<char> alive(n, 0);
    int total = 0;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) {
            alive[v] = 1;
            ++total;
        }
    if (total == 0) return false;
    return component_count(g, alive) == 1;
}

bool subset_has_cut_vertex(const Graph& g, unsigned mask, int n) {
    for (int v = 0; v < n; ++v) {
        if (!(mask & (1u << v))) continue;
        unsigned rest = mask & ~(1u << v);
        if (rest == 0) continue;
        if (!subset_connected(g, rest, n)) return true;
    }
    return false;
}

}  // namespace

VertexSet cut_vertices(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    int base = component_count(g, alive);
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        alive[v] = 0;
        if (component_count(g, alive) > base) out.push_back(v);
        alive[v] = 1;
    }
    return VertexSet(std::move(out));
}

std::vector<VertexSet> blocks(const Graph& g) {
    int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("brute::blocks: n too large");
    std::vector<unsigned> candidates;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!subset_connected(g, mask, n)) continue;
        if (subset_has_cut_vertex(g, mask, n)) continue;
        candidates.push_back(mask);
    }
    std::vector<VertexSet> out;
    for (unsigned m : candidates) {
        bool maximal = true;
        for (unsigned other : candidates)
            if (other != m && (other & m) == m) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (m & (1u << v)) verts.push_back(v);
        out.emplace_back(std::move(verts));
    }
    return out;
}

bool is_k_connected(const Graph& g, int k) {
    int n = g.vertex_count();
    if (n <= k) return false;
    // all subsets of size 0 .. k-1
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int want) -> bool {
        if (want == 0) {
            std::vector<char> alive(n, 1);
            for (int v : pick) alive[v] = 0;
            return component_count(g, alive) == 1;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            bool ok = self(self, v + 1, want - 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    for (int size = 0; size < k; ++size)
        if (!rec(rec, 0, size)) return false;
    return true;
}

bool double_star_embeddable(const Graph& g, int u, int v, int r, int s,
                            const VertexSet& forbidden) {
    std::vector<int> a, c;
    for (int w : g.neighbors(u))
        if (w != v && !forbidden.contains(w)) a.push_back(w);
    for (int w : g.neighbors(v))
        if (w != u && !forbidden.contains(w)) c.push_back(w);

    std::vector<int> ua;
    auto pick_u = [&](auto&& self, std::size_t start, int want) -> bool {
        if (want == 0) {
            std::vector<int> cv;
            for (int w : c)
                if (std::find(ua.begin(), ua.end(), w) == ua.end()) cv.push_back(w);
            return static_cast<int>(cv.size()) >= s;
        }
        for (std::size_t i = start; i < a.size(); ++i) {
            ua.push_back(a[i]);
            if (self(self, i + 1, want - 1)) return true;
            ua.pop_back();
        }
        return false;
    };
    if (static_cast<int>(a.size()) < r) return false;
    return pick_u(pick_u, 0, r);
}

std::vector<VertexSet> sorted_blocks(std::vector<VertexSet> bs) {
    std::sort(bs.begin(), bs.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.ids() < b.ids(); });
    return bs;
}

}  // namespace nonsep::brute

#include "nonsep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nonsep {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

int VertexSet::min() const {
    if (ids_.empty()) throw std::logic_error("VertexSet::min on empty set");
    return ids_.front();
}

VertexSet VertexSet::united(const VertexSet& other) const {
    std::vector<int> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    VertexSet r;
    r.ids_ = std::move(out);
    return r;
}

VertexSet VertexSet::united(std::initializer_list<int> extra) const {
    VertexSet r = *this;
    for (int v : extra) r.insert(v);
    return r;
}

bool VertexSet::intersects(const VertexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) throw std::invalid_argument("duplicate edge");
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::logic_error("min_degree of empty graph");
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::logic_error("max_degree of empty graph");
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

// ------------------------------------------------------------------- graph6

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    auto data6 = [&]() -> int {
        if (pos >= text.size()) throw parse_error("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte outside printable range 63..126");
        return c - 63;
    };

    if (text.empty()) throw parse_error("graph6: empty input");
    long long n;
    if (static_cast<unsigned char>(text[0]) != 126) {
        n = data6();
    } else {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
            throw parse_error("graph6: 8-byte size encoding not supported");
        long long a = data6(), b = data6(), c = data6();
        n = (a << 12) | (b << 6) | c;
        if (n > 258047) throw parse_error("graph6: vertex count above supported range");
    }

    Graph g(static_cast<int>(n));
    long long bits = n * (n - 1) / 2;
    long long seen = 0;
    int row = 0, col = 1;
    while (seen < bits) {
        int group = data6();
        for (int shift = 5; shift >= 0; --shift) {
            bool bit = (group >> shift) & 1;
            if (seen < bits) {
                if (bit) g.add_edge(row, col);
                ++seen;
                if (++row == col) {
                    row = 0;
                    ++col;
                }
            } else if (bit) {
                throw parse_error("graph6: nonzero padding bits (corrupt input)");
            }
        }
    }
    if (pos != text.size()) throw parse_error("graph6: trailing garbage after data bytes");
    return g;
}

std::string serialize_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    } else {
        throw std::invalid_argument("graph6: vertex count above supported range");
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

// ---------------------------------------------------------------- edge list

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw parse_error("edgelist: missing \"n m\" header");
    if (n < 0 || m < 0) throw parse_error("edgelist: negative counts");
    if (n > 1000000) throw parse_error("edgelist: vertex count too large");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw parse_error("edgelist: fewer edges than declared");
        if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error("edgelist: vertex id out of range");
        if (u == v) throw parse_error("edgelist: self-loop");
        try {
            g.add_edge(static_cast<int>(u), static_cast<int>(v));
        } catch (const std::invalid_argument&) {
            throw parse_error("edgelist: duplicate edge");
        }
    }
    std::string tail;
    if (in >> tail) throw parse_error("edgelist: more data than declared");
    return g;
}

std::string serialize_edgelist(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out << u << ' ' << v << '\n';
    return out.str();
}

// ------------------------------------------------------------------ removal

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
    int n = g.vertex_count();
    for (int v : removed)
        if (v < 0 || v >= n) throw std::invalid_argument("remove_vertices: id out of range");

    InducedSubgraph out;
    out.from_old.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!removed.contains(v)) {
            out.from_old[v] = static_cast<int>(out.to_old.size());
            out.to_old.push_back(v);
        }
    }
    out.graph = Graph(static_cast<int>(out.to_old.size()));
    for (int v : out.to_old)
        for (int w : g.neighbors(v))
            if (v < w && out.from_old[w] != -1)
                out.graph.add_edge(out.from_old[v], out.from_old[w]);
    return out;
}

// ---------------------------------------------------------------- generator

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    return next() % bound;
}

Graph gen_hypothesis_graph(int n, int min_deg, std::uint64_t seed) {
    if (min_deg < 2) throw std::invalid_argument("gen: min_deg must be >= 2");
    if (min_deg >= n) throw std::invalid_argument("gen: infeasible parameters (min_deg >= n)");

    SplitMix64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i >= 1; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(order[i], order[j]);
    }

    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(order[i], order[(i + 1) % n]);

    while (true) {
        int v = 0;
        for (int u = 1; u < n; ++u)
            if (g.degree(u) < g.degree(v)) v = u;
        if (g.degree(v) >= min_deg) break;
        std::vector<int> candidates;
        for (int w = 0; w < n; ++w)
            if (w != v && !g.has_edge(v, w)) candidates.push_back(w);
        g.add_edge(v, candidates[rng.next_below(candidates.size())]);
    }
    return g;
}

}  // namespace nonsep

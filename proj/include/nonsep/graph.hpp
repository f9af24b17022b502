#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nonsep {

/// Thrown on malformed graph6 or edge-list input.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Sorted set of vertex ids (no duplicates).
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);
    VertexSet(std::initializer_list<int> ids);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    int min() const;  // requires non-empty

    VertexSet united(const VertexSet& other) const;
    VertexSet united(std::initializer_list<int> extra) const;
    bool intersects(const VertexSet& other) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<int>& ids() const { return ids_; }

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<int> ids_;  // sorted, unique
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// No self-loops, no parallel edges. Treat instances as immutable once built;
/// all algorithms in this library only read them.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);  // throws std::invalid_argument on loop/duplicate/range
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;  // n must be >= 1
    int max_degree() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    void check_vertex(int v) const;
};

// graph6: byte 63+n (or '~' + 3 bytes for 63 <= n <= 258047), then
// ceil(n(n-1)/2 / 6) data bytes, each 63 + a 6-bit group, upper triangle
// in column order (0,1),(0,2),(1,2),(0,3),..., zero padded.
Graph parse_graph6(const std::string& text);
std::string serialize_graph6(const Graph& g);

// Edge list: first line "n m", then m lines "u v" with 0 <= u,v < n, u != v.
Graph parse_edgelist(const std::string& text);
std::string serialize_edgelist(const Graph& g);

/// Induced subgraph with the id maps needed to lift results back.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;    // new id -> old id
    std::vector<int> from_old;  // old id -> new id, -1 for removed vertices
};
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed);

/// splitmix64, the public-domain 64-bit mixing generator. Fixed here so that
/// generated corpora reproduce bit for bit across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t next_below(std::uint64_t bound);  // next() % bound
private:
    std::uint64_t state_;
};

/// Deterministic generator of 2-connected graphs with minimum degree >= min_deg.
/// Builds a cycle over a seed-shuffled vertex order (Fisher-Yates, index drawn
/// as next() % (i+1)), then repeatedly adds an absent edge at the smallest-id
/// minimum-degree vertex, partner drawn as next() % #candidates, until the
/// degree target is met.
Graph gen_hypothesis_graph(int n, int min_deg, std::uint64_t seed);

}  // namespace nonsep

#pragma once

#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/graph.hpp"

// Definition-based reference implementations. Deliberately naive and written
// independently of the main algorithms; used as ground truth by the test
// suites and by the selfcheck command. Only suitable for small n.
namespace nonsep::brute {

/// Remove each vertex in turn and count components.
VertexSet cut_vertices(const Graph& g);

/// Maximal vertex sets whose induced subgraph is connected and has no cut
/// vertex (checked by removing every vertex). n <= ~16.
std::vector<VertexSet> blocks(const Graph& g);

/// Remove every vertex subset of size < k and test connectivity.
bool is_k_connected(const Graph& g, int k);

/// Exhaustive search over all (r at u, s at v) leaf assignments.
bool double_star_embeddable(const Graph& g, int u, int v, int r, int s,
                            const VertexSet& forbidden);

/// Canonical order for comparing block lists from different algorithms.
std::vector<VertexSet> sorted_blocks(std::vector<VertexSet> bs);

}  // namespace nonsep::brute

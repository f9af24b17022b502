#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

bool is_connected(const Graph& g);

/// Vertices whose removal increases the number of connected components.
/// Single depth-first pass (low-link).
VertexSet cut_vertices(const Graph& g);

/// All blocks (maximal subgraphs without a cut vertex), each as its vertex
/// set. Isolated vertices come back as singletons; every edge lies in exactly
/// one block.
std::vector<VertexSet> blocks(const Graph& g);

/// Connected, at least 3 vertices, no cut vertex. K2 and K1 do not qualify.
bool is_biconnected(const Graph& g);

/// True iff g has more than k vertices and no vertex set of size < k
/// disconnects it. Vertex-split max-flow between one fixed vertex and its
/// non-neighbors, plus all non-adjacent pairs of its neighbors.
bool is_k_connected(const Graph& g, int k);

/// Decomposition of G' = g - removed around a maximum block B: the components
/// H_1..H_l of G' - B in non-increasing size order, with their unique
/// B-attachment vertices where present. All vertex ids refer to g.
struct BlockStructure {
    VertexSet removed;
    VertexSet block;                        // B, a maximum block of G'
    std::vector<VertexSet> components;      // H_1..H_l, size desc, tie by min id
    std::vector<std::optional<int>> attach; // per component: the B vertex adjacent to it
    bool biconnected = false;               // l == 0 and G' 2-connected
    int component_count() const { return static_cast<int>(components.size()); }
};

// Ties between equal-sized maximum blocks go to the smallest contained vertex
// id (then lexicographically by content).
BlockStructure block_structure(const Graph& g, const VertexSet& removed);

/// The extremal measure: maximize block size first, then the sorted component
/// sizes lexicographically.
struct Potential {
    int block_size = 0;
    std::vector<int> component_sizes;  // non-increasing
    bool operator==(const Potential&) const = default;
};

Potential potential_of(const BlockStructure& bs);

// Missing entries compare as 0, which makes the order total.
std::strong_ordering compare_potential(const Potential& a, const Potential& b);

}  // namespace nonsep

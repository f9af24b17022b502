#pragma once

#include <string>
#include <vector>

#include "nonsep/connectivity.hpp"
#include "nonsep/embed.hpp"

namespace nonsep {

/// An input fails one of the guarantees' preconditions (2-connectivity,
/// minimum degree, supported tree order). The message names the failed one.
struct hypothesis_error : std::runtime_error {
    explicit hypothesis_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The search ran out of improving moves or hit the iteration cap on an input
/// that satisfies the hypotheses. Either a defect in this implementation or a
/// counterexample to the guarantee; never silent.
struct search_failure : std::runtime_error {
    explicit search_failure(const std::string& msg) : std::runtime_error(msg) {}
};

/// Which rule produced a proposal. Tags C2..C5b belong to the star search,
/// C3..C7c to the double-star search, ENDGAME to both.
enum class ClaimTag { C2, C3, C4, C5, C5a, C5b, C6i, C6ii, C7a, C7b, C7c, ENDGAME };
const char* to_string(ClaimTag tag);

/// Vertices that triggered a rule, by role name, plus the ear path for
/// endgame moves.
struct MoveWitness {
    std::vector<std::pair<std::string, int>> named;
    std::vector<int> path;
};

struct MoveCandidate {
    TreeVariant proposal;
    ClaimTag tag;
    MoveWitness witness;
};

struct SearchState {
    TreeVariant tree;
    BlockStructure bs;   // of g - V(tree)
    Potential pot;
    int iteration = 0;
    bool terminal() const { return bs.biconnected; }
};

struct TraceEntry {
    int iteration = 0;
    ClaimTag tag = ClaimTag::C2;
    Potential pot;
};

struct SearchOptions {
    bool best_improving = false;  // default: accept the first improving candidate
};

/// Replacement-tree proposals for a non-terminal state, in rule order.
/// Acceptance is decided by the caller via potential comparison.
std::vector<MoveCandidate> propose_star_moves(const Graph& g, const SearchState& st);
std::vector<MoveCandidate> propose_dstar_moves(const Graph& g, const SearchState& st);

struct SearchResult {
    SearchState state;                // terminal: g - V(tree) is 2-connected
    std::vector<TraceEntry> trace;    // one entry per accepted move
    Potential initial_pot;            // potential of the seed tree
};

/// Seeds a tree at a maximum-degree vertex (star) or maximum degree-sum edge
/// (double-star) and accepts strictly improving proposals until g - V(tree)
/// is 2-connected. Iteration cap n^2; exceeding it throws search_failure with
/// a full state dump.
SearchResult run_to_fixpoint(const Graph& g, const TreeSpec& spec,
                             const SearchOptions& opts = {});

struct StarSearch {
    StarTree tree;
    std::vector<TraceEntry> trace;
    Potential initial_pot;
};
struct DoubleStarSearch {
    DoubleStarTree tree;
    std::vector<TraceEntry> trace;
    Potential initial_pot;
};

/// Star of order m (m >= 4) whose removal keeps g 2-connected.
/// Requires is_k_connected(g, 2) and min degree >= m + 2.
StarSearch find_nonseparating_star(const Graph& g, int m,
                                   const SearchOptions& opts = {});

/// Double-star counterpart (spec.m >= 5; m = 4 double-stars are paths and are
/// not handled here; the oracle can still test them).
DoubleStarSearch find_nonseparating_double_star(const Graph& g, const TreeSpec& spec,
                                                const SearchOptions& opts = {});

}  // namespace nonsep

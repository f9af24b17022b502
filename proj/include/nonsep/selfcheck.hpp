#pragma once

#include <iosfwd>

namespace nonsep {

/// Runs the built-in invariant suites against the brute-force reference
/// implementations on seeded corpora: graph6 round-trips, blocks and cut
/// vertices, k-connectivity, and double-star embedding feasibility.
/// Prints one line per suite; returns true iff everything passed.
bool run_selfcheck(std::ostream& out);

}  // namespace nonsep

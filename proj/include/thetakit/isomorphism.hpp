#pragma once

#include <cstdint>
#include <vector>

#include "thetakit/multigraph.hpp"

namespace thetakit {

/// Multigraph isomorphism by invariant-guided backtracking. Intended for the
/// desk-scale graphs this project works with (n up to ~14).
bool isomorphic(const Multigraph& a, const Multigraph& b);

/// Cheap isomorphism-invariant hash: (n, m, degree sequence, bipartiteness,
/// multiplicity profile, edge degree pairs).
std::uint64_t fingerprint(const Multigraph& g);

/// Canonical code for a simple graph on n <= 8 vertices given as an adjacency
/// bitmask (bit 8*u+v). Equal codes iff isomorphic; used to deduplicate the
/// exhaustive small-graph corpus.
std::uint64_t canonical_code8(int n, std::uint64_t adj);

std::uint64_t adjacency_mask8(const Multigraph& g);
Multigraph graph_from_mask8(int n, std::uint64_t adj);

}  // namespace thetakit

#pragma once

#include <cstdint>

#include "thetakit/multigraph.hpp"

namespace thetakit {

/// Random matching covered multigraph on n vertices (n even >= 2), grown from
/// K2 by random single and double ear additions; every addition is
/// re-verified matching covered and rejected on failure. Deterministic per
/// seed.
Multigraph random_matching_covered(int n, std::uint64_t seed);

/// Same, then raised to minimum degree >= min_degree by adding edges between
/// vertices in different canonical classes (which keeps the graph matching
/// covered).
Multigraph random_matching_covered_min_degree(int n, int min_degree, std::uint64_t seed);

}  // namespace thetakit

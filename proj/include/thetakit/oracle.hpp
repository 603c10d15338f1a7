#pragma once

#include <array>
#include <optional>
#include <vector>

#include "thetakit/multigraph.hpp"
#include "thetakit/witness.hpp"

namespace thetakit {

/// Exhaustive search for a conformal bisubdivision of θ: for every vertex
/// pair, enumerate triples of internally disjoint odd paths and test the
/// complement for a perfect matching. Exponential; hard vertex cap.
/// First-found witness, deterministic via ordered adjacency.
std::optional<ThetaWitness> oracle_theta(const Multigraph& g, int vertex_cap = 14);

/// Conformal bisubdivision of K4: four branch vertices joined by six
/// internally disjoint odd paths, complement matchable.
struct K4Witness {
    std::array<int, 4> branch{};                // a < b < c < d
    std::array<std::vector<int>, 6> paths;      // ab, ac, ad, bc, bd, cd
    std::vector<int> complement_matching;
};

std::optional<K4Witness> oracle_k4(const Multigraph& g, int vertex_cap = 14);

bool verify_k4_witness(const Multigraph& g, const K4Witness& w);

/// Crossing discipline of witness paths against a tight cut: each path
/// crosses at most twice, double crossings have opposite parity and exclude
/// other crossing paths, and two crossing paths both cross at odd parity.
bool check_crossing_properties(const Multigraph& g, const ThetaWitness& w, const VertexSet& shore);

}  // namespace thetakit

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetakit/matching.hpp"
#include "thetakit/structure.hpp"

namespace thetakit {

/// A conformal bisubdivision of θ: branch vertices x, y joined by three
/// internally disjoint odd paths (edge id sequences oriented x -> y), plus a
/// perfect matching of G - V(H). Edge parity is positional: the edge at
/// 0-based index i of a path has odd parity iff i is even.
struct ThetaWitness {
    int x = -1;
    int y = -1;
    std::array<std::vector<int>, 3> paths;
    std::vector<int> complement_matching;
};

struct WitnessCheck {
    bool ok = false;
    std::vector<std::string> reasons;
    explicit operator bool() const { return ok; }
};

WitnessCheck verify_theta_witness(const Multigraph& g, const ThetaWitness& w);

nlohmann::json witness_to_json(const ThetaWitness& w);
ThetaWitness witness_from_json(const nlohmann::json& j);

/// Even cycle through two adjacent edges, built from the symmetric difference
/// of a perfect matching containing e1 and one containing e2. Edges are in
/// cyclic order starting at the shared vertex along e1; the complement is a
/// perfect matching of G - V(C) agreeing with the e1-matching off the cycle.
struct ConformalCycle {
    std::vector<int> edges;
    Matching complement;
};

ConformalCycle conformal_cycle_through_adjacent(const Multigraph& g, int e1, int e2);

/// Three pairwise adjacent edges of a bipartite matching covered graph lie in
/// a conformal bisubdivision of θ.
ThetaWitness theta_through_claw_bipartite(const Multigraph& g, int v, int e1, int e2, int e3);

/// Same statement at an isolated vertex z of G - B for a barrier B, by the
/// inductive proof: contract a nontrivial component, recurse, re-expand.
ThetaWitness theta_through_claw_barrier(const Multigraph& g, const VertexSet& b, int z, int e1,
                                        int e2, int e3);

/// Odd u-v path through component L of the 2-separation S with G - V(P)
/// matchable. Edges oriented u -> v; complement is a perfect matching of the
/// whole of G - V(P).
struct ConformalPath {
    std::vector<int> edges;
    Matching complement;
};

ConformalPath conformal_odd_path(const Multigraph& g, const TwoSeparation& s, const VertexSet& l);

/// Lift a witness found in the barrier-cut contraction G / complement(V(L))
/// back into G (case analysis on how the witness meets the cut).
ThetaWitness lift_witness_barrier(const Multigraph& g, const VertexSet& b, const VertexSet& l,
                                  const ThetaWitness& w_child);

/// Lift a witness found in the marked S-component of `component` back into G,
/// replacing a used marker edge by a conformal odd path through another side.
ThetaWitness lift_witness_2sep(const Multigraph& g, const TwoSeparation& s,
                               const VertexSet& component, const ThetaWitness& w_child);

/// Witness for a 2-separation whose removal leaves three or more components:
/// conformal odd u-v paths through three of them form the θ.
ThetaWitness theta_from_multi_separation(const Multigraph& g, const TwoSeparation& s);

struct WitnessSearch {
    std::optional<ThetaWitness> witness;
    bool certificate_omitted = false;  // brick beyond the search cap
};

/// Witness for a brick or brace outside {K2, C2, K4, Petersen}: braces via the
/// bipartite claw, bricks via bounded exhaustive search (module oracle).
WitnessSearch find_theta_witness_in_nondecomposable(const Multigraph& g, int search_cap = 16);

/// Walk an edge sequence from `start`; vertex sequence, or nullopt if broken.
std::optional<std::vector<int>> walk_vertices(const Multigraph& g, const std::vector<int>& edges,
                                              int start);

}  // namespace thetakit

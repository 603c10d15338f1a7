#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thetakit/multigraph.hpp"

namespace thetakit {

/// Set of pairwise vertex-disjoint edges, stored as sorted edge ids.
struct Matching {
    std::vector<int> edge_ids;

    int size() const { return static_cast<int>(edge_ids.size()); }
    bool is_perfect(const Multigraph& g) const { return 2 * size() == g.vertex_count(); }
};

bool is_valid_matching(const Multigraph& g, const std::vector<int>& edge_ids);

/// Maximum-cardinality matching via blossom contraction, O(V^3).
/// Deterministic: vertices and edges are scanned in ascending id order.
Matching maximum_matching(const Multigraph& g);

bool is_matchable(const Multigraph& g);

/// Matchability of G minus a vertex set (the workhorse for barrier queries).
bool is_matchable_excluding(const Multigraph& g, const VertexSet& removed);

int odd_components_count(const Multigraph& g, const VertexSet& s);

/// Perfect matching containing every edge of `force` and avoiding every edge
/// of `forbid`, if one exists. Forced edges sharing a vertex yield nullopt
/// (no matching can contain both). Bad edge ids throw.
std::optional<Matching> pm_with_forced_and_forbidden(const Multigraph& g,
                                                     std::span<const int> force,
                                                     std::span<const int> forbid);

std::optional<Matching> pm_with_forced(const Multigraph& g, std::span<const int> force);

struct CoverageReport {
    enum class Reason { Covered, Disconnected, NotMatchable, UncoveredEdge };
    bool covered = false;
    Reason reason = Reason::Covered;
    std::optional<int> offending_edge;
    std::optional<VertexSet> tutte_set;
};

/// Connected, n >= 2, and every edge lies in some perfect matching.
CoverageReport analyze_matching_covered(const Multigraph& g);
bool is_matching_covered(const Multigraph& g);

/// Edges e with G - e still matching covered. Precondition: g matching covered.
std::vector<int> removable_edges(const Multigraph& g);

/// For a non-matchable graph, a set S with c_odd(G - S) > |S| (Tutte witness),
/// extracted from the Gallai-Edmonds style structure.
VertexSet tutte_violator(const Multigraph& g);

}  // namespace thetakit

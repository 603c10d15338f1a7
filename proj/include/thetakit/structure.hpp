#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetakit/matching.hpp"
#include "thetakit/multigraph.hpp"

namespace thetakit {

/// 2-vertex-cut {u, v} that is not a barrier; all components of G - S are even.
struct TwoSeparation {
    int u = -1;
    int v = -1;
    std::vector<VertexSet> components;
};

/// Component L of G - S augmented with S and a marker edge uv.
/// Vertices of L' are sorted(V(L) ∪ S) renumbered 0..; the marker edge is the
/// last edge id. parent_edge maps child edges to original ids (-1 for marker).
struct MarkedComponent {
    Multigraph graph;
    int marker_edge = -1;
    int u_child = -1;  // child id of S's u
    int v_child = -1;
    VertexSet component;
    std::vector<int> parent_vertex;         // child vertex -> original vertex
    std::vector<int> child_vertex_of_parent;  // original vertex -> child vertex or -1
    std::vector<int> parent_edge;           // child edge -> original edge, -1 for marker
    std::vector<int> child_edge_of_parent;  // original edge -> child edge or -1
};

struct BarrierContraction {
    VertexSet component;
    ShoreContraction contraction;  // G / complement(V(L)); shore = V(L)
};

struct TightCutResult {
    bool tight = false;
    std::string reason;
    explicit operator bool() const { return tight; }
};

struct ElpCut {
    enum class Kind { BarrierCut, TwoSeparationCut };
    Kind kind = Kind::BarrierCut;
    VertexSet shore;        // one shore of the tight cut
    VertexSet barrier;      // set for BarrierCut
    VertexSet component;    // component giving the shore, for BarrierCut
    int sep_u = -1, sep_v = -1;  // for TwoSeparationCut
};

/// c_odd(G - B) == |B|.
bool is_barrier(const Multigraph& g, const VertexSet& b);

/// G - u - v not matchable, i.e. some barrier contains both (matchable g).
bool in_common_barrier(const Multigraph& g, int u, int v);

/// Maximal barriers of a matching covered graph, sorted by minimum vertex id.
/// Classes of the relation u ≡ v  ⇔  u = v or G - u - v is not matchable.
std::vector<VertexSet> canonical_partition(const Multigraph& g);

bool is_bicritical(const Multigraph& g);

/// All 2-separations {u,v}, u < v, in lexicographic order. Empty for n < 4.
std::vector<TwoSeparation> two_separations(const Multigraph& g);

std::vector<MarkedComponent> marked_components(const Multigraph& g, const TwoSeparation& s);

/// One contraction G / complement(V(L)) per component L of G - B,
/// sorted by component minimum vertex.
std::vector<BarrierContraction> barrier_contractions(const Multigraph& g, const VertexSet& b);

/// |C ∩ M| = 1 for every perfect matching M of ∂(shore). Checked by forcing
/// pairs of disjoint cut edges; even cuts report not tight with a reason.
TightCutResult is_tight_cut(const Multigraph& g, const VertexSet& shore);

/// A nontrivial tight cut that is a barrier cut or a 2-separation cut, or
/// nullopt iff g is a brick, a brace, or has order 2. Preference: barrier
/// cuts from maximal barriers, then from same-class vertex pairs, then
/// 2-separation cuts.
std::optional<ElpCut> elp_cut(const Multigraph& g);

/// Contract both edges at a degree-2 vertex with distinct neighbors.
/// The merged vertex takes the last id; other vertices keep relative order.
Multigraph bicontract(const Multigraph& g, int v0);

/// Exhaustive scan over all nontrivial odd shores (exponential; n <= 20).
/// Test support: cross-checks that elp_cut finds a cut iff one exists.
std::optional<VertexSet> find_nontrivial_tight_cut_exhaustive(const Multigraph& g);

}  // namespace thetakit

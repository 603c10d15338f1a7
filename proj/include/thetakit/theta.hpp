#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "thetakit/decomposition.hpp"
#include "thetakit/named_graphs.hpp"
#include "thetakit/witness.hpp"

namespace thetakit {

enum class Verdict { Free, Based };

enum class BasedReason {
    NonleafBrick,            // bicritical 3-connected nonbipartite, not K4 or Petersen
    NonleafBrace,            // bipartite bicritical beyond C2: two vertices, 3+ parallel edges
    TwoSepThreeComponents,   // 2-separation leaving three or more components
    AdjacentParallelCycle,   // parallel pair in a matching covered graph other than C2
};

const char* based_reason_string(BasedReason r);

/// Verdict tree mirroring the characterization: FREE trees end in the four
/// base graphs; BASED trees carry exactly one failing branch, with siblings
/// after the failure left unexplored.
struct CertNode {
    enum class Kind { Leaf, Barrier, TwoSeparation, BasedLeaf, Unexplored };
    Kind kind = Kind::Unexplored;

    NamedGraph leaf_name = NamedGraph::K2;  // Leaf

    VertexSet barrier;       // Barrier
    int sep_u = -1;          // TwoSeparation
    int sep_v = -1;
    std::vector<CertNode> children;
    std::vector<std::vector<int>> vertex_maps;  // child vertex -> this node's id, -1 for contraction

    BasedReason reason = BasedReason::NonleafBrick;  // BasedLeaf
    std::optional<ThetaWitness> leaf_witness;        // in the leaf node's own labeling
};

struct Certificate {
    Verdict verdict = Verdict::Free;
    CertNode tree;
    std::optional<ThetaWitness> witness;  // root-graph coordinates, BASED only
    bool witness_omitted = false;         // BASED beyond the witness search cap
};

struct NotMatchingCoveredError : std::invalid_argument {
    explicit NotMatchingCoveredError(CoverageReport r)
        : std::invalid_argument("input graph is not matching covered"), report(std::move(r)) {}
    CoverageReport report;
};

struct DeciderOptions {
    int search_cap = 16;             // brick witness search bound (vertices)
    bool even_cycle_fast_path = true;
};

/// Decide θ-freeness of a matching covered graph; FREE and BASED verdicts
/// both come with machine-checkable certificates.
Certificate is_theta_free(const Multigraph& g, const DeciderOptions& opt = {});

/// Union of two graphs sharing exactly the deleted edge: endpoints of e1 and
/// e2 are identified (min with min, or crossed when flip is set) and become
/// vertices 0 and 1; the shared edge is deleted.
Multigraph k2_sum(const Multigraph& g1, int e1, const Multigraph& g2, int e2, bool flip = false);

enum class Family { T, T0 };

/// Expression tree over the base members with K2-sum nodes; each node stores
/// the graph it builds and the glued child edges.
struct FamilyTree {
    Multigraph graph;
    std::optional<NamedGraph> leaf;  // C2, K4 or Petersen
    std::shared_ptr<const FamilyTree> left, right;
    int left_edge = -1;
    int right_edge = -1;
    bool flip = false;
};

/// Rebuild the graph a tree describes from its children (leaf name or K2-sum).
Multigraph evaluate_family_tree(const FamilyTree& t);

/// All members with at most max_n vertices, up to isomorphism, with their
/// construction trees; sorted by (order, size).
std::vector<FamilyTree> generate_family(Family which, int max_n);

std::optional<FamilyTree> recognize_family(const Multigraph& g, Family which);

struct BoundsReport {
    int n = 0, m = 0, b = 0;
    bool bound_i_holds = false, bound_i_tight = false;      // m <= 3n/2 + b - 1
    bool bound_ii_holds = false, bound_ii_tight = false;    // b <= n/2 - 1
    bool bound_iii_holds = false, bound_iii_tight = false;  // m <= 2n - 2
    bool in_t = false, in_t0 = false;
};

/// Evaluate the three size bounds and cross-check tightness against the
/// family recognizers. Input must be matching covered.
BoundsReport check_bounds(const Multigraph& g);

nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json family_tree_to_json(const FamilyTree& t);

}  // namespace thetakit

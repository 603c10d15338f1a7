#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetakit/structure.hpp"

namespace thetakit {

/// Nonbipartite, n >= 4, 3-connected, bicritical.
bool is_brick(const Multigraph& g);

/// Bipartite and free of nontrivial tight cuts.
bool is_brace(const Multigraph& g);

struct DecompositionTrace {
    std::optional<VertexSet> shore;  // cut applied at this node; empty at leaves
    std::string kind;                // "barrier", "two_separation", "policy", "brick", "brace"
    std::vector<DecompositionTrace> children;
};

struct DecompositionResult {
    std::vector<Multigraph> bricks;  // underlying simple graphs of the leaves
    std::vector<Multigraph> braces;
    int b = 0;
    DecompositionTrace trace;
};

/// Optional cut-choice hook for the decomposition. Returning nullopt falls
/// back to elp_cut; a returned shore must give a nontrivial tight cut.
using CutPolicy = std::function<std::optional<VertexSet>(const Multigraph&)>;

DecompositionResult tight_cut_decomposition(const Multigraph& g, const CutPolicy& policy = {});

int brick_count(const Multigraph& g);

nlohmann::json decomposition_to_json(const DecompositionResult& r);

}  // namespace thetakit

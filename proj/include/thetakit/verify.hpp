#pragma once

#include <string>

#include <json.hpp>

#include "thetakit/multigraph.hpp"

namespace thetakit {

/// Re-validate a certificate against a graph, independently of the decider:
/// every node's structural claim is recomputed from the graph, child graphs
/// are rebuilt deterministically, vertex maps are checked, and witnesses are
/// verified where attached. BASED verdicts need either a sound failing leaf
/// or a verified witness payload; FREE verdicts need a complete tree whose
/// leaves are the four base graphs.
bool verify_certificate(const Multigraph& g, const nlohmann::json& certificate,
                        std::string* why = nullptr);

}  // namespace thetakit

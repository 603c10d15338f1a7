#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "thetakit/multigraph.hpp"

namespace thetakit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge-list text format: header "n m", then m lines "u v" (0-indexed).
/// Repeated lines denote parallel edges; edge ids follow line order.
Multigraph parse_graph(const std::string& text);
std::string write_graph(const Multigraph& g);

nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);

}  // namespace thetakit

#pragma once

#include <optional>
#include <string>

#include "thetakit/multigraph.hpp"

namespace thetakit {

/// Catalogue of fixed graphs used throughout. Canonical labelings are
/// documented in docs/named_graphs.md.
enum class NamedGraph {
    K2,
    C2,
    Theta,
    K4,
    C4Star,
    Prism,
    K33,
    Cube,
    Petersen,
    T6,
    Bicorn,
};

Multigraph named_graph(NamedGraph name);

/// Cycle C_{2k} on vertices 0..2k-1, k >= 1 (k = 1 gives C2).
Multigraph even_cycle(int k);

/// Lookup by lowercase string: "k2", "c2", "theta", "k4", "c4star", "prism",
/// "k33", "cube", "petersen", "t6", "bicorn", or "c<2k>" for even cycles.
std::optional<Multigraph> named_graph_by_string(const std::string& name);

const char* named_graph_string(NamedGraph name);

}  // namespace thetakit

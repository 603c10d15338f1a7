#pragma once

#include <vector>

#include "thetakit/multigraph.hpp"

namespace thetakit {

/// All simple graphs on exactly n vertices (n <= 8), one per isomorphism
/// class, built by vertex augmentation with canonical-code deduplication.
std::vector<Multigraph> all_simple_graphs(int n);

/// Connected matching covered simple graphs with 2 <= order <= max_n (<= 8).
std::vector<Multigraph> matching_covered_corpus(int max_n);

}  // namespace thetakit

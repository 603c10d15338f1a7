#pragma once

// Graphs built for the suites: the barrier-cut and 2-separation figures and a
// few derived instances.

#include "thetakit/multigraph.hpp"
#include "thetakit/named_graphs.hpp"
#include "thetakit/theta.hpp"

namespace thetakit::testsupport {

using E = Multigraph::Edge;

/// Cubic graph on 12 vertices: stable barrier {0,1,2} on top, three triangles
/// below, each triangle vertex wired to one barrier vertex. Theta-free.
inline Multigraph barrier_triangles() {
    // 0,1,2 barrier; triangles {3,4,5}, {6,7,8}, {9,10,11}
    return Multigraph(12, {{3, 4}, {4, 5}, {5, 3}, {6, 7}, {7, 8}, {8, 6}, {9, 10}, {10, 11}, {11, 9},
                           // each triangle sees all three barrier vertices
                           {3, 0}, {4, 1}, {5, 2},
                           {6, 1}, {7, 2}, {8, 0},
                           {9, 2}, {10, 0}, {11, 1}});
}

/// barrier_triangles with one triangle collapsed to a single vertex z = 3,
/// still cubic: z is an isolated vertex of G - B for the barrier B = {0,1,2}.
inline Multigraph barrier_triangles_singleton() {
    return Multigraph(10, {{3, 0}, {3, 1}, {3, 2},
                           {4, 5}, {5, 6}, {6, 4},
                           {7, 8}, {8, 9}, {9, 7},
                           {4, 1}, {5, 2}, {6, 0},
                           {7, 2}, {8, 0}, {9, 1}});
}

/// barrier_triangles_singleton with one triangle vertex expanded into a
/// triangle: the component {4..8} is nontrivial and its contraction again
/// has a nontrivial component, so the claw recursion goes two levels deep.
inline Multigraph barrier_triangles_nested() {
    // z = 3; expanded component {4,5,6,7,8} (vertex 4 of the triangle 4-5-6
    // replaced by triangle 4-7-8); other triangle {9,10,11}
    return Multigraph(12, {{3, 0}, {3, 1}, {3, 2},
                           {4, 7}, {7, 8}, {8, 4},  // expansion triangle
                           {7, 5}, {8, 6}, {5, 6},  // rest of the component
                           {9, 10}, {10, 11}, {11, 9},
                           {4, 1}, {5, 2}, {6, 0},
                           {9, 2}, {10, 0}, {11, 1}});
}

/// Three internally disjoint odd paths of length 3 between 0 and 1: the
/// 2-separation {0,1} leaves three even components.
inline Multigraph three_path_separation() {
    return Multigraph(8, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}, {0, 6}, {6, 7}, {7, 1}});
}

/// Bicritical variant: three K4 lobes glued along the pair {0,1}; the first
/// 2-separation found leaves three components, so the decider reaches the
/// multi-component leaf directly.
inline Multigraph three_lobe_k4() {
    return Multigraph(8, {{2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                          {4, 5}, {0, 4}, {0, 5}, {1, 4}, {1, 5},
                          {6, 7}, {0, 6}, {0, 7}, {1, 6}, {1, 7}});
}

/// The 8-vertex graph whose every tight cut decomposition yields three K4s;
/// it carries a tight cut that is not an ELP cut.
inline Multigraph three_brick_graph() {
    return Multigraph(8, {{1, 2}, {2, 6}, {6, 7}, {7, 5}, {5, 1}, {1, 3}, {3, 7}, {7, 4}, {4, 2},
                          {3, 5}, {4, 6}, {0, 7}, {0, 1}, {0, 2}});
}

/// Shore {0, 2, 1} of three_brick_graph: the non-ELP tight cut of the figure
/// (here labeled c=0, p=1, q=2).
inline VertexSet three_brick_non_elp_shore() { return VertexSet({0, 1, 2}); }

inline Multigraph petersen_plus(int u, int v) {
    Multigraph p = named_graph(NamedGraph::Petersen);
    auto edges = p.edges();
    edges.push_back({u, v});
    return Multigraph(10, std::move(edges));
}

inline Multigraph k33_minus_edge() {
    return Multigraph(6, {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

inline Multigraph sum_k4_prism() {
    return k2_sum(named_graph(NamedGraph::K4), 0, named_graph(NamedGraph::Prism), 0);
}

}  // namespace thetakit::testsupport

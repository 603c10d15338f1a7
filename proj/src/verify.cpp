#include "thetakit/verify.hpp"

#include <algorithm>

#include "thetakit/isomorphism.hpp"
#include "thetakit/matching.hpp"
#include "thetakit/named_graphs.hpp"
#include "thetakit/theta.hpp"
#include "thetakit/witness.hpp"

namespace thetakit {

namespace {

struct Rejected {
    std::string why;
};

void reject(const std::string& why) { throw Rejected{why}; }

// the verifier keeps its own copies of the structural predicates so that a
// certificate is accepted on the strength of core graph/matching facts alone

bool barrier_holds(const Multigraph& g, const VertexSet& b) {
    int odd = 0;
    for (const auto& c : components_excluding(g, b))
        if (c.size() % 2 == 1) ++odd;
    return odd == b.size();
}

bool bicritical_holds(const Multigraph& g) {
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!is_matchable_excluding(g, VertexSet({u, v}))) return false;
    return true;
}

bool some_multi_separation(const Multigraph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto comps = components_excluding(g, VertexSet({u, v}));
            if (comps.size() < 3) continue;
            bool all_even = true;
            for (const auto& c : comps)
                if (c.size() % 2 != 0) all_even = false;
            if (all_even) return true;
        }
    return false;
}

struct WalkState {
    int based_leaves = 0;
    int unexplored = 0;
};

void walk(const Multigraph& g, const CertNode& node, WalkState& st) {
    switch (node.kind) {
        case CertNode::Kind::Leaf: {
            const Multigraph target = named_graph(node.leaf_name);
            bool ok = false;
            switch (node.leaf_name) {
                case NamedGraph::K2:
                case NamedGraph::C2:
                    ok = g.vertex_count() == 2 && g.edge_count() == target.edge_count();
                    break;
                default:
                    ok = g.vertex_count() == target.vertex_count() &&
                         g.edge_count() == target.edge_count() && isomorphic(g, target);
            }
            if (!ok) reject("leaf graph does not match its name");
            return;
        }
        case CertNode::Kind::Barrier: {
            if (node.barrier.size() < 2) reject("barrier node with a trivial barrier");
            if (!node.barrier.is_subset_of_range(g.vertex_count()))
                reject("barrier vertices out of range");
            if (!barrier_holds(g, node.barrier)) reject("claimed barrier is not a barrier");
            auto comps = components_excluding(g, node.barrier);
            if (comps.size() != node.children.size())
                reject("barrier children do not match the components");
            if (node.vertex_maps.size() != node.children.size())
                reject("barrier node without vertex maps");
            for (size_t i = 0; i < comps.size(); ++i) {
                auto sc = contract_shore(g, comps[i]);
                if (sc.parent_vertex != node.vertex_maps[i])
                    reject("stored vertex map disagrees with the contraction");
                walk(sc.graph, node.children[i], st);
            }
            return;
        }
        case CertNode::Kind::TwoSeparation: {
            if (!g.valid_vertex(node.sep_u) || !g.valid_vertex(node.sep_v) ||
                node.sep_u == node.sep_v)
                reject("two-separation vertices invalid");
            auto comps = components_excluding(g, VertexSet({node.sep_u, node.sep_v}));
            if (comps.size() != 2) reject("two-separation node needs exactly two components");
            for (const auto& c : comps)
                if (c.size() % 2 != 0) reject("two-separation has an odd component (a barrier)");
            if (node.children.size() != 2 || node.vertex_maps.size() != 2)
                reject("two-separation node needs two children with maps");
            TwoSeparation s{node.sep_u, node.sep_v, comps};
            auto marked = marked_components(g, s);
            for (size_t i = 0; i < 2; ++i) {
                if (marked[i].parent_vertex != node.vertex_maps[i])
                    reject("stored vertex map disagrees with the marked component");
                walk(marked[i].graph, node.children[i], st);
            }
            return;
        }
        case CertNode::Kind::BasedLeaf: {
            ++st.based_leaves;
            switch (node.reason) {
                case BasedReason::NonleafBrick: {
                    if (is_bipartite(g) || g.vertex_count() < 4) reject("brick leaf is not a brick");
                    if (!is_three_connected(g) || !bicritical_holds(g))
                        reject("brick leaf is not a brick");
                    if (!analyze_matching_covered(g).covered) reject("brick leaf not matching covered");
                    if (isomorphic(g, named_graph(NamedGraph::K4)) ||
                        (g.vertex_count() == 10 && g.edge_count() == 15 &&
                         isomorphic(g, named_graph(NamedGraph::Petersen))))
                        reject("brick leaf is one of the free bricks");
                    break;
                }
                case BasedReason::NonleafBrace:
                    if (g.vertex_count() != 2 || g.edge_count() < 3)
                        reject("brace leaf accepted only for two vertices with three or more edges");
                    break;
                case BasedReason::TwoSepThreeComponents:
                    if (!some_multi_separation(g))
                        reject("no 2-separation with three or more components");
                    break;
                case BasedReason::AdjacentParallelCycle:
                    if (!parallel_pair(g)) reject("no parallel pair present");
                    if (g.vertex_count() == 2 && g.edge_count() == 2) reject("C2 is theta-free");
                    if (!analyze_matching_covered(g).covered)
                        reject("parallel-pair leaf not matching covered");
                    break;
            }
            if (node.leaf_witness && !verify_theta_witness(g, *node.leaf_witness).ok)
                reject("leaf witness does not verify");
            return;
        }
        case CertNode::Kind::Unexplored:
            ++st.unexplored;
            return;
    }
}

}  // namespace

bool verify_certificate(const Multigraph& g, const nlohmann::json& certificate, std::string* why) {
    try {
        Certificate cert = certificate_from_json(certificate);
        if (!analyze_matching_covered(g).covered) reject("graph is not matching covered");

        WalkState st;
        walk(g, cert.tree, st);

        if (cert.verdict == Verdict::Free) {
            if (st.based_leaves != 0) reject("FREE verdict with a failing leaf");
            if (st.unexplored != 0) reject("FREE verdict with unexplored branches");
            if (cert.witness) reject("FREE verdict carries a witness");
        } else {
            if (st.based_leaves != 1) reject("BASED verdict needs exactly one failing branch");
            if (cert.witness && !verify_theta_witness(g, *cert.witness).ok)
                reject("root witness does not verify");
        }
        return true;
    } catch (const Rejected& r) {
        if (why) *why = r.why;
        return false;
    } catch (const std::exception& e) {
        if (why) *why = e.what();
        return false;
    }
}

}  // namespace thetakit

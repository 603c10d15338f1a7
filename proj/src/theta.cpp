#include "thetakit/theta.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "thetakit/isomorphism.hpp"

namespace thetakit {

namespace {

bool looks_like_k4(const Multigraph& g) {
    return g.vertex_count() == 4 && g.edge_count() == 6 && g.is_simple();
}

bool looks_like_petersen(const Multigraph& g) {
    if (g.vertex_count() != 10 || g.edge_count() != 15) return false;
    for (int v = 0; v < 10; ++v)
        if (g.degree(v) != 3) return false;
    return g.is_simple() && isomorphic(g, named_graph(NamedGraph::Petersen));
}

struct DecideResult {
    CertNode node;
    std::optional<ThetaWitness> witness;  // in the local graph's labeling
    bool witness_omitted = false;
};

bool subtree_based(const CertNode& node) {
    if (node.kind == CertNode::Kind::BasedLeaf) return true;
    for (const auto& c : node.children)
        if (subtree_based(c)) return true;
    return false;
}

DecideResult decide_rec(const Multigraph& g, const DeciderOptions& opt);

DecideResult decide_barrier(const Multigraph& g, const VertexSet& barrier,
                            const DeciderOptions& opt) {
    DecideResult out;
    out.node.kind = CertNode::Kind::Barrier;
    out.node.barrier = barrier;
    auto contractions = barrier_contractions(g, barrier);
    for (size_t i = 0; i < contractions.size(); ++i) {
        const auto& bc = contractions[i];
        DecideResult child = decide_rec(bc.contraction.graph, opt);
        out.node.vertex_maps.push_back(bc.contraction.parent_vertex);
        const bool based = subtree_based(child.node);
        out.node.children.push_back(std::move(child.node));
        if (based) {
            if (child.witness)
                out.witness = lift_witness_barrier(g, barrier, bc.component, *child.witness);
            out.witness_omitted = child.witness_omitted;
            // remaining components stay unexplored: one failing branch suffices
            for (size_t j = i + 1; j < contractions.size(); ++j) {
                out.node.children.emplace_back();
                out.node.vertex_maps.push_back(contractions[j].contraction.parent_vertex);
            }
            return out;
        }
    }
    return out;  // all children free
}

DecideResult decide_rec(const Multigraph& g, const DeciderOptions& opt) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    DecideResult out;

    // base graphs
    if (n == 2 && m == 1) {
        out.node.kind = CertNode::Kind::Leaf;
        out.node.leaf_name = NamedGraph::K2;
        return out;
    }
    if (n == 2 && m == 2) {
        out.node.kind = CertNode::Kind::Leaf;
        out.node.leaf_name = NamedGraph::C2;
        return out;
    }
    if (looks_like_k4(g)) {
        out.node.kind = CertNode::Kind::Leaf;
        out.node.leaf_name = NamedGraph::K4;
        return out;
    }
    if (looks_like_petersen(g)) {
        out.node.kind = CertNode::Kind::Leaf;
        out.node.leaf_name = NamedGraph::Petersen;
        return out;
    }

    // two vertices with three or more parallel edges: a brace beyond C2,
    // and already its own witness
    if (n == 2) {
        out.node.kind = CertNode::Kind::BasedLeaf;
        out.node.reason = BasedReason::NonleafBrace;
        ThetaWitness w;
        w.x = 0;
        w.y = 1;
        w.paths = {std::vector<int>{0}, std::vector<int>{1}, std::vector<int>{2}};
        out.node.leaf_witness = w;
        out.witness = w;
        return out;
    }

    // even cycles split along the even color class into C2 leaves; building
    // the certificate directly skips the matchability queries
    if (opt.even_cycle_fast_path && is_simple_even_cycle(g)) {
        auto cyc_walk = walk_vertices(g, [&] {
            std::vector<int> es;
            int v = 0;
            int prev_e = -1;
            for (int i = 0; i < n; ++i) {
                for (const auto& [to, e] : g.incident(v)) {
                    (void)to;
                    if (e != prev_e) {
                        es.push_back(e);
                        v = g.other_end(e, v);
                        prev_e = e;
                        break;
                    }
                }
            }
            return es;
        }(), 0);
        std::vector<int> evens, odds;
        {
            const auto& verts = *cyc_walk;
            for (int i = 0; i < n; ++i)
                ((i % 2 == 0) ? evens : odds).push_back(verts[static_cast<size_t>(i)]);
        }
        VertexSet barrier(std::move(evens));
        return decide_barrier(g, barrier, opt);
    }

    // nontrivial maximal barrier: recurse on the barrier-cut contractions
    auto classes = canonical_partition(g);
    for (const auto& cls : classes) {
        if (cls.size() >= 2) return decide_barrier(g, cls, opt);
    }

    // bicritical from here on
    if (!is_bipartite(g)) {
        if (is_three_connected(g)) {
            out.node.kind = CertNode::Kind::BasedLeaf;
            out.node.reason = BasedReason::NonleafBrick;
            WitnessSearch search = find_theta_witness_in_nondecomposable(g, opt.search_cap);
            out.node.leaf_witness = search.witness;
            out.witness = search.witness;
            out.witness_omitted = search.certificate_omitted;
            return out;
        }
        auto seps = two_separations(g);
        if (seps.empty()) throw std::logic_error("bicritical non-3-connected graph has no 2-cut");
        const TwoSeparation& s = seps.front();
        if (s.components.size() >= 3) {
            out.node.kind = CertNode::Kind::BasedLeaf;
            out.node.reason = BasedReason::TwoSepThreeComponents;
            ThetaWitness w = theta_from_multi_separation(g, s);
            out.node.leaf_witness = w;
            out.witness = w;
            return out;
        }
        out.node.kind = CertNode::Kind::TwoSeparation;
        out.node.sep_u = s.u;
        out.node.sep_v = s.v;
        auto marked = marked_components(g, s);
        for (size_t i = 0; i < marked.size(); ++i) {
            DecideResult child = decide_rec(marked[i].graph, opt);
            out.node.vertex_maps.push_back(marked[i].parent_vertex);
            const bool based = subtree_based(child.node);
            out.node.children.push_back(std::move(child.node));
            if (based) {
                if (child.witness)
                    out.witness = lift_witness_2sep(g, s, marked[i].component, *child.witness);
                out.witness_omitted = child.witness_omitted;
                for (size_t j = i + 1; j < marked.size(); ++j) {
                    out.node.children.emplace_back();
                    out.node.vertex_maps.push_back(marked[j].parent_vertex);
                }
                return out;
            }
        }
        return out;
    }

    // bipartite and bicritical of order four or more cannot happen
    throw std::logic_error("bipartite bicritical graph of order four or more");
}

}  // namespace

const char* based_reason_string(BasedReason r) {
    switch (r) {
        case BasedReason::NonleafBrick: return "nonleaf-brick";
        case BasedReason::NonleafBrace: return "nonleaf-brace";
        case BasedReason::TwoSepThreeComponents: return "2sep-3-components";
        case BasedReason::AdjacentParallelCycle: return "adjacent-parallel-cycle";
    }
    return "?";
}

Certificate is_theta_free(const Multigraph& g, const DeciderOptions& opt) {
    CoverageReport report = analyze_matching_covered(g);
    if (!report.covered) throw NotMatchingCoveredError(std::move(report));

    DecideResult r = decide_rec(g, opt);
    Certificate cert;
    cert.tree = std::move(r.node);
    const bool based = subtree_based(cert.tree);
    cert.verdict = based ? Verdict::Based : Verdict::Free;
    if (based) {
        cert.witness = std::move(r.witness);
        cert.witness_omitted = r.witness_omitted;
        assert(!cert.witness || verify_theta_witness(g, *cert.witness).ok);
    }
    return cert;
}

Multigraph k2_sum(const Multigraph& g1, int e1, const Multigraph& g2, int e2, bool flip) {
    if (!g1.valid_edge(e1) || !g2.valid_edge(e2)) throw std::invalid_argument("k2_sum: bad edge id");
    const auto& a = g1.edge(e1);
    const auto& b = g2.edge(e2);
    const int a0 = std::min(a.u, a.v), a1 = std::max(a.u, a.v);
    int b0 = std::min(b.u, b.v), b1 = std::max(b.u, b.v);
    if (flip) std::swap(b0, b1);

    // identified pair becomes {0, 1}; then g1's rest, then g2's rest
    std::vector<int> map1(static_cast<size_t>(g1.vertex_count()), -1);
    std::vector<int> map2(static_cast<size_t>(g2.vertex_count()), -1);
    map1[static_cast<size_t>(a0)] = 0;
    map1[static_cast<size_t>(a1)] = 1;
    map2[static_cast<size_t>(b0)] = 0;
    map2[static_cast<size_t>(b1)] = 1;
    int next = 2;
    for (int v = 0; v < g1.vertex_count(); ++v)
        if (map1[static_cast<size_t>(v)] == -1) map1[static_cast<size_t>(v)] = next++;
    for (int v = 0; v < g2.vertex_count(); ++v)
        if (map2[static_cast<size_t>(v)] == -1) map2[static_cast<size_t>(v)] = next++;

    std::vector<Multigraph::Edge> edges;
    for (int e = 0; e < g1.edge_count(); ++e) {
        if (e == e1) continue;
        const auto& ed = g1.edge(e);
        edges.push_back({map1[static_cast<size_t>(ed.u)], map1[static_cast<size_t>(ed.v)]});
    }
    for (int e = 0; e < g2.edge_count(); ++e) {
        if (e == e2) continue;
        const auto& ed = g2.edge(e);
        edges.push_back({map2[static_cast<size_t>(ed.u)], map2[static_cast<size_t>(ed.v)]});
    }
    return Multigraph(next, std::move(edges));
}

Multigraph evaluate_family_tree(const FamilyTree& t) {
    if (t.leaf) return named_graph(*t.leaf);
    if (!t.left || !t.right) throw std::invalid_argument("family tree node without children");
    return k2_sum(t.left->graph, t.left_edge, t.right->graph, t.right_edge, t.flip);
}

std::vector<FamilyTree> generate_family(Family which, int max_n) {
    if (max_n < 2) throw std::invalid_argument("generate_family: max_n must be >= 2");
    std::vector<std::shared_ptr<FamilyTree>> members;
    auto add_if_new = [&](FamilyTree&& t) {
        for (const auto& m : members)
            if (m->graph.vertex_count() == t.graph.vertex_count() &&
                m->graph.edge_count() == t.graph.edge_count() && isomorphic(m->graph, t.graph))
                return false;
        members.push_back(std::make_shared<FamilyTree>(std::move(t)));
        return true;
    };

    auto seed = [&](NamedGraph name) {
        Multigraph g = named_graph(name);
        if (g.vertex_count() > max_n) return;
        FamilyTree t;
        t.graph = std::move(g);
        t.leaf = name;
        add_if_new(std::move(t));
    };
    seed(NamedGraph::C2);
    seed(NamedGraph::K4);
    if (which == Family::T) seed(NamedGraph::Petersen);

    bool grew = true;
    while (grew) {
        grew = false;
        const size_t count = members.size();
        for (size_t i = 0; i < count; ++i) {
            for (size_t j = 0; j < count; ++j) {
                const auto& g1 = members[i]->graph;
                const auto& g2 = members[j]->graph;
                if (g1.vertex_count() + g2.vertex_count() - 2 > max_n) continue;
                for (int e1 = 0; e1 < g1.edge_count(); ++e1) {
                    for (int e2 = 0; e2 < g2.edge_count(); ++e2) {
                        for (bool flip : {false, true}) {
                            FamilyTree t;
                            t.graph = k2_sum(g1, e1, g2, e2, flip);
                            t.left = members[i];
                            t.right = members[j];
                            t.left_edge = e1;
                            t.right_edge = e2;
                            t.flip = flip;
                            if (add_if_new(std::move(t))) grew = true;
                        }
                    }
                }
            }
        }
    }

    std::vector<FamilyTree> out;
    for (const auto& m : members) out.push_back(*m);
    std::stable_sort(out.begin(), out.end(), [](const FamilyTree& a, const FamilyTree& b) {
        if (a.graph.vertex_count() != b.graph.vertex_count())
            return a.graph.vertex_count() < b.graph.vertex_count();
        return a.graph.edge_count() < b.graph.edge_count();
    });
    return out;
}

namespace {

struct RecognizeMemo {
    // failed isomorphism classes only: successful trees are rebuilt in the
    // caller's labeling so that the stored glue edges stay meaningful
    std::map<std::uint64_t, std::vector<Multigraph>> failed;
};

std::optional<FamilyTree> recognize_impl(const Multigraph& g, Family which, RecognizeMemo& memo) {
    const std::uint64_t fp = fingerprint(g);
    for (const auto& cand : memo.failed[fp])
        if (cand.vertex_count() == g.vertex_count() && cand.edge_count() == g.edge_count() &&
            isomorphic(cand, g))
            return std::nullopt;

    if (g.vertex_count() == 2) {
        if (g.edge_count() == 2) {
            FamilyTree t;
            t.graph = g;
            t.leaf = NamedGraph::C2;
            return t;
        }
        memo.failed[fp].push_back(g);
        return std::nullopt;
    }
    if (looks_like_k4(g)) {
        FamilyTree t;
        t.graph = g;
        t.leaf = NamedGraph::K4;
        return t;
    }
    if (which == Family::T && looks_like_petersen(g)) {
        FamilyTree t;
        t.graph = g;
        t.leaf = NamedGraph::Petersen;
        return t;
    }

    for (const auto& s : two_separations(g)) {
        if (s.components.size() != 2) continue;
        auto marked = marked_components(g, s);
        auto left = recognize_impl(marked[0].graph, which, memo);
        if (!left) continue;
        auto right = recognize_impl(marked[1].graph, which, memo);
        if (!right) continue;
        FamilyTree t;
        t.graph = g;
        t.left = std::make_shared<FamilyTree>(std::move(*left));
        t.right = std::make_shared<FamilyTree>(std::move(*right));
        t.left_edge = marked[0].marker_edge;
        t.right_edge = marked[1].marker_edge;
        return t;
    }
    memo.failed[fp].push_back(g);
    return std::nullopt;
}

}  // namespace

std::optional<FamilyTree> recognize_family(const Multigraph& g, Family which) {
    RecognizeMemo memo;
    return recognize_impl(g, which, memo);
}

BoundsReport check_bounds(const Multigraph& g) {
    if (!is_matching_covered(g)) throw std::invalid_argument("check_bounds: input not matching covered");
    BoundsReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.b = brick_count(g);
    const int lhs_i = 2 * r.m, rhs_i = 3 * r.n + 2 * r.b - 2;
    r.bound_i_holds = lhs_i <= rhs_i;
    r.bound_i_tight = lhs_i == rhs_i;
    const int lhs_ii = 2 * r.b, rhs_ii = r.n - 2;
    r.bound_ii_holds = lhs_ii <= rhs_ii;
    r.bound_ii_tight = lhs_ii == rhs_ii;
    const int lhs_iii = r.m, rhs_iii = 2 * r.n - 2;
    r.bound_iii_holds = lhs_iii <= rhs_iii;
    r.bound_iii_tight = lhs_iii == rhs_iii;
    r.in_t = recognize_family(g, Family::T).has_value();
    r.in_t0 = recognize_family(g, Family::T0).has_value();
    return r;
}

namespace {

nlohmann::json node_to_json(const CertNode& n) {
    nlohmann::json j;
    switch (n.kind) {
        case CertNode::Kind::Leaf:
            j["kind"] = "leaf";
            j["name"] = named_graph_string(n.leaf_name);
            break;
        case CertNode::Kind::Barrier: {
            j["kind"] = "barrier";
            j["barrier"] = n.barrier.ids();
            break;
        }
        case CertNode::Kind::TwoSeparation:
            j["kind"] = "two_separation";
            j["separation"] = {n.sep_u, n.sep_v};
            break;
        case CertNode::Kind::BasedLeaf:
            j["kind"] = "based";
            j["reason"] = based_reason_string(n.reason);
            if (n.leaf_witness) j["witness"] = witness_to_json(*n.leaf_witness);
            break;
        case CertNode::Kind::Unexplored:
            j["kind"] = "unexplored";
            break;
    }
    if (!n.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : n.children) kids.push_back(node_to_json(c));
        j["children"] = std::move(kids);
        j["vertex_maps"] = n.vertex_maps;
    }
    return j;
}

CertNode node_from_json(const nlohmann::json& j) {
    CertNode n;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "leaf") {
        n.kind = CertNode::Kind::Leaf;
        const std::string name = j.at("name").get<std::string>();
        if (name == "k2") n.leaf_name = NamedGraph::K2;
        else if (name == "c2") n.leaf_name = NamedGraph::C2;
        else if (name == "k4") n.leaf_name = NamedGraph::K4;
        else if (name == "petersen") n.leaf_name = NamedGraph::Petersen;
        else throw std::invalid_argument("certificate leaf must be one of the base graphs");
    } else if (kind == "barrier") {
        n.kind = CertNode::Kind::Barrier;
        n.barrier = VertexSet(j.at("barrier").get<std::vector<int>>());
    } else if (kind == "two_separation") {
        n.kind = CertNode::Kind::TwoSeparation;
        auto sep = j.at("separation").get<std::vector<int>>();
        if (sep.size() != 2) throw std::invalid_argument("separation must list two vertices");
        n.sep_u = sep[0];
        n.sep_v = sep[1];
    } else if (kind == "based") {
        n.kind = CertNode::Kind::BasedLeaf;
        const std::string reason = j.at("reason").get<std::string>();
        if (reason == "nonleaf-brick") n.reason = BasedReason::NonleafBrick;
        else if (reason == "nonleaf-brace") n.reason = BasedReason::NonleafBrace;
        else if (reason == "2sep-3-components") n.reason = BasedReason::TwoSepThreeComponents;
        else if (reason == "adjacent-parallel-cycle") n.reason = BasedReason::AdjacentParallelCycle;
        else throw std::invalid_argument("unknown based reason");
        if (j.contains("witness")) n.leaf_witness = witness_from_json(j.at("witness"));
    } else if (kind == "unexplored") {
        n.kind = CertNode::Kind::Unexplored;
    } else {
        throw std::invalid_argument("unknown certificate node kind");
    }
    if (j.contains("children")) {
        for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
        n.vertex_maps = j.at("vertex_maps").get<std::vector<std::vector<int>>>();
        if (n.vertex_maps.size() != n.children.size())
            throw std::invalid_argument("vertex_maps must match children");
    }
    return n;
}

}  // namespace

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    j["format"] = "theta-kit-certificate-v1";
    j["verdict"] = c.verdict == Verdict::Free ? "FREE" : "BASED";
    j["tree"] = node_to_json(c.tree);
    if (c.witness) j["witness"] = witness_to_json(*c.witness);
    if (c.witness_omitted) j["witness_omitted"] = true;
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    Certificate c;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "FREE") c.verdict = Verdict::Free;
    else if (verdict == "BASED") c.verdict = Verdict::Based;
    else throw std::invalid_argument("verdict must be FREE or BASED");
    c.tree = node_from_json(j.at("tree"));
    if (j.contains("witness")) c.witness = witness_from_json(j.at("witness"));
    if (j.contains("witness_omitted")) c.witness_omitted = j.at("witness_omitted").get<bool>();
    return c;
}

nlohmann::json family_tree_to_json(const FamilyTree& t) {
    nlohmann::json j;
    if (t.leaf) {
        j["kind"] = "leaf";
        j["name"] = named_graph_string(*t.leaf);
    } else {
        j["kind"] = "k2_sum";
        j["left"] = family_tree_to_json(*t.left);
        j["right"] = family_tree_to_json(*t.right);
        j["left_edge"] = t.left_edge;
        j["right_edge"] = t.right_edge;
        if (t.flip) j["flip"] = true;
    }
    return j;
}

}  // namespace thetakit

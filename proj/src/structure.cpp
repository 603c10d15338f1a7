#include "thetakit/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace thetakit {

bool is_barrier(const Multigraph& g, const VertexSet& b) {
    if (!b.is_subset_of_range(g.vertex_count())) throw std::invalid_argument("barrier set out of range");
    return odd_components_count(g, b) == b.size();
}

bool in_common_barrier(const Multigraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("in_common_barrier: vertices must differ");
    return !is_matchable_excluding(g, VertexSet({u, v}));
}

std::vector<VertexSet> canonical_partition(const Multigraph& g) {
    if (!is_matching_covered(g)) throw std::invalid_argument("canonical_partition: input not matching covered");
    const int n = g.vertex_count();
    std::vector<int> cls(static_cast<size_t>(n), -1);
    std::vector<VertexSet> out;
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        if (cls[static_cast<size_t>(v)] != -1) continue;
        std::vector<int> members{v};
        cls[static_cast<size_t>(v)] = static_cast<int>(classes.size());
        for (int u = v + 1; u < n; ++u) {
            if (cls[static_cast<size_t>(u)] != -1) continue;
            if (in_common_barrier(g, v, u)) {
                members.push_back(u);
                cls[static_cast<size_t>(u)] = cls[static_cast<size_t>(v)];
            }
        }
        classes.push_back(std::move(members));
    }
    for (auto& m : classes) out.emplace_back(std::move(m));
    return out;
}

bool is_bicritical(const Multigraph& g) {
    if (!is_matchable(g)) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (in_common_barrier(g, u, v)) return false;
    return true;
}

std::vector<TwoSeparation> two_separations(const Multigraph& g) {
    std::vector<TwoSeparation> out;
    const int n = g.vertex_count();
    if (n < 4) return out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            auto comps = components_excluding(g, VertexSet({u, v}));
            if (comps.size() < 2) continue;
            bool all_even = true;
            for (const auto& c : comps)
                if (c.size() % 2 != 0) all_even = false;
            if (!all_even) continue;  // a barrier of size two, not a 2-separation
            out.push_back({u, v, std::move(comps)});
        }
    }
    return out;
}

std::vector<MarkedComponent> marked_components(const Multigraph& g, const TwoSeparation& s) {
    {
        auto comps = components_excluding(g, VertexSet({s.u, s.v}));
        if (comps.size() < 2) throw std::invalid_argument("marked_components: not a 2-vertex-cut");
        for (const auto& c : comps)
            if (c.size() % 2 != 0)
                throw std::invalid_argument("marked_components: cut is a barrier, not a 2-separation");
    }
    std::vector<MarkedComponent> out;
    for (const auto& comp : s.components) {
        MarkedComponent mc;
        mc.component = comp;
        std::vector<int> verts = comp.ids();
        verts.push_back(s.u);
        verts.push_back(s.v);
        std::sort(verts.begin(), verts.end());
        mc.parent_vertex = verts;
        mc.child_vertex_of_parent.assign(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < verts.size(); ++i)
            mc.child_vertex_of_parent[static_cast<size_t>(verts[i])] = static_cast<int>(i);
        mc.u_child = mc.child_vertex_of_parent[static_cast<size_t>(s.u)];
        mc.v_child = mc.child_vertex_of_parent[static_cast<size_t>(s.v)];

        std::vector<Multigraph::Edge> edges;
        mc.child_edge_of_parent.assign(static_cast<size_t>(g.edge_count()), -1);
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& ed = g.edge(e);
            int cu = mc.child_vertex_of_parent[static_cast<size_t>(ed.u)];
            int cv = mc.child_vertex_of_parent[static_cast<size_t>(ed.v)];
            if (cu == -1 || cv == -1) continue;
            // edges between u and v stay with every marked component
            mc.child_edge_of_parent[static_cast<size_t>(e)] = static_cast<int>(edges.size());
            mc.parent_edge.push_back(e);
            edges.push_back({cu, cv});
        }
        mc.marker_edge = static_cast<int>(edges.size());
        mc.parent_edge.push_back(-1);
        edges.push_back({mc.u_child, mc.v_child});
        mc.graph = Multigraph(static_cast<int>(verts.size()), std::move(edges));
        out.push_back(std::move(mc));
    }
    return out;
}

std::vector<BarrierContraction> barrier_contractions(const Multigraph& g, const VertexSet& b) {
    if (!is_barrier(g, b)) throw std::invalid_argument("barrier_contractions: set is not a barrier");
    std::vector<BarrierContraction> out;
    for (const auto& comp : components_excluding(g, b)) {
        BarrierContraction bc;
        bc.component = comp;
        bc.contraction = contract_shore(g, comp);
        out.push_back(std::move(bc));
    }
    return out;
}

TightCutResult is_tight_cut(const Multigraph& g, const VertexSet& shore) {
    Cut c = cut(g, shore);
    if (!c.odd) return {false, "even cut: both shores must be odd"};
    if (c.trivial) return {true, "trivial cut"};
    // tight iff no perfect matching uses two cut edges; adjacent cut edges can
    // never be in a matching together, so disjoint pairs suffice
    for (size_t i = 0; i < c.edge_ids.size(); ++i) {
        for (size_t j = i + 1; j < c.edge_ids.size(); ++j) {
            const auto& e1 = g.edge(c.edge_ids[i]);
            const auto& e2 = g.edge(c.edge_ids[j]);
            if (e1.u == e2.u || e1.u == e2.v || e1.v == e2.u || e1.v == e2.v) continue;
            std::vector<int> force{c.edge_ids[i], c.edge_ids[j]};
            if (pm_with_forced(g, force).has_value())
                return {false, "a perfect matching uses two cut edges"};
        }
    }
    return {true, ""};
}

namespace {

std::optional<ElpCut> barrier_cut_from(const Multigraph& g, const VertexSet& b) {
    auto comps = components_excluding(g, b);
    int odd = 0;
    for (const auto& c : comps)
        if (c.size() % 2 == 1) ++odd;
    if (odd != b.size()) return std::nullopt;  // not a barrier
    for (const auto& comp : comps) {
        if (comp.size() < 3) continue;
        if (g.vertex_count() - comp.size() < 2) continue;
        ElpCut cut;
        cut.kind = ElpCut::Kind::BarrierCut;
        cut.shore = comp;
        cut.barrier = b;
        cut.component = comp;
        return cut;
    }
    return std::nullopt;
}

}  // namespace

namespace {

/// Bipartite barrier-cut finder. Every nontrivial tight cut of a bipartite
/// matching covered graph corresponds to a set S on one side with exactly
/// |S| + 1 neighbors; such sets surface as Hall violators after deleting two
/// vertices from each side. The located cut is the barrier cut with barrier
/// N(S) and component V - S - N(S).
std::optional<ElpCut> bipartite_barrier_cut(const Multigraph& g, const std::vector<int>& color) {
    const int n = g.vertex_count();
    std::vector<int> side_a, side_b;
    for (int v = 0; v < n; ++v) ((color[static_cast<size_t>(v)] == 0) ? side_a : side_b).push_back(v);

    auto try_sides = [&](const std::vector<int>& a_side,
                         const std::vector<int>& b_side) -> std::optional<ElpCut> {
        for (size_t i = 0; i < a_side.size(); ++i) {
            for (size_t j = i + 1; j < a_side.size(); ++j) {
                for (size_t k = 0; k < b_side.size(); ++k) {
                    for (size_t l = k + 1; l < b_side.size(); ++l) {
                        VertexSet removed({a_side[i], a_side[j], b_side[k], b_side[l]});
                        if (is_matchable_excluding(g, removed)) continue;
                        // Hall violator on the b side of the reduced graph
                        auto sub = induced_subgraph(g, removed.complement(n));
                        Matching m = maximum_matching(sub.graph);
                        std::vector<int> mate(static_cast<size_t>(sub.graph.vertex_count()), -1);
                        for (int e : m.edge_ids) {
                            const auto& ed = sub.graph.edge(e);
                            mate[static_cast<size_t>(ed.u)] = ed.v;
                            mate[static_cast<size_t>(ed.v)] = ed.u;
                        }
                        auto is_b = [&](int child) {
                            return color[static_cast<size_t>(
                                       sub.parent_vertex[static_cast<size_t>(child)])] ==
                                   color[static_cast<size_t>(b_side[0])];
                        };
                        std::vector<char> in_s(static_cast<size_t>(sub.graph.vertex_count()), 0);
                        std::vector<char> in_t(static_cast<size_t>(sub.graph.vertex_count()), 0);
                        std::vector<int> queue;
                        for (int v = 0; v < sub.graph.vertex_count(); ++v)
                            if (is_b(v) && mate[static_cast<size_t>(v)] == -1) {
                                in_s[static_cast<size_t>(v)] = 1;
                                queue.push_back(v);
                            }
                        if (queue.empty()) continue;
                        while (!queue.empty()) {
                            int b0 = queue.back();
                            queue.pop_back();
                            for (const auto& [to, e] : sub.graph.incident(b0)) {
                                (void)e;
                                if (in_t[static_cast<size_t>(to)]) continue;
                                in_t[static_cast<size_t>(to)] = 1;
                                int back = mate[static_cast<size_t>(to)];
                                if (back != -1 && !in_s[static_cast<size_t>(back)]) {
                                    in_s[static_cast<size_t>(back)] = 1;
                                    queue.push_back(back);
                                }
                            }
                        }
                        // S in original ids, with its full neighborhood there
                        std::vector<int> s_orig;
                        for (int v = 0; v < sub.graph.vertex_count(); ++v)
                            if (in_s[static_cast<size_t>(v)])
                                s_orig.push_back(sub.parent_vertex[static_cast<size_t>(v)]);
                        VertexSet xb(std::move(s_orig));
                        std::vector<int> nbr;
                        for (int v : xb.ids())
                            for (const auto& [to, e] : g.incident(v)) {
                                (void)e;
                                nbr.push_back(to);
                            }
                        VertexSet xa(std::move(nbr));
                        if (xa.size() != xb.size() + 1) continue;  // surplus too large here
                        std::vector<int> shore_ids = xa.ids();
                        shore_ids.insert(shore_ids.end(), xb.ids().begin(), xb.ids().end());
                        VertexSet x(std::move(shore_ids));
                        if (x.size() < 3 || n - x.size() < 3) continue;
                        ElpCut cut;
                        cut.kind = ElpCut::Kind::BarrierCut;
                        cut.barrier = xa;
                        cut.component = x.complement(n);
                        cut.shore = cut.component;
                        return cut;
                    }
                }
            }
        }
        return std::nullopt;
    };

    if (auto c = try_sides(side_a, side_b)) return c;
    return try_sides(side_b, side_a);
}

}  // namespace

std::optional<ElpCut> elp_cut(const Multigraph& g) {
    if (g.vertex_count() < 4) return std::nullopt;
    auto classes = canonical_partition(g);

    // 1. nontrivial barrier cuts from maximal barriers. In a nonbipartite
    // graph this is already complete for barrier cuts: a stable barrier whose
    // components are all singletons would force a bipartition.
    for (const auto& b : classes) {
        if (b.size() < 2) continue;
        if (auto c = barrier_cut_from(g, b)) return c;
    }
    // 2. bipartite graphs: tight cuts live on neighborhood-tight sets that
    // maximal barriers can miss; find one through Hall violators
    if (auto color = bipartition(g)) {
        if (auto c = bipartite_barrier_cut(g, *color)) return c;
    }
    // 3. 2-separation cuts: shore = smallest component plus u
    auto seps = two_separations(g);
    if (!seps.empty()) {
        const auto& s = seps.front();
        std::vector<int> shore = s.components.front().ids();
        shore.push_back(s.u);
        ElpCut cut;
        cut.kind = ElpCut::Kind::TwoSeparationCut;
        cut.shore = VertexSet(std::move(shore));
        cut.sep_u = s.u;
        cut.sep_v = s.v;
        return cut;
    }
    return std::nullopt;
}

std::optional<VertexSet> find_nontrivial_tight_cut_exhaustive(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("exhaustive tight cut scan capped at 20 vertices");
    if (n < 6) return std::nullopt;  // nontrivial odd cuts need both shores >= 3
    for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
        // vertex n-1 always on the far shore, so each cut is tried once
        int size = std::popcount(mask);
        if (size % 2 == 0 || size < 3 || n - size < 3) continue;
        std::vector<int> shore;
        for (int v = 0; v < n - 1; ++v)
            if (mask & (1ULL << v)) shore.push_back(v);
        VertexSet x(std::move(shore));
        if (is_tight_cut(g, x)) return x;
    }
    return std::nullopt;
}

Multigraph bicontract(const Multigraph& g, int v0) {
    if (!g.valid_vertex(v0)) throw std::invalid_argument("bicontract: bad vertex");
    if (g.degree(v0) != 2) throw std::invalid_argument("bicontract: vertex degree must be 2");
    int v1 = g.incident(v0)[0].first;
    int v2 = g.incident(v0)[1].first;
    if (v1 == v2) throw std::invalid_argument("bicontract: neighbors coincide (parallel pair)");

    const int n = g.vertex_count();
    std::vector<int> map(static_cast<size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v != v0 && v != v1 && v != v2) map[static_cast<size_t>(v)] = next++;
    const int merged = next;
    map[static_cast<size_t>(v0)] = merged;
    map[static_cast<size_t>(v1)] = merged;
    map[static_cast<size_t>(v2)] = merged;

    std::vector<Multigraph::Edge> edges;
    for (const auto& ed : g.edges()) {
        int u = map[static_cast<size_t>(ed.u)];
        int v = map[static_cast<size_t>(ed.v)];
        if (u == v) continue;  // the two contracted edges; loops cannot arise in matching covered inputs
        edges.push_back({u, v});
    }
    return Multigraph(merged + 1, std::move(edges));
}

}  // namespace thetakit

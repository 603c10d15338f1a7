#include "thetakit/matching.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace thetakit {

namespace {

/// Blossom-contraction maximum matching on a simple skeleton given as sorted
/// adjacency lists. match[v] is the partner or -1.
class Blossom {
public:
    explicit Blossom(const std::vector<std::vector<int>>& adj)
        : n_(static_cast<int>(adj.size())), adj_(adj) {
        match_.assign(static_cast<size_t>(n_), -1);
    }

    const std::vector<int>& solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<size_t>(v)] == -1 && !adj_[static_cast<size_t>(v)].empty()) {
                int leaf = find_augmenting_path(v);
                if (leaf != -1) augment(leaf);
            }
        }
        return match_;
    }

private:
    void augment(int v) {
        while (v != -1) {
            int pv = parent_[static_cast<size_t>(v)];
            int ppv = match_[static_cast<size_t>(pv)];
            match_[static_cast<size_t>(v)] = pv;
            match_[static_cast<size_t>(pv)] = v;
            v = ppv;
        }
    }

    int lca(int a, int b) const {
        std::vector<char> seen(static_cast<size_t>(n_), 0);
        int x = a;
        for (;;) {
            x = base_[static_cast<size_t>(x)];
            seen[static_cast<size_t>(x)] = 1;
            if (match_[static_cast<size_t>(x)] == -1) break;
            x = parent_[static_cast<size_t>(match_[static_cast<size_t>(x)])];
        }
        int y = b;
        for (;;) {
            y = base_[static_cast<size_t>(y)];
            if (seen[static_cast<size_t>(y)]) return y;
            y = parent_[static_cast<size_t>(match_[static_cast<size_t>(y)])];
        }
    }

    void mark_path(int v, int b, int child, std::vector<char>& in_blossom) {
        while (base_[static_cast<size_t>(v)] != b) {
            in_blossom[static_cast<size_t>(base_[static_cast<size_t>(v)])] = 1;
            in_blossom[static_cast<size_t>(base_[static_cast<size_t>(match_[static_cast<size_t>(v)])])] = 1;
            parent_[static_cast<size_t>(v)] = child;
            child = match_[static_cast<size_t>(v)];
            v = parent_[static_cast<size_t>(child)];
        }
    }

    int find_augmenting_path(int root) {
        used_.assign(static_cast<size_t>(n_), 0);
        parent_.assign(static_cast<size_t>(n_), -1);
        base_.resize(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) base_[static_cast<size_t>(i)] = i;

        used_[static_cast<size_t>(root)] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<size_t>(v)]) {
                if (base_[static_cast<size_t>(v)] == base_[static_cast<size_t>(to)] ||
                    match_[static_cast<size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<size_t>(to)] != -1 &&
                     parent_[static_cast<size_t>(match_[static_cast<size_t>(to)])] != -1)) {
                    // odd cycle: contract the blossom down to the lca base
                    int cur_base = lca(v, to);
                    std::vector<char> in_blossom(static_cast<size_t>(n_), 0);
                    mark_path(v, cur_base, to, in_blossom);
                    mark_path(to, cur_base, v, in_blossom);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom[static_cast<size_t>(base_[static_cast<size_t>(i)])]) {
                            base_[static_cast<size_t>(i)] = cur_base;
                            if (!used_[static_cast<size_t>(i)]) {
                                used_[static_cast<size_t>(i)] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[static_cast<size_t>(to)] == -1) {
                    parent_[static_cast<size_t>(to)] = v;
                    if (match_[static_cast<size_t>(to)] == -1) return to;
                    used_[static_cast<size_t>(match_[static_cast<size_t>(to)])] = 1;
                    q.push(match_[static_cast<size_t>(to)]);
                }
            }
        }
        return -1;
    }

    int n_;
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_;
};

struct Skeleton {
    std::vector<std::vector<int>> adj;
    // representative (smallest allowed) edge id per ordered vertex pair
    std::map<std::pair<int, int>, int> rep;
};

Skeleton build_skeleton(const Multigraph& g, const std::vector<char>* removed_vertex,
                        const std::vector<char>* forbidden_edge) {
    Skeleton sk;
    sk.adj.assign(static_cast<size_t>(g.vertex_count()), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        if (forbidden_edge && (*forbidden_edge)[static_cast<size_t>(e)]) continue;
        const auto& ed = g.edge(e);
        if (removed_vertex && ((*removed_vertex)[static_cast<size_t>(ed.u)] ||
                               (*removed_vertex)[static_cast<size_t>(ed.v)]))
            continue;
        auto key = std::make_pair(std::min(ed.u, ed.v), std::max(ed.u, ed.v));
        auto [it, fresh] = sk.rep.emplace(key, e);
        if (fresh) {
            sk.adj[static_cast<size_t>(ed.u)].push_back(ed.v);
            sk.adj[static_cast<size_t>(ed.v)].push_back(ed.u);
        } else if (e < it->second) {
            it->second = e;
        }
    }
    for (auto& list : sk.adj) std::sort(list.begin(), list.end());
    return sk;
}

Matching matching_from(const Skeleton& sk, const std::vector<int>& match) {
    Matching m;
    for (int v = 0; v < static_cast<int>(match.size()); ++v) {
        int u = match[static_cast<size_t>(v)];
        if (u > v) m.edge_ids.push_back(sk.rep.at({v, u}));
    }
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    return m;
}

Matching max_matching_sub(const Multigraph& g, const std::vector<char>* removed_vertex,
                          const std::vector<char>* forbidden_edge) {
    Skeleton sk = build_skeleton(g, removed_vertex, forbidden_edge);
    Blossom b(sk.adj);
    return matching_from(sk, b.solve());
}

}  // namespace

bool is_valid_matching(const Multigraph& g, const std::vector<int>& edge_ids) {
    std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
    for (int e : edge_ids) {
        if (!g.valid_edge(e)) return false;
        const auto& ed = g.edge(e);
        if (covered[static_cast<size_t>(ed.u)] || covered[static_cast<size_t>(ed.v)]) return false;
        covered[static_cast<size_t>(ed.u)] = 1;
        covered[static_cast<size_t>(ed.v)] = 1;
    }
    return true;
}

Matching maximum_matching(const Multigraph& g) { return max_matching_sub(g, nullptr, nullptr); }

bool is_matchable(const Multigraph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    return maximum_matching(g).is_perfect(g);
}

bool is_matchable_excluding(const Multigraph& g, const VertexSet& removed) {
    const int alive = g.vertex_count() - removed.size();
    if (alive % 2 != 0) return false;
    if (alive == 0) return true;
    std::vector<char> rm(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : removed.ids()) rm[static_cast<size_t>(v)] = 1;
    Matching m = max_matching_sub(g, &rm, nullptr);
    return 2 * m.size() == alive;
}

int odd_components_count(const Multigraph& g, const VertexSet& s) {
    int count = 0;
    for (const auto& comp : components_excluding(g, s))
        if (comp.size() % 2 == 1) ++count;
    return count;
}

std::optional<Matching> pm_with_forced_and_forbidden(const Multigraph& g,
                                                     std::span<const int> force,
                                                     std::span<const int> forbid) {
    std::vector<char> rm(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> banned(static_cast<size_t>(g.edge_count()), 0);
    for (int e : forbid) {
        if (!g.valid_edge(e)) throw std::invalid_argument("forbidden edge id out of range");
        banned[static_cast<size_t>(e)] = 1;
    }
    for (int e : force) {
        if (!g.valid_edge(e)) throw std::invalid_argument("forced edge id out of range");
        if (banned[static_cast<size_t>(e)]) return std::nullopt;
        const auto& ed = g.edge(e);
        if (rm[static_cast<size_t>(ed.u)] || rm[static_cast<size_t>(ed.v)]) return std::nullopt;
        rm[static_cast<size_t>(ed.u)] = 1;
        rm[static_cast<size_t>(ed.v)] = 1;
    }
    const int alive = g.vertex_count() - 2 * static_cast<int>(force.size());
    if (alive % 2 != 0) return std::nullopt;
    Matching rest = max_matching_sub(g, &rm, &banned);
    if (2 * rest.size() != alive) return std::nullopt;
    Matching full = rest;
    full.edge_ids.insert(full.edge_ids.end(), force.begin(), force.end());
    std::sort(full.edge_ids.begin(), full.edge_ids.end());
    return full;
}

std::optional<Matching> pm_with_forced(const Multigraph& g, std::span<const int> force) {
    return pm_with_forced_and_forbidden(g, force, {});
}

CoverageReport analyze_matching_covered(const Multigraph& g) {
    CoverageReport r;
    if (g.vertex_count() < 2 || !is_connected(g)) {
        r.reason = CoverageReport::Reason::Disconnected;
        return r;
    }
    if (!is_matchable(g)) {
        r.reason = CoverageReport::Reason::NotMatchable;
        r.tutte_set = tutte_violator(g);
        return r;
    }
    // an edge uv lies in some perfect matching iff G - u - v is matchable
    std::vector<char> pair_checked(static_cast<size_t>(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (pair_checked[static_cast<size_t>(e)]) continue;
        const auto& ed = g.edge(e);
        for (const auto& [to, e2] : g.incident(ed.u))
            if (to == ed.v) pair_checked[static_cast<size_t>(e2)] = 1;
        if (!is_matchable_excluding(g, VertexSet({ed.u, ed.v}))) {
            r.reason = CoverageReport::Reason::UncoveredEdge;
            r.offending_edge = e;
            return r;
        }
    }
    r.covered = true;
    return r;
}

bool is_matching_covered(const Multigraph& g) { return analyze_matching_covered(g).covered; }

std::vector<int> removable_edges(const Multigraph& g) {
    if (!is_matching_covered(g)) throw std::invalid_argument("removable_edges: input not matching covered");
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<Multigraph::Edge> edges;
        for (int f = 0; f < g.edge_count(); ++f)
            if (f != e) edges.push_back(g.edge(f));
        if (edges.empty()) continue;
        if (is_matching_covered(Multigraph(g.vertex_count(), std::move(edges)))) out.push_back(e);
    }
    return out;
}

VertexSet tutte_violator(const Multigraph& g) {
    if (is_matchable(g)) throw std::invalid_argument("tutte_violator: graph is matchable");
    const int nu = maximum_matching(g).size();
    // D = vertices missed by some maximum matching; A = N(D) - D is a violator.
    std::vector<char> in_d(static_cast<size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<char> rm(static_cast<size_t>(g.vertex_count()), 0);
        rm[static_cast<size_t>(v)] = 1;
        if (max_matching_sub(g, &rm, nullptr).size() == nu) in_d[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> a;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_d[static_cast<size_t>(v)]) continue;
        for (const auto& [to, e] : g.incident(v)) {
            (void)e;
            if (in_d[static_cast<size_t>(to)]) {
                a.push_back(v);
                break;
            }
        }
    }
    return VertexSet(std::move(a));
}

}  // namespace thetakit

#include "thetakit/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "thetakit/matching.hpp"

namespace thetakit {

namespace {

/// Matchability of G minus a vertex mask, memoized per oracle run.
class ConformalityCache {
public:
    explicit ConformalityCache(const Multigraph& g) : g_(g) {}

    bool matchable_without(std::uint64_t mask) {
        auto it = cache_.find(mask);
        if (it != cache_.end()) return it->second;
        std::vector<int> removed;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (mask & (1ULL << v)) removed.push_back(v);
        bool ok = is_matchable_excluding(g_, VertexSet(std::move(removed)));
        cache_.emplace(mask, ok);
        return ok;
    }

private:
    const Multigraph& g_;
    std::unordered_map<std::uint64_t, bool> cache_;
};

struct PathRecord {
    std::uint64_t internal_mask = 0;
    std::vector<int> edges;  // oriented x -> y
};

/// All simple x-y paths of odd length, in DFS (edge-id) order.
void collect_odd_paths(const Multigraph& g, int x, int y, std::vector<PathRecord>& out) {
    std::vector<int> edge_stack;
    std::uint64_t visited = 1ULL << x;

    std::function<void(int)> dfs = [&](int v) {
        for (const auto& [to, e] : g.incident(v)) {
            if (to == y) {
                if (edge_stack.size() % 2 == 0) {  // adding e makes the length odd
                    PathRecord rec;
                    rec.edges = edge_stack;
                    rec.edges.push_back(e);
                    rec.internal_mask = visited & ~(1ULL << x);
                    out.push_back(std::move(rec));
                }
                continue;
            }
            if (visited & (1ULL << to)) continue;
            visited |= 1ULL << to;
            edge_stack.push_back(e);
            dfs(to);
            edge_stack.pop_back();
            visited &= ~(1ULL << to);
        }
    };
    dfs(x);
}

}  // namespace

std::optional<ThetaWitness> oracle_theta(const Multigraph& g, int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap) throw std::invalid_argument("oracle_theta: graph exceeds the vertex cap");
    if (n > 62) throw std::invalid_argument("oracle_theta: graph too large for bitmask search");

    ConformalityCache cache(g);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            std::vector<PathRecord> paths;
            collect_odd_paths(g, x, y, paths);
            const size_t k = paths.size();
            for (size_t i = 0; i < k; ++i) {
                for (size_t j = i + 1; j < k; ++j) {
                    if (paths[i].internal_mask & paths[j].internal_mask) continue;
                    if (paths[i].edges.size() == 1 && paths[j].edges.size() == 1 &&
                        paths[i].edges == paths[j].edges)
                        continue;
                    for (size_t l = j + 1; l < k; ++l) {
                        if ((paths[i].internal_mask | paths[j].internal_mask) &
                            paths[l].internal_mask)
                            continue;
                        if (paths[l].edges.size() == 1 &&
                            (paths[l].edges == paths[i].edges || paths[l].edges == paths[j].edges))
                            continue;
                        std::uint64_t h_mask = (1ULL << x) | (1ULL << y) | paths[i].internal_mask |
                                               paths[j].internal_mask | paths[l].internal_mask;
                        if (!cache.matchable_without(h_mask)) continue;
                        ThetaWitness w;
                        w.x = x;
                        w.y = y;
                        w.paths = {paths[i].edges, paths[j].edges, paths[l].edges};
                        std::vector<int> removed;
                        for (int v = 0; v < n; ++v)
                            if (h_mask & (1ULL << v)) removed.push_back(v);
                        VertexSet keep = VertexSet(removed).complement(n);
                        if (!keep.empty()) {
                            auto sub = induced_subgraph(g, keep);
                            Matching pm = maximum_matching(sub.graph);
                            for (int e : pm.edge_ids)
                                w.complement_matching.push_back(
                                    sub.parent_edge[static_cast<size_t>(e)]);
                        }
                        std::sort(w.complement_matching.begin(), w.complement_matching.end());
                        std::sort(w.paths.begin(), w.paths.end());
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

struct K4Search {
    const Multigraph& g;
    ConformalityCache& cache;
    std::array<int, 4> branch{};
    std::array<std::vector<int>, 6> chosen;
    std::uint64_t used = 0;  // branch vertices + internals so far

    static constexpr std::array<std::pair<int, int>, 6> kPairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

    bool place(size_t pair_idx) {
        if (pair_idx == kPairs.size()) {
            std::uint64_t h_mask = used;
            return cache.matchable_without(h_mask);
        }
        int x = branch[static_cast<size_t>(kPairs[pair_idx].first)];
        int y = branch[static_cast<size_t>(kPairs[pair_idx].second)];
        std::vector<PathRecord> paths;
        collect_odd_paths(g, x, y, paths);
        for (auto& rec : paths) {
            if (rec.internal_mask & used) continue;
            bool hits_branch = false;
            for (int b : branch)
                if (rec.internal_mask & (1ULL << b)) hits_branch = true;
            if (hits_branch) continue;
            if (rec.edges.size() == 1) {
                bool dup = false;
                for (size_t q = 0; q < pair_idx; ++q)
                    if (chosen[q] == rec.edges) dup = true;
                if (dup) continue;
            }
            chosen[pair_idx] = rec.edges;
            used |= rec.internal_mask;
            if (place(pair_idx + 1)) return true;
            used &= ~rec.internal_mask;
        }
        return false;
    }
};

}  // namespace

std::optional<K4Witness> oracle_k4(const Multigraph& g, int vertex_cap) {
    const int n = g.vertex_count();
    if (n > vertex_cap) throw std::invalid_argument("oracle_k4: graph exceeds the vertex cap");
    if (n < 4) return std::nullopt;

    ConformalityCache cache(g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    K4Search search{g, cache, {a, b, c, d}, {}, 0};
                    search.used = (1ULL << a) | (1ULL << b) | (1ULL << c) | (1ULL << d);
                    if (!search.place(0)) continue;
                    K4Witness w;
                    w.branch = {a, b, c, d};
                    w.paths = search.chosen;
                    std::vector<int> removed;
                    for (int v = 0; v < n; ++v)
                        if (search.used & (1ULL << v)) removed.push_back(v);
                    VertexSet keep = VertexSet(removed).complement(n);
                    if (!keep.empty()) {
                        auto sub = induced_subgraph(g, keep);
                        Matching pm = maximum_matching(sub.graph);
                        for (int e : pm.edge_ids)
                            w.complement_matching.push_back(sub.parent_edge[static_cast<size_t>(e)]);
                    }
                    std::sort(w.complement_matching.begin(), w.complement_matching.end());
                    return w;
                }
    return std::nullopt;
}

bool verify_k4_witness(const Multigraph& g, const K4Witness& w) {
    for (int b : w.branch)
        if (!g.valid_vertex(b)) return false;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (w.branch[i] == w.branch[j]) return false;

    static constexpr std::array<std::pair<int, int>, 6> kPairs{
        {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    std::vector<char> in_h(static_cast<size_t>(g.vertex_count()), 0);
    for (int b : w.branch) in_h[static_cast<size_t>(b)] = 1;
    std::vector<char> internal(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> edge_used(static_cast<size_t>(g.edge_count()), 0);

    for (size_t p = 0; p < 6; ++p) {
        const auto& path = w.paths[p];
        if (path.empty() || path.size() % 2 == 0) return false;
        int x = w.branch[static_cast<size_t>(kPairs[p].first)];
        int y = w.branch[static_cast<size_t>(kPairs[p].second)];
        auto verts = walk_vertices(g, path, x);
        if (!verts || verts->back() != y) return false;
        for (size_t i = 1; i + 1 < verts->size(); ++i) {
            int v = (*verts)[i];
            if (in_h[static_cast<size_t>(v)] || internal[static_cast<size_t>(v)]) return false;
            internal[static_cast<size_t>(v)] = 1;
        }
        for (int e : path) {
            if (edge_used[static_cast<size_t>(e)]) return false;
            edge_used[static_cast<size_t>(e)] = 1;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (internal[static_cast<size_t>(v)]) in_h[static_cast<size_t>(v)] = 1;

    std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
    for (int e : w.complement_matching) {
        if (!g.valid_edge(e)) return false;
        const auto& ed = g.edge(e);
        if (in_h[static_cast<size_t>(ed.u)] || in_h[static_cast<size_t>(ed.v)]) return false;
        if (covered[static_cast<size_t>(ed.u)] || covered[static_cast<size_t>(ed.v)]) return false;
        covered[static_cast<size_t>(ed.u)] = 1;
        covered[static_cast<size_t>(ed.v)] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_h[static_cast<size_t>(v)] && !covered[static_cast<size_t>(v)]) return false;
    return true;
}

bool check_crossing_properties(const Multigraph& g, const ThetaWitness& w, const VertexSet& shore) {
    auto in_shore = [&](int v) { return shore.contains(v); };

    // positions (0-based) of cut edges per path; parity: odd iff index even
    std::array<std::vector<size_t>, 3> crossings;
    for (size_t p = 0; p < 3; ++p) {
        for (size_t i = 0; i < w.paths[p].size(); ++i) {
            const auto& ed = g.edge(w.paths[p][i]);
            if (in_shore(ed.u) != in_shore(ed.v)) crossings[p].push_back(i);
        }
    }

    int crossing_paths = 0;
    for (const auto& c : crossings)
        if (!c.empty()) ++crossing_paths;

    for (size_t p = 0; p < 3; ++p) {
        const auto& c = crossings[p];
        if (c.size() > 2) return false;  // (i): at most two crossing edges
        if (c.size() == 2) {
            bool odd0 = c[0] % 2 == 0;
            bool odd1 = c[1] % 2 == 0;
            if (odd0 == odd1) return false;        // (i): opposite parity
            if (crossing_paths != 1) return false;  // (ii): no other crossing paths
        }
    }
    if (crossing_paths >= 2) {
        // (iii): each crossing path crosses in an edge of odd parity
        for (size_t p = 0; p < 3; ++p) {
            if (crossings[p].empty()) continue;
            bool has_odd = false;
            for (size_t i : crossings[p])
                if (i % 2 == 0) has_odd = true;
            if (!has_odd) return false;
        }
    }
    return true;
}

}  // namespace thetakit

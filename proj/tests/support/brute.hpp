#pragma once

// Test-only oracles, deliberately independent of the blossom machinery:
// plain backtracking over vertices and exhaustive enumeration.

#include <cstdint>
#include <functional>
#include <vector>

#include "thetakit/multigraph.hpp"

namespace thetakit::testsupport {

inline int brute_max_matching_size(const Multigraph& g) {
    const int n = g.vertex_count();
    std::function<int(std::uint64_t)> best = [&](std::uint64_t covered) -> int {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!(covered & (1ULL << u))) {
                v = u;
                break;
            }
        if (v == -1) return 0;
        int result = best(covered | (1ULL << v));  // leave v unmatched
        for (const auto& [to, e] : g.incident(v)) {
            (void)e;
            if (covered & (1ULL << to)) continue;
            result = std::max(result, 1 + best(covered | (1ULL << v) | (1ULL << to)));
        }
        return result;
    };
    return best(0);
}

inline bool brute_matchable(const Multigraph& g) {
    if (g.vertex_count() % 2 != 0) return false;
    return 2 * brute_max_matching_size(g) == g.vertex_count();
}

/// All perfect matchings, each as a sorted edge id list.
inline std::vector<std::vector<int>> brute_perfect_matchings(const Multigraph& g) {
    std::vector<std::vector<int>> out;
    if (g.vertex_count() % 2 != 0) return out;
    std::vector<int> chosen;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t covered) {
        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (!(covered & (1ULL << u))) {
                v = u;
                break;
            }
        if (v == -1) {
            out.push_back(chosen);
            return;
        }
        for (const auto& [to, e] : g.incident(v)) {
            if (covered & (1ULL << to)) continue;
            chosen.push_back(e);
            rec(covered | (1ULL << v) | (1ULL << to));
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

inline bool brute_matching_covered(const Multigraph& g) {
    if (g.vertex_count() < 2 || !is_connected(g)) return false;
    auto pms = brute_perfect_matchings(g);
    if (pms.empty()) return false;
    std::vector<char> covered(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& pm : pms)
        for (int e : pm) covered[static_cast<std::size_t>(e)] = 1;
    for (char c : covered)
        if (!c) return false;
    return true;
}

/// max over all S of c_odd(G - S) - |S|, by exhaustive subset enumeration.
inline int brute_max_deficiency(const Multigraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) s.push_back(v);
        VertexSet vs(s);
        int odd = 0;
        for (const auto& c : components_excluding(g, vs))
            if (c.size() % 2 == 1) ++odd;
        best = std::max(best, odd - vs.size());
    }
    return best;
}

}  // namespace thetakit::testsupport

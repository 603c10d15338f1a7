#include "thetakit/generator.hpp"

#include <random>
#include <stdexcept>

#include "thetakit/matching.hpp"

namespace thetakit {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
};

struct EarBuilder {
    int used = 2;
    std::vector<Multigraph::Edge> edges{{0, 1}};

    Multigraph graph() const { return Multigraph(used, edges); }

    // odd path between two existing vertices through `internals` new vertices
    void add_single_ear(int a, int b, int internals) {
        int prev = a;
        for (int i = 0; i < internals; ++i) {
            edges.push_back({prev, used});
            prev = used++;
        }
        edges.push_back({prev, b});
    }
};

Multigraph grow_once(int n, Rng& rng, bool& ok) {
    EarBuilder b;
    int stall = 0;
    int failures = 0;
    while (b.used < n) {
        EarBuilder attempt = b;
        const int remaining = n - b.used;
        const bool force_growth = stall >= 3;
        const bool double_ear = b.used >= 4 && rng.below(10) < 3;
        if (double_ear) {
            // two vertex-disjoint single ears added together
            int a1 = rng.below(b.used);
            int b1 = rng.below(b.used);
            int a2 = rng.below(b.used);
            int b2 = rng.below(b.used);
            if (a1 == b1 || a2 == b2 || a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
            int budget = remaining / 2;
            int i1 = 2 * rng.below(budget + 1);
            int i2 = 2 * rng.below((remaining - i1) / 2 + 1);
            if (force_growth && i1 + i2 == 0 && remaining > 0) i1 = 2;
            attempt.add_single_ear(a1, b1, i1);
            attempt.add_single_ear(a2, b2, i2);
        } else {
            int a = rng.below(b.used);
            int bb = rng.below(b.used);
            if (a == bb) continue;
            int internals = 2 * rng.below(remaining / 2 + 1);
            if (force_growth && internals == 0 && remaining > 0) internals = 2;
            attempt.add_single_ear(a, bb, internals);
        }
        if (is_matching_covered(attempt.graph())) {
            const bool grew = attempt.used > b.used;
            b = std::move(attempt);
            stall = grew ? 0 : stall + 1;
        } else if (++failures > 60) {
            ok = false;
            return b.graph();
        }
    }
    // densify a little with plain edge ears
    const int extra = rng.below(n);
    for (int t = 0; t < extra; ++t) {
        int a = rng.below(n);
        int bb = rng.below(n);
        if (a == bb) continue;
        EarBuilder attempt = b;
        attempt.add_single_ear(a, bb, 0);
        if (is_matching_covered(attempt.graph())) b = std::move(attempt);
    }
    ok = true;
    return b.graph();
}

}  // namespace

Multigraph random_matching_covered(int n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("random_matching_covered: n must be even and >= 2");
    Rng rng(seed);
    if (n == 2) {
        // K2 or a small parallel bundle
        std::vector<Multigraph::Edge> edges;
        const int m = 1 + rng.below(3);
        for (int i = 0; i < m; ++i) edges.push_back({0, 1});
        return Multigraph(2, std::move(edges));
    }
    for (int attempt = 0; attempt < 100; ++attempt) {
        bool ok = false;
        Multigraph g = grow_once(n, rng, ok);
        if (ok && g.vertex_count() == n && is_matching_covered(g)) return g;
    }
    throw std::runtime_error("random_matching_covered: generation kept failing");
}

Multigraph random_matching_covered_min_degree(int n, int min_degree, std::uint64_t seed) {
    Multigraph g = random_matching_covered(n, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    while (g.min_degree() < min_degree) {
        int u = 0;
        for (int v = 1; v < g.vertex_count(); ++v)
            if (g.degree(v) < g.degree(u)) u = v;
        // adding u-v keeps every edge covered; the new edge itself lies in a
        // perfect matching exactly when G - u - v is matchable
        std::vector<int> candidates;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != u && is_matchable_excluding(g, VertexSet({u, v}))) candidates.push_back(v);
        if (candidates.empty()) throw std::runtime_error("min-degree lift: no addable edge");
        int v = candidates[static_cast<size_t>(rng.below(static_cast<int>(candidates.size())))];
        auto edges = g.edges();
        edges.push_back({u, v});
        g = Multigraph(g.vertex_count(), std::move(edges));
    }
    return g;
}

}  // namespace thetakit

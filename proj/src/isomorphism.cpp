#include "thetakit/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace thetakit {

namespace {

std::vector<std::vector<int>> multiplicity_matrix(const Multigraph& g) {
    std::vector<std::vector<int>> m(static_cast<size_t>(g.vertex_count()),
                                    std::vector<int>(static_cast<size_t>(g.vertex_count()), 0));
    for (const auto& e : g.edges()) {
        ++m[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
        ++m[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)];
    }
    return m;
}

// (degree, sorted neighbor degrees with multiplicity, sorted incident multiplicities)
std::vector<std::vector<int>> vertex_invariants(const Multigraph& g,
                                                const std::vector<std::vector<int>>& mult) {
    std::vector<std::vector<int>> inv(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> sig;
        sig.push_back(g.degree(v));
        std::vector<int> nd, mm;
        for (int u = 0; u < g.vertex_count(); ++u) {
            int k = mult[static_cast<size_t>(v)][static_cast<size_t>(u)];
            if (k == 0) continue;
            mm.push_back(k);
            for (int i = 0; i < k; ++i) nd.push_back(g.degree(u));
        }
        std::sort(nd.begin(), nd.end());
        std::sort(mm.begin(), mm.end());
        sig.push_back(-1);
        sig.insert(sig.end(), nd.begin(), nd.end());
        sig.push_back(-1);
        sig.insert(sig.end(), mm.begin(), mm.end());
        inv[static_cast<size_t>(v)] = std::move(sig);
    }
    return inv;
}

struct IsoSearch {
    int n;
    const std::vector<std::vector<int>>& ma;
    const std::vector<std::vector<int>>& mb;
    const std::vector<std::vector<std::vector<int>>>& candidates;  // per a-vertex (by order)
    const std::vector<int>& order;
    std::vector<int> image;
    std::vector<char> used;

    bool rec(size_t pos) {
        if (pos == order.size()) return true;
        int a = order[pos];
        for (int b : candidates[pos][0]) {
            if (used[static_cast<size_t>(b)]) continue;
            bool ok = true;
            for (size_t q = 0; q < pos && ok; ++q) {
                int a2 = order[q];
                if (ma[static_cast<size_t>(a)][static_cast<size_t>(a2)] !=
                    mb[static_cast<size_t>(b)][static_cast<size_t>(image[static_cast<size_t>(a2)])])
                    ok = false;
            }
            if (!ok) continue;
            image[static_cast<size_t>(a)] = b;
            used[static_cast<size_t>(b)] = 1;
            if (rec(pos + 1)) return true;
            used[static_cast<size_t>(b)] = 0;
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const int n = a.vertex_count();

    auto ma = multiplicity_matrix(a);
    auto mb = multiplicity_matrix(b);
    auto ia = vertex_invariants(a, ma);
    auto ib = vertex_invariants(b, mb);

    // classes by invariant must match in size
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    // order a's vertices: rarest invariant first, then id
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    auto class_size = [&](int v) {
        return std::count(ia.begin(), ia.end(), ia[static_cast<size_t>(v)]);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return class_size(x) < class_size(y); });

    std::vector<std::vector<std::vector<int>>> candidates(order.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
        std::vector<int> cand;
        for (int v = 0; v < n; ++v)
            if (ib[static_cast<size_t>(v)] == ia[static_cast<size_t>(order[pos])]) cand.push_back(v);
        candidates[pos].push_back(std::move(cand));
    }

    IsoSearch search{n, ma, mb, candidates, order,
                     std::vector<int>(static_cast<size_t>(n), -1),
                     std::vector<char>(static_cast<size_t>(n), 0)};
    return search.rec(0);
}

std::uint64_t fingerprint(const Multigraph& g) {
    auto mix = [](std::uint64_t h, std::uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    std::uint64_t h = 1469598103934665603ULL;
    h = mix(h, static_cast<std::uint64_t>(g.vertex_count()));
    h = mix(h, static_cast<std::uint64_t>(g.edge_count()));
    std::vector<int> deg;
    for (int v = 0; v < g.vertex_count(); ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    for (int d : deg) h = mix(h, static_cast<std::uint64_t>(d) + 17);
    h = mix(h, is_bipartite(g) ? 3 : 5);
    std::vector<std::pair<int, int>> ep;
    for (const auto& e : g.edges()) {
        int du = g.degree(e.u), dv = g.degree(e.v);
        ep.emplace_back(std::min(du, dv), std::max(du, dv));
    }
    std::sort(ep.begin(), ep.end());
    for (const auto& [x, y] : ep) {
        h = mix(h, static_cast<std::uint64_t>(x) * 131 + static_cast<std::uint64_t>(y));
    }
    return h;
}

namespace {

struct Canon8 {
    int n = 0;
    std::array<std::uint8_t, 8> row{};   // adjacency rows as bitmasks
    std::array<int, 8> class_of{};       // invariant class per vertex (ordered classes)
    std::array<int, 8> class_at_pos{};   // required class at each position
    std::array<int, 8> perm{};           // position -> vertex
    std::array<std::uint8_t, 8> best{};  // best emitted rows (relabeled adjacency)
    std::array<std::uint8_t, 8> cur{};
    bool have_best = false;

    // equal_prefix: cur[0..pos-1] matched best when the branch was entered.
    // best only ever grows, so pruning on a stale equal prefix stays valid;
    // leaves always do the full comparison.
    void rec(int pos, bool equal_prefix, std::uint8_t used) {
        if (pos == n) {
            if (!have_best ||
                std::lexicographical_compare(best.begin(), best.begin() + n, cur.begin(), cur.begin() + n)) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            if (class_of[static_cast<size_t>(v)] != class_at_pos[static_cast<size_t>(pos)]) continue;
            std::uint8_t bits = 0;
            for (int q = 0; q < pos; ++q)
                if (row[static_cast<size_t>(v)] & (1u << perm[static_cast<size_t>(q)]))
                    bits |= static_cast<std::uint8_t>(1u << q);
            bool eq = equal_prefix;
            if (have_best && eq) {
                if (bits < best[static_cast<size_t>(pos)]) continue;
                if (bits > best[static_cast<size_t>(pos)]) eq = false;
            }
            perm[static_cast<size_t>(pos)] = v;
            cur[static_cast<size_t>(pos)] = bits;
            rec(pos + 1, eq, static_cast<std::uint8_t>(used | (1u << v)));
        }
    }
};

}  // namespace

std::uint64_t canonical_code8(int n, std::uint64_t adj) {
    if (n < 1 || n > 8) throw std::invalid_argument("canonical_code8: n must be in 1..8");
    Canon8 c;
    c.n = n;
    for (int u = 0; u < n; ++u) {
        std::uint8_t r = 0;
        for (int v = 0; v < n; ++v)
            if (adj & (1ULL << (8 * u + v))) r |= static_cast<std::uint8_t>(1u << v);
        c.row[static_cast<size_t>(u)] = r;
    }
    // invariant: (degree, sorted neighbor degrees); classes sorted descending
    std::array<int, 8> deg{};
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = std::popcount(c.row[static_cast<size_t>(v)]);
    std::vector<std::vector<int>> inv(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> sig{deg[static_cast<size_t>(v)]};
        std::vector<int> nd;
        for (int u = 0; u < n; ++u)
            if (c.row[static_cast<size_t>(v)] & (1u << u)) nd.push_back(deg[static_cast<size_t>(u)]);
        std::sort(nd.begin(), nd.end());
        sig.insert(sig.end(), nd.begin(), nd.end());
        inv[static_cast<size_t>(v)] = std::move(sig);
    }
    std::vector<std::vector<int>> classes = inv;
    std::sort(classes.begin(), classes.end(), std::greater<>());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    std::vector<int> pos_class;
    for (size_t ci = 0; ci < classes.size(); ++ci) {
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (inv[static_cast<size_t>(v)] == classes[ci]) {
                c.class_of[static_cast<size_t>(v)] = static_cast<int>(ci);
                ++count;
            }
        for (int i = 0; i < count; ++i) pos_class.push_back(static_cast<int>(ci));
    }
    for (int p = 0; p < n; ++p) c.class_at_pos[static_cast<size_t>(p)] = pos_class[static_cast<size_t>(p)];

    c.rec(0, true, 0);
    std::uint64_t code = static_cast<std::uint64_t>(n);
    for (int p = 0; p < n; ++p) code = (code << 7) | c.best[static_cast<size_t>(p)];
    return code;
}

std::uint64_t adjacency_mask8(const Multigraph& g) {
    if (g.vertex_count() > 8) throw std::invalid_argument("adjacency_mask8: n must be <= 8");
    if (!g.is_simple()) throw std::invalid_argument("adjacency_mask8: graph must be simple");
    std::uint64_t adj = 0;
    for (const auto& e : g.edges()) {
        adj |= 1ULL << (8 * e.u + e.v);
        adj |= 1ULL << (8 * e.v + e.u);
    }
    return adj;
}

Multigraph graph_from_mask8(int n, std::uint64_t adj) {
    std::vector<Multigraph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj & (1ULL << (8 * u + v))) edges.push_back({u, v});
    return Multigraph(n, std::move(edges));
}

}  // namespace thetakit

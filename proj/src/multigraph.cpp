#include "thetakit/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetakit {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("multigraph needs at least one vertex");
    adj_.resize(static_cast<size_t>(n_));
    for (size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (ed.u == ed.v) throw std::invalid_argument("loops are not allowed");
        adj_[static_cast<size_t>(ed.u)].push_back({ed.v, static_cast<int>(e)});
        adj_[static_cast<size_t>(ed.v)].push_back({ed.u, static_cast<int>(e)});
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int Multigraph::other_end(int e, int v) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    throw std::invalid_argument("vertex is not an endpoint of edge");
}

int Multigraph::min_degree() const {
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Multigraph::max_degree() const {
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Multigraph::is_simple() const {
    for (int v = 0; v < n_; ++v) {
        const auto& list = adj_[static_cast<size_t>(v)];
        for (size_t i = 1; i < list.size(); ++i)
            if (list[i].first == list[i - 1].first) return false;
    }
    return true;
}

bool Multigraph::has_edge_between(int u, int v) const {
    return first_edge_between(u, v).has_value();
}

std::optional<int> Multigraph::first_edge_between(int u, int v) const {
    if (!valid_vertex(u) || !valid_vertex(v)) return std::nullopt;
    const auto& list = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(v, -1));
    if (it != list.end() && it->first == v) return it->second;
    return std::nullopt;
}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::of(std::initializer_list<int> ids) {
    return VertexSet(std::vector<int>(ids));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::complement(int n) const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(n) - ids_.size());
    size_t i = 0;
    for (int v = 0; v < n; ++v) {
        if (i < ids_.size() && ids_[i] == v) {
            ++i;
        } else {
            out.push_back(v);
        }
    }
    return VertexSet(std::move(out));
}

bool VertexSet::is_subset_of_range(int n) const {
    return ids_.empty() || (ids_.front() >= 0 && ids_.back() < n);
}

Cut cut(const Multigraph& g, const VertexSet& shore) {
    const int n = g.vertex_count();
    if (!shore.is_subset_of_range(n)) throw std::invalid_argument("shore not within V(G)");
    if (shore.empty() || shore.size() == n)
        throw std::invalid_argument("cut shore must be a proper nonempty subset");
    Cut c;
    c.shore = shore;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        if (shore.contains(ed.u) != shore.contains(ed.v)) c.edge_ids.push_back(e);
    }
    c.odd = (shore.size() % 2 == 1) && ((n - shore.size()) % 2 == 1);
    c.trivial = shore.size() == 1 || n - shore.size() == 1;
    return c;
}

ShoreContraction contract_shore(const Multigraph& g, const VertexSet& shore) {
    const int n = g.vertex_count();
    if (!shore.is_subset_of_range(n)) throw std::invalid_argument("shore not within V(G)");
    if (shore.empty() || shore.size() == n)
        throw std::invalid_argument("contraction shore must be a proper nonempty subset");

    ShoreContraction out;
    const int k = shore.size();
    out.contraction_vertex = k;
    out.vertex_map.assign(static_cast<size_t>(n), k);
    out.parent_vertex.assign(static_cast<size_t>(k) + 1, -1);
    for (int i = 0; i < k; ++i) {
        out.vertex_map[static_cast<size_t>(shore.ids()[static_cast<size_t>(i)])] = i;
        out.parent_vertex[static_cast<size_t>(i)] = shore.ids()[static_cast<size_t>(i)];
    }

    std::vector<Multigraph::Edge> edges;
    out.child_edge_of_parent.assign(static_cast<size_t>(g.edge_count()), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const bool iu = shore.contains(ed.u);
        const bool iv = shore.contains(ed.v);
        if (!iu && !iv) continue;  // internal to X̄, discarded
        out.child_edge_of_parent[static_cast<size_t>(e)] = static_cast<int>(edges.size());
        out.parent_edge.push_back(e);
        edges.push_back({out.vertex_map[static_cast<size_t>(ed.u)],
                         out.vertex_map[static_cast<size_t>(ed.v)]});
    }
    out.graph = Multigraph(k + 1, std::move(edges));
    return out;
}

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& keep) {
    if (!keep.is_subset_of_range(g.vertex_count()) || keep.empty())
        throw std::invalid_argument("induced_subgraph: bad vertex set");
    InducedSubgraph out;
    out.parent_vertex = keep.ids();
    out.child_vertex_of_parent.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < out.parent_vertex.size(); ++i)
        out.child_vertex_of_parent[static_cast<size_t>(out.parent_vertex[i])] = static_cast<int>(i);
    std::vector<Multigraph::Edge> edges;
    out.child_edge_of_parent.assign(static_cast<size_t>(g.edge_count()), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        int cu = out.child_vertex_of_parent[static_cast<size_t>(ed.u)];
        int cv = out.child_vertex_of_parent[static_cast<size_t>(ed.v)];
        if (cu == -1 || cv == -1) continue;
        out.child_edge_of_parent[static_cast<size_t>(e)] = static_cast<int>(edges.size());
        out.parent_edge.push_back(e);
        edges.push_back({cu, cv});
    }
    out.graph = Multigraph(keep.size(), std::move(edges));
    return out;
}

Multigraph underlying_simple(const Multigraph& g) {
    std::vector<Multigraph::Edge> edges;
    std::vector<std::pair<int, int>> seen;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        std::pair<int, int> key{std::min(ed.u, ed.v), std::max(ed.u, ed.v)};
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
            seen.push_back(key);
            edges.push_back(ed);
        }
    }
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph bisubdivide(const Multigraph& g, const std::vector<std::pair<int, int>>& plan) {
    std::vector<int> count(static_cast<size_t>(g.edge_count()), 0);
    for (const auto& [e, c] : plan) {
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("bisubdivide: bad edge id");
        if (c < 0 || c % 2 != 0)
            throw std::invalid_argument("bisubdivide: subdivision counts must be even and >= 0");
        count[static_cast<size_t>(e)] = c;
    }
    int next = g.vertex_count();
    std::vector<Multigraph::Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const int c = count[static_cast<size_t>(e)];
        if (c == 0) {
            edges.push_back(ed);
            continue;
        }
        int prev = ed.u;
        for (int i = 0; i < c; ++i) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, ed.v});
    }
    return Multigraph(next, std::move(edges));
}

namespace {

std::vector<VertexSet> components_impl(const Multigraph& g, const std::vector<char>& removed) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<VertexSet> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)] || removed[static_cast<size_t>(s)]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& [to, e] : g.incident(v)) {
                (void)e;
                if (!seen[static_cast<size_t>(to)] && !removed[static_cast<size_t>(to)]) {
                    seen[static_cast<size_t>(to)] = 1;
                    stack.push_back(to);
                }
            }
        }
        out.emplace_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.min_id() < b.min_id(); });
    return out;
}

}  // namespace

std::vector<VertexSet> components(const Multigraph& g) {
    return components_impl(g, std::vector<char>(static_cast<size_t>(g.vertex_count()), 0));
}

std::vector<VertexSet> components_excluding(const Multigraph& g, const VertexSet& removed) {
    std::vector<char> rm(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : removed.ids()) rm[static_cast<size_t>(v)] = 1;
    return components_impl(g, rm);
}

bool is_connected(const Multigraph& g) { return components(g).size() == 1; }

std::optional<std::vector<int>> bipartition(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<size_t>(s)] != -1) continue;
        color[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& [to, e] : g.incident(v)) {
                (void)e;
                if (color[static_cast<size_t>(to)] == -1) {
                    color[static_cast<size_t>(to)] = 1 - color[static_cast<size_t>(v)];
                    stack.push_back(to);
                } else if (color[static_cast<size_t>(to)] == color[static_cast<size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Multigraph& g) { return bipartition(g).has_value(); }

bool is_three_connected(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n < 4) return false;
    if (!is_connected(g)) return false;
    for (int u = 0; u < n; ++u) {
        for (int v = u; v < n; ++v) {
            std::vector<int> rm = (u == v) ? std::vector<int>{u} : std::vector<int>{u, v};
            if (components_excluding(g, VertexSet(rm)).size() > 1) return false;
        }
    }
    return true;
}

bool is_simple_even_cycle(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n < 4 || n % 2 != 0) return false;
    if (g.edge_count() != n) return false;
    if (!g.is_simple()) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return is_connected(g);
}

std::optional<std::pair<int, int>> parallel_pair(const Multigraph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& list = g.incident(v);
        for (size_t i = 1; i < list.size(); ++i)
            if (list[i].first == list[i - 1].first && list[i].first > v)
                return std::make_pair(list[i - 1].second, list[i].second);
    }
    return std::nullopt;
}

}  // namespace thetakit

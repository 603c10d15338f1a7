#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thetakit {

/// Loopless undirected multigraph with stable vertex ids 0..n-1 and
/// distinguishable parallel edges. Edge ids are indices into edges().
/// Immutable after construction; all operations below are pure functions
/// returning fresh graphs.
class Multigraph {
public:
    struct Edge {
        int u;
        int v;
    };

    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    bool valid_vertex(int v) const { return v >= 0 && v < n_; }
    bool valid_edge(int e) const { return e >= 0 && e < edge_count(); }

    /// Endpoint of e that is not v. Precondition: v is an endpoint of e.
    int other_end(int e, int v) const;

    /// Incidences of v as (neighbor, edge id), sorted by (neighbor, edge id).
    const std::vector<std::pair<int, int>>& incident(int v) const {
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    int min_degree() const;
    int max_degree() const;

    bool is_simple() const;
    bool has_edge_between(int u, int v) const;
    /// Smallest edge id joining u and v, if any.
    std::optional<int> first_edge_between(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Subset of vertex ids, kept sorted and duplicate-free.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    static VertexSet of(std::initializer_list<int> ids);

    const std::vector<int>& ids() const { return ids_; }
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    bool contains(int v) const;
    int min_id() const { return ids_.front(); }

    VertexSet complement(int n) const;
    bool is_subset_of_range(int n) const;

    bool operator==(const VertexSet& o) const { return ids_ == o.ids_; }
    bool operator<(const VertexSet& o) const { return ids_ < o.ids_; }

private:
    std::vector<int> ids_;
};

/// Edge cut ∂(X) together with its shore.
struct Cut {
    VertexSet shore;
    std::vector<int> edge_ids;
    bool odd = false;      // both shores of odd cardinality
    bool trivial = false;  // some shore is a singleton
    int size() const { return static_cast<int>(edge_ids.size()); }
};

Cut cut(const Multigraph& g, const VertexSet& shore);

/// Result of shrinking the complement shore X̄ to a single fresh vertex.
/// The vertices of X keep their relative order and are renumbered 0..|X|-1;
/// the contraction vertex gets id |X|. Surviving edges keep their relative
/// order; parent_edge maps child edge ids back to the original ids.
struct ShoreContraction {
    Multigraph graph;
    int contraction_vertex = -1;
    std::vector<int> vertex_map;            // original vertex -> child vertex
    std::vector<int> parent_vertex;         // child vertex -> original vertex, -1 for contraction vertex
    std::vector<int> parent_edge;           // child edge -> original edge
    std::vector<int> child_edge_of_parent;  // original edge -> child edge, -1 if dropped
};

/// G / X̄ → x̄: keeps G[X], discards edges inside X̄, reroutes ∂(X) to x̄.
ShoreContraction contract_shore(const Multigraph& g, const VertexSet& shore);

/// Induced subgraph G[keep] with vertices renumbered 0..|keep|-1 in id order.
struct InducedSubgraph {
    Multigraph graph;
    std::vector<int> parent_vertex;           // child vertex -> original vertex
    std::vector<int> child_vertex_of_parent;  // original vertex -> child vertex or -1
    std::vector<int> parent_edge;             // child edge -> original edge
    std::vector<int> child_edge_of_parent;    // original edge -> child edge or -1
};

InducedSubgraph induced_subgraph(const Multigraph& g, const VertexSet& keep);

/// Parallel classes collapsed to single edges (smallest id survives).
Multigraph underlying_simple(const Multigraph& g);

/// Replace each planned edge by a path with the given (even) number of new
/// internal vertices. New vertices are appended in ascending planned-edge order.
Multigraph bisubdivide(const Multigraph& g, const std::vector<std::pair<int, int>>& plan);

std::vector<VertexSet> components(const Multigraph& g);
std::vector<VertexSet> components_excluding(const Multigraph& g, const VertexSet& removed);
bool is_connected(const Multigraph& g);

/// Proper 2-coloring if one exists (color of vertex 0 is 0 per component root).
std::optional<std::vector<int>> bipartition(const Multigraph& g);
bool is_bipartite(const Multigraph& g);

/// Vertex connectivity at least 3 (requires n >= 4; multiplicities ignored).
bool is_three_connected(const Multigraph& g);

/// Simple cycle on all n vertices, n even and >= 4.
bool is_simple_even_cycle(const Multigraph& g);

/// First parallel pair (two edge ids joining the same vertices), if any.
std::optional<std::pair<int, int>> parallel_pair(const Multigraph& g);

}  // namespace thetakit

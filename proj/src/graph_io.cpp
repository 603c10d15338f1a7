#include "thetakit/graph_io.hpp"

#include <sstream>

namespace thetakit {

Multigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("expected header \"n m\"");
    if (n < 1) throw ParseError("vertex count must be >= 1");
    if (m < 0) throw ParseError("edge count must be >= 0");
    std::vector<Multigraph::Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw ParseError("fewer edge lines than the header promised");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("edge endpoint out of range");
        if (u == v) throw ParseError("loop edge is not allowed");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    long long extra = 0;
    if (in >> extra) throw ParseError("more edge lines than the header promised");
    return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const Multigraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

nlohmann::json graph_to_json(const Multigraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

Multigraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph json needs fields n and edges");
    int n = j.at("n").get<int>();
    std::vector<Multigraph::Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph json edge must be [u, v]");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    try {
        return Multigraph(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw ParseError(ex.what());
    }
}

}  // namespace thetakit

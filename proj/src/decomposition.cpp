#include "thetakit/decomposition.hpp"

#include <stdexcept>

#include "thetakit/graph_io.hpp"

namespace thetakit {

bool is_brick(const Multigraph& g) {
    if (!is_matching_covered(g)) throw std::invalid_argument("is_brick: input not matching covered");
    return !is_bipartite(g) && g.vertex_count() >= 4 && is_three_connected(g) && is_bicritical(g);
}

bool is_brace(const Multigraph& g) {
    if (!is_matching_covered(g)) throw std::invalid_argument("is_brace: input not matching covered");
    return is_bipartite(g) && !elp_cut(g).has_value();
}

namespace {

void decompose_rec(const Multigraph& g, const CutPolicy& policy, DecompositionResult& out,
                   DecompositionTrace& node) {
    std::optional<VertexSet> shore;
    std::string kind;
    if (policy) {
        if (auto s = policy(g)) {
            auto check = is_tight_cut(g, *s);
            if (!check.tight) throw std::invalid_argument("cut policy returned a non-tight cut");
            if (s->size() < 2 || g.vertex_count() - s->size() < 2)
                throw std::invalid_argument("cut policy returned a trivial cut");
            shore = std::move(s);
            kind = "policy";
        }
    }
    if (!shore) {
        if (auto c = elp_cut(g)) {
            shore = c->shore;
            kind = c->kind == ElpCut::Kind::BarrierCut ? "barrier" : "two_separation";
        }
    }
    if (!shore) {
        Multigraph simple = underlying_simple(g);
        if (is_bipartite(g)) {
            node.kind = "brace";
            out.braces.push_back(std::move(simple));
        } else {
            node.kind = "brick";
            out.bricks.push_back(std::move(simple));
        }
        return;
    }
    node.shore = shore;
    node.kind = kind;
    node.children.resize(2);
    decompose_rec(contract_shore(g, *shore).graph, policy, out, node.children[0]);
    decompose_rec(contract_shore(g, shore->complement(g.vertex_count())).graph, policy, out,
                  node.children[1]);
}

}  // namespace

DecompositionResult tight_cut_decomposition(const Multigraph& g, const CutPolicy& policy) {
    if (!is_matching_covered(g))
        throw std::invalid_argument("tight_cut_decomposition: input not matching covered");
    DecompositionResult out;
    decompose_rec(g, policy, out, out.trace);
    out.b = static_cast<int>(out.bricks.size());
    return out;
}

int brick_count(const Multigraph& g) { return tight_cut_decomposition(g).b; }

namespace {

nlohmann::json trace_to_json(const DecompositionTrace& t) {
    nlohmann::json j;
    j["kind"] = t.kind;
    if (t.shore) j["shore"] = t.shore->ids();
    if (!t.children.empty()) {
        nlohmann::json kids = nlohmann::json::array();
        for (const auto& c : t.children) kids.push_back(trace_to_json(c));
        j["children"] = std::move(kids);
    }
    return j;
}

}  // namespace

nlohmann::json decomposition_to_json(const DecompositionResult& r) {
    nlohmann::json bricks = nlohmann::json::array();
    for (const auto& g : r.bricks) bricks.push_back(graph_to_json(g));
    nlohmann::json braces = nlohmann::json::array();
    for (const auto& g : r.braces) braces.push_back(graph_to_json(g));
    return {{"bricks", std::move(bricks)},
            {"braces", std::move(braces)},
            {"b", r.b},
            {"trace", trace_to_json(r.trace)}};
}

}  // namespace thetakit

#include "thetakit/named_graphs.hpp"

#include <cctype>
#include <stdexcept>

namespace thetakit {

namespace {

using E = Multigraph::Edge;

Multigraph make(int n, std::vector<E> edges) { return Multigraph(n, std::move(edges)); }

}  // namespace

Multigraph named_graph(NamedGraph name) {
    switch (name) {
        case NamedGraph::K2:
            return make(2, {{0, 1}});
        case NamedGraph::C2:
            return make(2, {{0, 1}, {0, 1}});
        case NamedGraph::Theta:
            return make(2, {{0, 1}, {0, 1}, {0, 1}});
        case NamedGraph::K4:
            return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        case NamedGraph::C4Star:
            // C4 with the two odd-indexed sides doubled; cubic on 4 vertices.
            return make(4, {{0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 0}, {3, 0}});
        case NamedGraph::Prism:
            // triangles 012 and 345, rungs i -- i+3
            return make(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
        case NamedGraph::K33:
            // color classes {0,1,2} and {3,4,5}
            return make(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        case NamedGraph::Cube:
            // binary labels, edges between labels at Hamming distance 1
            return make(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7},
                            {4, 5}, {4, 6}, {5, 7}, {6, 7}});
        case NamedGraph::Petersen:
            // outer pentagon 0..4, inner pentagram 5..9, spokes i -- i+5
            return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
        case NamedGraph::T6:
            // K2-sum of two K4s; the 2-separation is {0,1}
            return make(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                            {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
        case NamedGraph::Bicorn:
            // cubic brick on 8 vertices; its unique removable edge is 1-6
            return make(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5},
                            {5, 4}, {5, 6}, {6, 7}, {7, 2}, {7, 3}, {1, 6}});
    }
    throw std::invalid_argument("unknown named graph");
}

Multigraph even_cycle(int k) {
    if (k < 1) throw std::invalid_argument("even_cycle: k must be >= 1");
    const int n = 2 * k;
    std::vector<E> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Multigraph(n, std::move(edges));
}

std::optional<Multigraph> named_graph_by_string(const std::string& raw) {
    std::string name;
    for (char ch : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (name == "k2") return named_graph(NamedGraph::K2);
    if (name == "c2") return named_graph(NamedGraph::C2);
    if (name == "theta") return named_graph(NamedGraph::Theta);
    if (name == "k4") return named_graph(NamedGraph::K4);
    if (name == "c4star") return named_graph(NamedGraph::C4Star);
    if (name == "prism") return named_graph(NamedGraph::Prism);
    if (name == "k33") return named_graph(NamedGraph::K33);
    if (name == "cube") return named_graph(NamedGraph::Cube);
    if (name == "petersen") return named_graph(NamedGraph::Petersen);
    if (name == "t6") return named_graph(NamedGraph::T6);
    if (name == "bicorn") return named_graph(NamedGraph::Bicorn);
    if (name.size() > 1 && name[0] == 'c') {
        int len = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
            len = len * 10 + (name[i] - '0');
        }
        if (len >= 2 && len % 2 == 0) return even_cycle(len / 2);
        return std::nullopt;
    }
    return std::nullopt;
}

const char* named_graph_string(NamedGraph name) {
    switch (name) {
        case NamedGraph::K2: return "k2";
        case NamedGraph::C2: return "c2";
        case NamedGraph::Theta: return "theta";
        case NamedGraph::K4: return "k4";
        case NamedGraph::C4Star: return "c4star";
        case NamedGraph::Prism: return "prism";
        case NamedGraph::K33: return "k33";
        case NamedGraph::Cube: return "cube";
        case NamedGraph::Petersen: return "petersen";
        case NamedGraph::T6: return "t6";
        case NamedGraph::Bicorn: return "bicorn";
    }
    return "?";
}

}  // namespace thetakit

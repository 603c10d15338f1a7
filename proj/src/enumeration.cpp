#include "thetakit/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "thetakit/isomorphism.hpp"
#include "thetakit/matching.hpp"

namespace thetakit {

namespace {

// adjacency masks of all graphs on n vertices up to isomorphism
std::vector<std::uint64_t> masks_up_to_iso(int n) {
    std::vector<std::uint64_t> level{0};  // single vertex, no edges
    for (int size = 2; size <= n; ++size) {
        std::vector<std::uint64_t> next;
        std::unordered_set<std::uint64_t> seen;
        const int nv = size - 1;  // the freshly added vertex
        for (std::uint64_t base : level) {
            for (std::uint32_t nb = 0; nb < (1u << nv); ++nb) {
                std::uint64_t adj = base;
                for (int v = 0; v < nv; ++v) {
                    if (nb & (1u << v)) {
                        adj |= 1ULL << (8 * nv + v);
                        adj |= 1ULL << (8 * v + nv);
                    }
                }
                if (seen.insert(canonical_code8(size, adj)).second) next.push_back(adj);
            }
        }
        level = std::move(next);
    }
    return level;
}

}  // namespace

std::vector<Multigraph> all_simple_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_simple_graphs: n must be in 1..8");
    std::vector<Multigraph> out;
    for (std::uint64_t adj : masks_up_to_iso(n)) out.push_back(graph_from_mask8(n, adj));
    return out;
}

std::vector<Multigraph> matching_covered_corpus(int max_n) {
    if (max_n < 2 || max_n > 8)
        throw std::invalid_argument("matching_covered_corpus: max_n must be in 2..8");
    std::vector<Multigraph> out;
    for (int n = 2; n <= max_n; n += 2) {
        for (auto& g : all_simple_graphs(n)) {
            if (!is_connected(g)) continue;
            if (!is_matchable(g)) continue;
            if (!is_matching_covered(g)) continue;
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace thetakit

#include <doctest.h>

#include <algorithm>

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "thetakit/generator.hpp"
#include "thetakit/matching.hpp"
#include "thetakit/named_graphs.hpp"
#include "thetakit/structure.hpp"

using namespace thetakit;
namespace ts = thetakit::testsupport;

namespace {

Multigraph star_k13() { return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Multigraph path_p4() { return Multigraph(4, {{0, 1}, {1, 2}, {2, 3}}); }

}  // namespace

TEST_CASE("maximum matching sizes") {
    CHECK(maximum_matching(named_graph(NamedGraph::K4)).size() == 2);
    CHECK(maximum_matching(star_k13()).size() == 1);
    CHECK(maximum_matching(named_graph(NamedGraph::Petersen)).size() == 5);
}

TEST_CASE("maximum matching agrees with backtracking on random graphs") {
    for (int seed = 1; seed <= 60; ++seed) {
        Multigraph g = random_matching_covered(4 + 2 * (seed % 4), 100 + seed);
        CHECK(maximum_matching(g).size() == ts::brute_max_matching_size(g));
    }
    // non matching covered shapes too
    CHECK(maximum_matching(path_p4()).size() == ts::brute_max_matching_size(path_p4()));
    CHECK(maximum_matching(star_k13()).size() == ts::brute_max_matching_size(star_k13()));
}

TEST_CASE("matchability and the Petersen cycle deletions") {
    Multigraph p = named_graph(NamedGraph::Petersen);
    // a 6-cycle: 0-1, 1-6, 6-8, 8-3, 3-4, 4-0; the rest is a claw
    VertexSet six({0, 1, 6, 8, 3, 4});
    auto rest6 = induced_subgraph(p, six.complement(10));
    CHECK(rest6.graph.vertex_count() == 4);
    CHECK(rest6.graph.edge_count() == 3);
    CHECK(!is_matchable(rest6.graph));
    CHECK(!is_matchable_excluding(p, six));

    // an 8-cycle: 0-1-2-7-5-8-3-4-0; the rest is K2
    VertexSet eight({0, 1, 2, 7, 5, 8, 3, 4});
    auto rest8 = induced_subgraph(p, eight.complement(10));
    CHECK(rest8.graph.vertex_count() == 2);
    CHECK(rest8.graph.edge_count() == 1);
    CHECK(is_matchable_excluding(p, eight));

    CHECK(!is_matchable(Multigraph(3, {{0, 1}, {1, 2}})));
}

TEST_CASE("odd component counts") {
    CHECK(odd_components_count(star_k13(), VertexSet::of({0})) == 3);
    CHECK(odd_components_count(named_graph(NamedGraph::K4), VertexSet{}) == 0);
    CHECK(odd_components_count(named_graph(NamedGraph::K33), VertexSet::of({0, 1, 2})) == 3);
}

TEST_CASE("perfect matchings with forced and forbidden edges") {
    Multigraph th = named_graph(NamedGraph::Theta);
    auto m = pm_with_forced(th, std::vector<int>{1});
    REQUIRE(m.has_value());
    CHECK(m->edge_ids == std::vector<int>{1});

    // forcing one K4 edge leaves a unique completion: the opposite edge
    Multigraph k4 = named_graph(NamedGraph::K4);
    auto mk = pm_with_forced(k4, std::vector<int>{0});  // edge 0-1
    REQUIRE(mk.has_value());
    CHECK(mk->edge_ids == std::vector<int>{0, 5});  // 0-1 and 2-3

    // adjacent forced edges admit no matching
    Multigraph p = named_graph(NamedGraph::Petersen);
    CHECK(!pm_with_forced(p, std::vector<int>{0, 1}).has_value());  // 0-1 and 1-2

    // forbid both edges of C2: no perfect matching remains
    Multigraph c2 = named_graph(NamedGraph::C2);
    CHECK(!pm_with_forced_and_forbidden(c2, {}, std::vector<int>{0, 1}).has_value());
    auto mc2 = pm_with_forced_and_forbidden(c2, {}, std::vector<int>{0});
    REQUIRE(mc2.has_value());
    CHECK(mc2->edge_ids == std::vector<int>{1});

    CHECK_THROWS(pm_with_forced(th, std::vector<int>{9}));
}

TEST_CASE("perfect matchings against exhaustive enumeration") {
    for (auto name : {NamedGraph::K4, NamedGraph::Prism, NamedGraph::T6, NamedGraph::C4Star}) {
        Multigraph g = named_graph(name);
        auto all = ts::brute_perfect_matchings(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            bool exists = false;
            for (const auto& pm : all)
                if (std::find(pm.begin(), pm.end(), e) != pm.end()) exists = true;
            CHECK(pm_with_forced(g, std::vector<int>{e}).has_value() == exists);
        }
    }
}

TEST_CASE("matching covered predicate") {
    // every 2-connected cubic graph of order <= 6
    for (auto name : {NamedGraph::Theta, NamedGraph::K4, NamedGraph::C4Star, NamedGraph::Prism,
                      NamedGraph::K33}) {
        CHECK(is_matching_covered(named_graph(name)));
    }
    // K4 minus an edge is not
    Multigraph k4e(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(!is_matching_covered(k4e));
    CHECK(!ts::brute_matching_covered(k4e));
    auto rep = analyze_matching_covered(k4e);
    CHECK(rep.reason == CoverageReport::Reason::UncoveredEdge);

    CHECK(!is_matching_covered(path_p4()));
    CHECK(!ts::brute_matching_covered(path_p4()));

    // disconnected and odd-order inputs short-circuit
    CHECK(analyze_matching_covered(Multigraph(4, {{0, 1}, {2, 3}})).reason ==
          CoverageReport::Reason::Disconnected);
    CHECK(analyze_matching_covered(Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})).reason ==
          CoverageReport::Reason::NotMatchable);

    for (int seed = 1; seed <= 40; ++seed) {
        Multigraph g = random_matching_covered(4 + 2 * (seed % 3), 300 + seed);
        CHECK(ts::brute_matching_covered(g));
    }
}

TEST_CASE("removable edges") {
    // bicorn: exactly one removable edge, the one joining 1 and 6
    Multigraph bic = named_graph(NamedGraph::Bicorn);
    auto rem = removable_edges(bic);
    REQUIRE(rem.size() == 1);
    const auto& e = bic.edge(rem[0]);
    CHECK(std::min(e.u, e.v) == 1);
    CHECK(std::max(e.u, e.v) == 6);

    CHECK(removable_edges(named_graph(NamedGraph::Theta)).size() == 3);
    CHECK(removable_edges(named_graph(NamedGraph::C2)).size() == 2);

    CHECK_THROWS(removable_edges(path_p4()));
}

TEST_CASE("Tutte violators verify") {
    for (auto g : {star_k13(), Multigraph(3, {{0, 1}, {1, 2}, {2, 0}}),
                   Multigraph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})}) {
        REQUIRE(!is_matchable(g));
        VertexSet s = tutte_violator(g);
        CHECK(odd_components_count(g, s) > s.size());
    }
    // matching covered graphs minus two same-class vertices
    Multigraph k33 = named_graph(NamedGraph::K33);
    auto sub = induced_subgraph(k33, VertexSet::of({2, 3, 4, 5}));
    REQUIRE(!is_matchable(sub.graph));
    VertexSet s = tutte_violator(sub.graph);
    CHECK(odd_components_count(sub.graph, s) > s.size());
}

TEST_CASE("Berge formula against exhaustive subsets") {
    std::vector<Multigraph> sample{named_graph(NamedGraph::K4), named_graph(NamedGraph::Prism),
                                   star_k13(), path_p4(), ts::k33_minus_edge()};
    for (int seed = 1; seed <= 10; ++seed)
        sample.push_back(random_matching_covered(6 + 2 * (seed % 2), 400 + seed));
    for (const auto& g : sample) {
        int nu = maximum_matching(g).size();
        CHECK(2 * nu == g.vertex_count() - ts::brute_max_deficiency(g));
    }
}

TEST_CASE("barriers of matching covered graphs are stable with odd components") {
    for (int seed = 1; seed <= 25; ++seed) {
        Multigraph g = random_matching_covered(6 + 2 * (seed % 3), 500 + seed);
        for (const auto& b : canonical_partition(g)) {
            REQUIRE(is_barrier(g, b));
            for (int x : b.ids())
                for (int y : b.ids())
                    if (x < y) CHECK(!g.has_edge_between(x, y));
            for (const auto& comp : components_excluding(g, b)) CHECK(comp.size() % 2 == 1);
        }
    }
}

#include <doctest.h>

#include <algorithm>

#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "thetakit/generator.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/structure.hpp"
#include "thetakit/theta.hpp"

using namespace thetakit;
namespace ts = thetakit::testsupport;

TEST_CASE("barrier predicate") {
    Multigraph k33 = named_graph(NamedGraph::K33);
    CHECK(is_barrier(k33, VertexSet::of({0, 1, 2})));
    CHECK(is_barrier(k33, VertexSet::of({3, 4, 5})));

    Multigraph t6 = named_graph(NamedGraph::T6);
    CHECK(!is_barrier(t6, VertexSet::of({0, 1})));  // a 2-separation instead
    CHECK(is_barrier(t6, VertexSet::of({0})));      // singletons always qualify
    CHECK(is_barrier(named_graph(NamedGraph::Petersen), VertexSet::of({4})));
}

TEST_CASE("common barriers") {
    Multigraph k33 = named_graph(NamedGraph::K33);
    CHECK(in_common_barrier(k33, 0, 1));
    CHECK(!in_common_barrier(k33, 0, 3));

    Multigraph k4 = named_graph(NamedGraph::K4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(!in_common_barrier(k4, u, v));

    Multigraph p = named_graph(NamedGraph::Petersen);
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) CHECK(!in_common_barrier(p, u, v));

    CHECK_THROWS(in_common_barrier(k4, 2, 2));
}

TEST_CASE("canonical partition") {
    auto classes_of = [](const Multigraph& g) { return canonical_partition(g); };

    auto k4 = classes_of(named_graph(NamedGraph::K4));
    CHECK(k4.size() == 4);

    auto k33 = classes_of(named_graph(NamedGraph::K33));
    REQUIRE(k33.size() == 2);
    CHECK(k33[0] == VertexSet::of({0, 1, 2}));
    CHECK(k33[1] == VertexSet::of({3, 4, 5}));

    auto cube = classes_of(named_graph(NamedGraph::Cube));
    REQUIRE(cube.size() == 2);
    CHECK(cube[0].size() == 4);
    CHECK(cube[1].size() == 4);

    // classes partition V and match the pairwise relation
    for (int seed = 1; seed <= 20; ++seed) {
        Multigraph g = random_matching_covered(6 + 2 * (seed % 3), 600 + seed);
        auto classes = canonical_partition(g);
        std::vector<int> cls(static_cast<size_t>(g.vertex_count()), -1);
        for (size_t i = 0; i < classes.size(); ++i)
            for (int v : classes[i].ids()) {
                CHECK(cls[static_cast<size_t>(v)] == -1);
                cls[static_cast<size_t>(v)] = static_cast<int>(i);
            }
        for (int v : cls) CHECK(v != -1);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                CHECK(in_common_barrier(g, u, v) ==
                      (cls[static_cast<size_t>(u)] == cls[static_cast<size_t>(v)]));
    }

    CHECK_THROWS(canonical_partition(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST_CASE("bicriticality") {
    CHECK(is_bicritical(named_graph(NamedGraph::Theta)));
    CHECK(is_bicritical(named_graph(NamedGraph::T6)));
    CHECK(!is_bicritical(named_graph(NamedGraph::K33)));
    CHECK(is_bicritical(named_graph(NamedGraph::Petersen)));
    CHECK(!is_bicritical(named_graph(NamedGraph::Cube)));
}

TEST_CASE("two separations") {
    auto t6 = two_separations(named_graph(NamedGraph::T6));
    REQUIRE(t6.size() == 1);
    CHECK(t6[0].u == 0);
    CHECK(t6[0].v == 1);
    CHECK(t6[0].components.size() == 2);

    CHECK(two_separations(named_graph(NamedGraph::Petersen)).empty());

    auto three = two_separations(ts::three_path_separation());
    REQUIRE(three.size() == 1);
    CHECK(three[0].u == 0);
    CHECK(three[0].v == 1);
    CHECK(three[0].components.size() == 3);

    // components of a 2-separation are all even
    for (int seed = 1; seed <= 20; ++seed) {
        Multigraph g = random_matching_covered(6 + 2 * (seed % 3), 700 + seed);
        for (const auto& s : two_separations(g)) {
            CHECK(s.components.size() >= 2);
            for (const auto& c : s.components) CHECK(c.size() % 2 == 0);
        }
    }
}

TEST_CASE("marked components") {
    Multigraph t6 = named_graph(NamedGraph::T6);
    TwoSeparation s = two_separations(t6).front();
    auto marked = marked_components(t6, s);
    REQUIRE(marked.size() == 2);
    for (const auto& mc : marked) {
        CHECK(isomorphic(mc.graph, named_graph(NamedGraph::K4)));
        CHECK(is_matching_covered(mc.graph));
        CHECK(mc.parent_edge[static_cast<size_t>(mc.marker_edge)] == -1);
    }

    // C6 with an antipodal separation: both marked components are C4
    Multigraph c6 = even_cycle(3);
    TwoSeparation sc{0, 3, components_excluding(c6, VertexSet::of({0, 3}))};
    auto mc6 = marked_components(c6, sc);
    REQUIRE(mc6.size() == 2);
    for (const auto& mc : mc6) CHECK(isomorphic(mc.graph, even_cycle(2)));

    // K2-sum of K4 and the prism: marked components recover both summands
    Multigraph sum = ts::sum_k4_prism();
    TwoSeparation ss = two_separations(sum).front();
    auto msum = marked_components(sum, ss);
    REQUIRE(msum.size() == 2);
    bool k4_found = false, prism_found = false;
    for (const auto& mc : msum) {
        CHECK(is_matching_covered(mc.graph));
        if (isomorphic(mc.graph, named_graph(NamedGraph::K4))) k4_found = true;
        if (isomorphic(mc.graph, named_graph(NamedGraph::Prism))) prism_found = true;
    }
    CHECK(k4_found);
    CHECK(prism_found);

    CHECK_THROWS(marked_components(t6, TwoSeparation{2, 3, {}}));
}

TEST_CASE("barrier contractions") {
    // triangle components with a stable barrier of size three: three K4s
    Multigraph fig = ts::barrier_triangles();
    auto bcs = barrier_contractions(fig, VertexSet::of({0, 1, 2}));
    REQUIRE(bcs.size() == 3);
    for (const auto& bc : bcs) {
        CHECK(bc.contraction.graph.vertex_count() == 4);
        CHECK(isomorphic(bc.contraction.graph, named_graph(NamedGraph::K4)));
        CHECK(is_matching_covered(bc.contraction.graph));
    }

    // K3,3 with one color class: three thetas
    auto k33 = barrier_contractions(named_graph(NamedGraph::K33), VertexSet::of({0, 1, 2}));
    REQUIRE(k33.size() == 3);
    for (const auto& bc : k33)
        CHECK(isomorphic(bc.contraction.graph, named_graph(NamedGraph::Theta)));

    // C6 with one color class: three C2s
    auto c6 = barrier_contractions(even_cycle(3), VertexSet::of({0, 2, 4}));
    REQUIRE(c6.size() == 3);
    for (const auto& bc : c6)
        CHECK(isomorphic(bc.contraction.graph, named_graph(NamedGraph::C2)));

    CHECK_THROWS(barrier_contractions(named_graph(NamedGraph::T6), VertexSet::of({0, 1})));
}

TEST_CASE("tight cuts") {
    Multigraph t6 = named_graph(NamedGraph::T6);
    CHECK(is_tight_cut(t6, VertexSet::of({0})).tight);  // trivial cuts are tight
    CHECK(is_tight_cut(t6, VertexSet::of({0, 2, 3})).tight);

    Multigraph k4 = named_graph(NamedGraph::K4);
    auto even = is_tight_cut(k4, VertexSet::of({0, 1}));
    CHECK(!even.tight);
    CHECK(!even.reason.empty());

    // tightness against exhaustive perfect matching enumeration
    for (auto g : {named_graph(NamedGraph::Prism), ts::three_brick_graph(), t6}) {
        auto pms = ts::brute_perfect_matchings(g);
        const int n = g.vertex_count();
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            if (std::popcount(mask) % 2 == 0) continue;
            std::vector<int> shore;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) shore.push_back(v);
            VertexSet x(shore);
            Cut c = cut(g, x);
            std::vector<char> in_cut(static_cast<size_t>(g.edge_count()), 0);
            for (int e : c.edge_ids) in_cut[static_cast<size_t>(e)] = 1;
            bool tight = true;
            for (const auto& pm : pms) {
                int hits = 0;
                for (int e : pm) hits += in_cut[static_cast<size_t>(e)];
                if (hits != 1) tight = false;
            }
            CHECK(is_tight_cut(g, x).tight == tight);
        }
    }
}

TEST_CASE("elp cuts") {
    // T6: a 2-separation cut
    auto t6cut = elp_cut(named_graph(NamedGraph::T6));
    REQUIRE(t6cut.has_value());
    CHECK(t6cut->kind == ElpCut::Kind::TwoSeparationCut);
    CHECK(is_tight_cut(named_graph(NamedGraph::T6), t6cut->shore).tight);

    // bricks and braces have none
    CHECK(!elp_cut(named_graph(NamedGraph::Petersen)).has_value());
    CHECK(!elp_cut(named_graph(NamedGraph::Cube)).has_value());
    CHECK(!elp_cut(named_graph(NamedGraph::K33)).has_value());
    CHECK(!elp_cut(even_cycle(2)).has_value());

    // K3,3 with one edge bisubdivided twice: a nontrivial barrier cut
    Multigraph k33sub = bisubdivide(named_graph(NamedGraph::K33), {{0, 2}});
    auto sub_cut = elp_cut(k33sub);
    REQUIRE(sub_cut.has_value());
    CHECK(sub_cut->kind == ElpCut::Kind::BarrierCut);
    CHECK(is_tight_cut(k33sub, sub_cut->shore).tight);
    CHECK(sub_cut->shore.size() >= 2);

    // K3,3 minus an edge: the cut comes from a non-maximal pair barrier
    Multigraph k33e = ts::k33_minus_edge();
    auto pair_cut = elp_cut(k33e);
    REQUIRE(pair_cut.has_value());
    CHECK(pair_cut->kind == ElpCut::Kind::BarrierCut);
    CHECK(pair_cut->barrier.size() == 2);
    CHECK(is_tight_cut(k33e, pair_cut->shore).tight);

    // completeness cross-check: elp finds a cut exactly when one exists
    for (int seed = 1; seed <= 30; ++seed) {
        Multigraph g = random_matching_covered(6 + 2 * (seed % 3), 800 + seed);
        auto fast = elp_cut(g);
        auto slow = find_nontrivial_tight_cut_exhaustive(g);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(is_tight_cut(g, fast->shore).tight);
            CHECK(fast->shore.size() >= 2);
            CHECK(g.vertex_count() - fast->shore.size() >= 2);
        }
    }
}

TEST_CASE("bicontraction") {
    // subdividing a K4 edge and bicontracting the new vertex restores K4
    Multigraph k4 = named_graph(NamedGraph::K4);
    Multigraph sub = bisubdivide(k4, {{0, 2}});
    int v0 = -1;
    for (int v = 0; v < sub.vertex_count(); ++v)
        if (sub.degree(v) == 2) v0 = v;
    REQUIRE(v0 != -1);
    // the two subdivision vertices are adjacent, so one bicontraction
    // already swallows both and restores K4
    CHECK(isomorphic(bicontract(sub, v0), k4));

    // the retract of petersen minus an edge is T6
    Multigraph p = named_graph(NamedGraph::Petersen);
    std::vector<Multigraph::Edge> edges;
    for (int e = 1; e < p.edge_count(); ++e) edges.push_back(p.edge(e));
    Multigraph pm(10, edges);  // dropped edge 0-1
    Multigraph r1 = bicontract(pm, 0);
    int deg2 = -1;
    for (int v = 0; v < r1.vertex_count(); ++v)
        if (r1.degree(v) == 2) deg2 = v;
    REQUIRE(deg2 != -1);
    Multigraph retract = bicontract(r1, deg2);
    CHECK(isomorphic(retract, named_graph(NamedGraph::T6)));

    CHECK(isomorphic(bicontract(even_cycle(3), 1), even_cycle(2)));

    CHECK_THROWS(bicontract(k4, 0));                                // degree 3
    CHECK_THROWS(bicontract(named_graph(NamedGraph::C2), 0));      // parallel neighbors
}

TEST_CASE("bicontraction preserves the theta verdict both ways") {
    std::vector<Multigraph> sample;
    for (int seed = 1; seed <= 15; ++seed)
        sample.push_back(random_matching_covered(6 + 2 * (seed % 3), 850 + seed));
    sample.push_back(bisubdivide(named_graph(NamedGraph::Prism), {{0, 2}}));
    sample.push_back(bisubdivide(named_graph(NamedGraph::T6), {{4, 2}}));
    int checked = 0;
    for (const auto& g : sample) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 2) continue;
            if (g.incident(v)[0].first == g.incident(v)[1].first) continue;
            Multigraph h = bicontract(g, v);
            if (!is_matching_covered(h)) continue;
            CHECK((is_theta_free(g).verdict == Verdict::Free) ==
                  (is_theta_free(h).verdict == Verdict::Free));
            ++checked;
            break;
        }
    }
    CHECK(checked >= 2);
}

#include <doctest.h>

#include <algorithm>
#include <array>
#include <thread>

#include "support/fixtures.hpp"
#include "thetakit/enumeration.hpp"
#include "thetakit/generator.hpp"
#include "thetakit/isomorphism.hpp"
#include "thetakit/oracle.hpp"
#include "thetakit/theta.hpp"
#include "thetakit/verify.hpp"

using namespace thetakit;
namespace ts = thetakit::testsupport;

TEST_CASE("decider verdicts on the named graphs") {
    CHECK(is_theta_free(named_graph(NamedGraph::K2)).verdict == Verdict::Free);
    CHECK(is_theta_free(named_graph(NamedGraph::C2)).verdict == Verdict::Free);
    CHECK(is_theta_free(named_graph(NamedGraph::K4)).verdict == Verdict::Free);
    CHECK(is_theta_free(named_graph(NamedGraph::T6)).verdict == Verdict::Free);
    CHECK(is_theta_free(even_cycle(5)).verdict == Verdict::Free);

    Certificate p = is_theta_free(named_graph(NamedGraph::Petersen));
    CHECK(p.verdict == Verdict::Free);
    CHECK(p.tree.kind == CertNode::Kind::Leaf);
    CHECK(p.tree.leaf_name == NamedGraph::Petersen);

    // two vertices with extra parallel edges stay based however thick
    Multigraph thick(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
    Certificate tc = is_theta_free(thick);
    CHECK(tc.verdict == Verdict::Based);
    REQUIRE(tc.witness.has_value());
    CHECK(verify_theta_witness(thick, *tc.witness).ok);

    for (auto name : {NamedGraph::Theta, NamedGraph::C4Star, NamedGraph::Prism, NamedGraph::K33,
                      NamedGraph::Cube, NamedGraph::Bicorn}) {
        Certificate c = is_theta_free(named_graph(name));
        CHECK(c.verdict == Verdict::Based);
        REQUIRE(c.witness.has_value());
        CHECK(verify_theta_witness(named_graph(name), *c.witness).ok);
    }

    // T6's certificate: a two-separation node with two K4 leaves
    Certificate t6 = is_theta_free(named_graph(NamedGraph::T6));
    CHECK(t6.tree.kind == CertNode::Kind::TwoSeparation);
    CHECK(t6.tree.sep_u == 0);
    CHECK(t6.tree.sep_v == 1);
    REQUIRE(t6.tree.children.size() == 2);
    for (const auto& child : t6.tree.children) {
        CHECK(child.kind == CertNode::Kind::Leaf);
        CHECK(child.leaf_name == NamedGraph::K4);
    }

    // the three-lobe graph fails directly at the multi-component separation
    Certificate lobes = is_theta_free(ts::three_lobe_k4());
    CHECK(lobes.verdict == Verdict::Based);
    CHECK(lobes.tree.kind == CertNode::Kind::BasedLeaf);
    CHECK(lobes.tree.reason == BasedReason::TwoSepThreeComponents);
    REQUIRE(lobes.witness.has_value());
    CHECK(verify_theta_witness(ts::three_lobe_k4(), *lobes.witness).ok);
}

TEST_CASE("decider rejects bad inputs") {
    CHECK_THROWS_AS(is_theta_free(Multigraph(4, {{0, 1}, {1, 2}, {2, 3}})), NotMatchingCoveredError);
    CHECK_THROWS_AS(is_theta_free(Multigraph(3, {{0, 1}, {1, 2}, {2, 0}})), NotMatchingCoveredError);
    CHECK_THROWS_AS(is_theta_free(Multigraph(4, {{0, 1}, {2, 3}})), NotMatchingCoveredError);
    try {
        is_theta_free(Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));
        CHECK(false);
    } catch (const NotMatchingCoveredError& e) {
        CHECK(e.report.reason == CoverageReport::Reason::UncoveredEdge);
        CHECK(e.report.offending_edge.has_value());
    }
}

TEST_CASE("even cycle fast path matches the general recursion") {
    for (int k : {2, 3, 4, 5}) {
        Multigraph c = even_cycle(k);
        DeciderOptions fast, slow;
        slow.even_cycle_fast_path = false;
        auto a = certificate_to_json(is_theta_free(c, fast));
        auto b = certificate_to_json(is_theta_free(c, slow));
        CHECK(a == b);
    }
}

TEST_CASE("k2 sums") {
    Multigraph k4 = named_graph(NamedGraph::K4);
    CHECK(isomorphic(k2_sum(k4, 0, k4, 0), named_graph(NamedGraph::T6)));
    CHECK(isomorphic(k2_sum(named_graph(NamedGraph::C2), 0, k4, 2), k4));
    CHECK(isomorphic(k2_sum(named_graph(NamedGraph::C2), 0, named_graph(NamedGraph::C2), 1),
                     named_graph(NamedGraph::C2)));
    // sums of matching covered graphs stay matching covered
    CHECK(is_matching_covered(k2_sum(k4, 1, named_graph(NamedGraph::Prism), 4)));
}

TEST_CASE("family generation") {
    auto t0_small = generate_family(Family::T0, 6);
    REQUIRE(t0_small.size() == 3);
    CHECK(isomorphic(t0_small[0].graph, named_graph(NamedGraph::C2)));
    CHECK(isomorphic(t0_small[1].graph, named_graph(NamedGraph::K4)));
    CHECK(isomorphic(t0_small[2].graph, named_graph(NamedGraph::T6)));

    auto t0_tiny = generate_family(Family::T0, 3);
    REQUIRE(t0_tiny.size() == 1);
    CHECK(isomorphic(t0_tiny[0].graph, named_graph(NamedGraph::C2)));

    auto t_ten = generate_family(Family::T, 10);
    bool has_petersen = false, has_chain8 = false;
    for (const auto& t : t_ten) {
        if (t.graph.vertex_count() == 10 && t.graph.edge_count() == 15 &&
            isomorphic(t.graph, named_graph(NamedGraph::Petersen)))
            has_petersen = true;
        if (t.graph.vertex_count() == 8 && brick_count(t.graph) == 3) has_chain8 = true;
    }
    CHECK(has_petersen);
    CHECK(has_chain8);

    // trees rebuild their graphs, and every member is theta-free and bicritical
    for (const auto& t : t_ten) {
        CHECK(isomorphic(evaluate_family_tree(t), t.graph));
        CHECK(is_theta_free(t.graph).verdict == Verdict::Free);
        CHECK(is_bicritical(t.graph));
    }
}

TEST_CASE("family recognition") {
    auto t6 = recognize_family(named_graph(NamedGraph::T6), Family::T0);
    REQUIRE(t6.has_value());
    REQUIRE(t6->left);
    REQUIRE(t6->right);
    CHECK(t6->left->leaf == NamedGraph::K4);
    CHECK(t6->right->leaf == NamedGraph::K4);

    CHECK(recognize_family(named_graph(NamedGraph::Petersen), Family::T).has_value());
    CHECK(!recognize_family(named_graph(NamedGraph::Petersen), Family::T0).has_value());
    CHECK(!recognize_family(named_graph(NamedGraph::Prism), Family::T).has_value());
    CHECK(!recognize_family(named_graph(NamedGraph::K2), Family::T0).has_value());
    CHECK(!recognize_family(named_graph(NamedGraph::Theta), Family::T0).has_value());

    // every generated member is recognized, with a tree that rebuilds it
    for (auto which : {Family::T0, Family::T}) {
        for (const auto& t : generate_family(which, 10)) {
            auto r = recognize_family(t.graph, which);
            REQUIRE(r.has_value());
            CHECK(isomorphic(evaluate_family_tree(*r), t.graph));
        }
    }
}

TEST_CASE("edge bounds") {
    BoundsReport p = check_bounds(named_graph(NamedGraph::Petersen));
    CHECK(p.bound_i_holds);
    CHECK(p.bound_i_tight);  // 15 = 15 + 1 - 1
    CHECK(p.bound_ii_holds);
    CHECK(!p.bound_ii_tight);  // 1 < 4
    CHECK(p.bound_iii_holds);
    CHECK(!p.bound_iii_tight);  // 15 < 18
    CHECK(p.in_t);
    CHECK(!p.in_t0);

    BoundsReport t6 = check_bounds(named_graph(NamedGraph::T6));
    CHECK(t6.b == 2);
    CHECK(t6.bound_i_tight);
    CHECK(t6.bound_ii_tight);
    CHECK(t6.bound_iii_tight);
    CHECK(t6.in_t0);

    BoundsReport k4 = check_bounds(named_graph(NamedGraph::K4));
    CHECK(k4.bound_i_tight);
    CHECK(k4.bound_ii_tight);
    CHECK(k4.bound_iii_tight);
    CHECK(k4.in_t0);

    // K2 attains equality in (ii) alone and sits outside the families
    BoundsReport k2 = check_bounds(named_graph(NamedGraph::K2));
    CHECK(k2.bound_ii_tight);
    CHECK(!k2.bound_iii_tight);
    CHECK(!k2.in_t0);
}

TEST_CASE("free bipartite graphs collapse to K2 and even cycles") {
    for (const auto& g : matching_covered_corpus(6)) {
        Certificate c = is_theta_free(g);
        if (c.verdict != Verdict::Free || !is_bipartite(g)) continue;
        bool k2 = g.vertex_count() == 2 && g.edge_count() == 1;
        CHECK((k2 || is_simple_even_cycle(g)));
    }
}

TEST_CASE("minimum degree four forces a theta") {
    for (int seed = 1; seed <= 10; ++seed) {
        Multigraph g = random_matching_covered_min_degree(6 + 2 * (seed % 3), 4, 1800 + seed);
        REQUIRE(g.min_degree() >= 4);
        CHECK(is_theta_free(g).verdict == Verdict::Based);
    }
}

TEST_CASE("certificate json round trip") {
    for (auto name : {NamedGraph::T6, NamedGraph::Prism, NamedGraph::K33, NamedGraph::Petersen}) {
        Certificate c = is_theta_free(named_graph(name));
        auto j = certificate_to_json(c);
        Certificate back = certificate_from_json(j);
        CHECK(certificate_to_json(back) == j);
    }
}

TEST_CASE("the search cap omits witnesses but keeps the verdict") {
    Multigraph g = ts::petersen_plus(0, 2);
    DeciderOptions opt;
    opt.search_cap = 4;
    Certificate c = is_theta_free(g, opt);
    CHECK(c.verdict == Verdict::Based);
    CHECK(!c.witness.has_value());
    CHECK(c.witness_omitted);
    CHECK(c.tree.kind == CertNode::Kind::BasedLeaf);
    CHECK(c.tree.reason == BasedReason::NonleafBrick);
}

TEST_CASE("bound (ii) holds for based graphs too, tightly for T6 plus a chord") {
    // b <= n/2 - 1 is not special to theta-free graphs
    for (int seed = 1; seed <= 10; ++seed) {
        Multigraph g = random_matching_covered(6 + 2 * (seed % 3), 2200 + seed);
        BoundsReport r = check_bounds(g);
        CHECK(r.bound_ii_holds);
    }
    // T6 + uv attains it with equality while being theta-based
    Multigraph t6 = named_graph(NamedGraph::T6);
    auto edges = t6.edges();
    edges.push_back({0, 1});
    Multigraph t6uv(6, std::move(edges));
    REQUIRE(is_theta_free(t6uv).verdict == Verdict::Based);
    BoundsReport r = check_bounds(t6uv);
    CHECK(r.b == 2);
    CHECK(r.bound_ii_tight);
}

TEST_CASE("graphs are safe to share across threads") {
    Multigraph p = named_graph(NamedGraph::Petersen);
    Multigraph t6 = named_graph(NamedGraph::T6);
    Multigraph prism = named_graph(NamedGraph::Prism);
    std::vector<std::thread> workers;
    std::array<int, 6> verdicts{};
    for (int t = 0; t < 6; ++t) {
        workers.emplace_back([&, t] {
            const Multigraph& g = t % 3 == 0 ? p : (t % 3 == 1 ? t6 : prism);
            verdicts[static_cast<size_t>(t)] =
                is_theta_free(g).verdict == Verdict::Free ? 1 : 0;
        });
    }
    for (auto& w : workers) w.join();
    CHECK(verdicts == std::array<int, 6>{1, 1, 0, 1, 1, 0});
}

#include <gtest/gtest.h>

#include <map>
#include <random>

#include <misbound/misbound.hpp>

#include "support/oracles.hpp"

using namespace misbound;

TEST(Graph, MakeGraphNormalizesEdges) {
    Graph g = make_graph(4, {{1, 0}, {0, 1}, {2, 3}});
    EXPECT_EQ(g.order(), 4);
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(3, 2));
    EXPECT_FALSE(g.adjacent(0, 2));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(Graph, RejectsLoopsAndBadVertices) {
    EXPECT_THROW(make_graph(3, {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(make_graph(3, {{-1, 0}}), std::invalid_argument);
}

TEST(Graph, DeleteVerticesCompactsInOrder) {
    Graph p = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    Graph h = delete_vertices(p, {2});
    EXPECT_EQ(h.order(), 4);
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(Graph, ComponentsMapBackToParent) {
    Graph g = make_graph(6, {{0, 3}, {3, 5}, {1, 4}});
    auto cs = components(g);
    ASSERT_EQ(cs.size(), 3u);
    EXPECT_EQ(cs[0].to_parent, (std::vector<int>{0, 3, 5}));
    EXPECT_EQ(cs[1].to_parent, (std::vector<int>{1, 4}));
    EXPECT_EQ(cs[2].to_parent, (std::vector<int>{2}));
    EXPECT_EQ(cs[0].graph.edge_count(), 2);
}

TEST(Graph, ClassifyKinds) {
    EXPECT_EQ(classify(edgeless_graph(0)).kind, GraphKind::forest);
    EXPECT_EQ(classify(edgeless_graph(1)).kind, GraphKind::tree);
    EXPECT_EQ(classify(edgeless_graph(3)).kind, GraphKind::forest);
    EXPECT_EQ(classify(build_star(5)).kind, GraphKind::tree);
    EXPECT_EQ(classify(make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}})).kind, GraphKind::other);
    EXPECT_EQ(classify(disjoint_union(build_cycle(3), build_cycle(3))).kind, GraphKind::other);

    auto c = classify(build_H(8, 5));
    EXPECT_EQ(c.kind, GraphKind::unicyclic);
    EXPECT_EQ(c.cycle_parity, CycleParity::even);
    EXPECT_EQ(c.cycle, (std::vector<int>{0, 1, 2, 3}));

    auto l = classify(build_L(9));
    EXPECT_EQ(l.cycle_parity, CycleParity::odd);
    EXPECT_EQ(l.cycle.size(), 7u);
}

TEST(Graph, SupportReductionFindsLeavesOfOneSupport) {
    Graph t = build_T(7, 4);
    auto r = find_support_reduction(t);
    ASSERT_TRUE(r);
    EXPECT_GE(t.degree(r->support), 2);
    for (int leaf : r->leaves) {
        EXPECT_EQ(t.degree(leaf), 1);
        EXPECT_TRUE(t.adjacent(leaf, r->support));
    }
    EXPECT_FALSE(find_support_reduction(build_cycle(6)));
}

TEST(Graph6, KnownEncodings) {
    Graph star = parse_graph6("D?{");
    EXPECT_EQ(star.order(), 5);
    EXPECT_EQ(star.edges(), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    EXPECT_EQ(parse_graph6("@").order(), 1);
    EXPECT_EQ(parse_graph6("@").edge_count(), 0);
    EXPECT_EQ(parse_graph6("?").order(), 0);
    EXPECT_TRUE(isomorphic(parse_graph6("DUW"), build_cycle(5)));
    EXPECT_TRUE(isomorphic(parse_graph6("Dhc"), build_cycle(5)));
    EXPECT_EQ(write_graph6(star), "D?{");
    EXPECT_EQ(parse_graph6(">>graph6<<D?{"), star);
}

TEST(Graph6, RejectsMalformedInput) {
    EXPECT_THROW(parse_graph6(""), graph6_error);
    EXPECT_THROW(parse_graph6("D?"), graph6_error);      // truncated
    EXPECT_THROW(parse_graph6("D?{?"), graph6_error);    // trailing byte
    EXPECT_THROW(parse_graph6("D?\x7f"), graph6_error);  // out of range
    EXPECT_THROW(parse_graph6("A`"), graph6_error);      // padding bit set
    EXPECT_THROW(parse_graph6("~?"), graph6_error);
}

TEST(Graph6, LongPrefixRoundTrip) {
    Graph c = build_cycle(100);
    auto text = write_graph6(c);
    EXPECT_EQ(text[0], '~');
    EXPECT_EQ(parse_graph6(text), c);
}

TEST(Graph6, RandomRoundTrip) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        Graph g = oracle::random_graph(static_cast<int>(rng() % 70), 0.3, rng);
        EXPECT_EQ(parse_graph6(write_graph6(g)), g);
    }
}

TEST(Dot, RoundTripAndComments) {
    Graph g = build_H(8, 5);
    EXPECT_EQ(parse_dot(to_dot(g)), g);
    Graph h = parse_dot("graph X {\n  // a comment\n  0; 1; 2;\n  0 -- 2;\n}\n");
    EXPECT_EQ(h.order(), 3);
    EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 2}}));
    EXPECT_THROW(parse_dot("digraph G { 0 -> 1; }"), std::invalid_argument);
}

TEST(Canonical, InvariantUnderRelabeling) {
    std::mt19937_64 rng(11);
    for (double p : {0.2, 0.5, 0.8}) {
        for (int i = 0; i < 60; ++i) {
            const int n = 1 + static_cast<int>(rng() % 14);
            Graph g = oracle::random_graph(n, p, rng);
            auto perm = oracle::random_permutation(n, rng);
            Graph h = relabel(g, perm);
            EXPECT_EQ(canonical_form(g), canonical_form(h)) << write_graph6(g);
        }
    }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
    // Same degree sequence, different structure.
    Graph two_triangles = disjoint_union(build_cycle(3), build_cycle(3));
    EXPECT_FALSE(isomorphic(two_triangles, build_cycle(6)));
    EXPECT_FALSE(isomorphic(build_T(8, 4), build_T(8, 5)));
    // Regular graphs stress refinement: the 3-prism and K_{3,3}.
    Graph prism = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    Graph k33 = make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    EXPECT_FALSE(isomorphic(prism, k33));
}

TEST(Canonical, AgreesWithTreeCodes) {
    for (int n = 1; n <= 8; ++n) {
        std::map<std::string, std::string> by_form;
        oracle::for_each_labeled_tree(n, [&](const Graph& t) {
            auto [it, fresh] = by_form.emplace(canonical_form(t), oracle::tree_code(t));
            if (!fresh) ASSERT_EQ(it->second, oracle::tree_code(t));
        });
        if (n == 8) EXPECT_EQ(by_form.size(), 23u);
    }
}

TEST(Canonical, OrderLimit) {
    EXPECT_THROW(canonical_form(build_cycle(21)), std::out_of_range);
    EXPECT_NO_THROW(canonical_form(build_cycle(40), 64));
}

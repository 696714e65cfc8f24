#include <gtest/gtest.h>

#include <set>

#include <misbound/misbound.hpp>

#include "support/oracles.hpp"

using namespace misbound;

namespace {

std::set<std::string> forms(const GenerationTask& task) {
    std::set<std::string> out;
    std::uint64_t seen = 0;
    for_each_graph(task, [&](const Graph& g) {
        out.insert(canonical_form(g));
        ++seen;
    });
    EXPECT_EQ(seen, out.size()) << "duplicate isomorphism class emitted";
    return out;
}

}  // namespace

TEST(RootedTrees, CountsAndOrder) {
    const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
    for (int n = 1; n <= 9; ++n) {
        auto all = rooted_trees(n);
        EXPECT_EQ(all.size(), expected[n - 1]) << n;
        EXPECT_TRUE(std::is_sorted(all.rbegin(), all.rend())) << n;
    }
    EXPECT_EQ(rooted_trees(3).front(), (LevelSequence{0, 1, 2}));
    EXPECT_EQ(rooted_trees(3).back(), (LevelSequence{0, 1, 1}));
}

TEST(FreeTrees, Examples) {
    EXPECT_EQ(free_trees(1).size(), 1u);
    auto four = free_trees(4);
    ASSERT_EQ(four.size(), 2u);
    std::set<std::string> got{canonical_form(four[0]), canonical_form(four[1])};
    std::set<std::string> want{canonical_form(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})), canonical_form(build_star(4))};
    EXPECT_EQ(got, want);
    EXPECT_EQ(free_trees(7).size(), 11u);
    EXPECT_EQ(free_trees(8).size(), 23u);
    EXPECT_EQ(free_trees(10).size(), 106u);
}

TEST(FreeTrees, MatchPrueferOracle) {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> got;
        for (const auto& t : free_trees(n)) {
            ASSERT_EQ(classify(t).kind, GraphKind::tree);
            got.insert(oracle::tree_code(t));
        }
        EXPECT_EQ(got.size(), free_trees(n).size());
        EXPECT_EQ(got.size(), oracle::tree_classes(n)) << n;
    }
}

TEST(Unicyclic, Examples) {
    const std::uint64_t expected[] = {1, 2, 5, 13, 33, 89};
    for (int n = 3; n <= 8; ++n) {
        EXPECT_EQ(count_stream({GraphClass::unicyclic, n}), expected[n - 3]) << n;
    }
    EXPECT_EQ(count_stream({GraphClass::unicyclic, 6, 6}), 1u);
    EXPECT_EQ(count_stream({GraphClass::unicyclic, 6, 5}), 1u);
    for (int n = 3; n <= 10; ++n) {
        std::uint64_t by_length = 0;
        for (int c = 3; c <= n; ++c) by_length += count_stream({GraphClass::unicyclic, n, c});
        EXPECT_EQ(by_length, count_stream({GraphClass::unicyclic, n}));
    }
}

TEST(Unicyclic, EveryOutputIsUnicyclicAndDistinct) {
    for (int n = 3; n <= 11; ++n) {
        for_each_graph({GraphClass::unicyclic, n}, [&](const Graph& g) {
            ASSERT_EQ(g.order(), n);
            ASSERT_EQ(classify(g).kind, GraphKind::unicyclic) << write_graph6(g);
        });
        forms({GraphClass::unicyclic, n});
    }
}

TEST(Unicyclic, MatchEdgeSubsetOracle) {
    for (int n = 3; n <= 7; ++n) {
        EXPECT_EQ(forms({GraphClass::unicyclic, n}).size(), oracle::unicyclic_classes(n)) << n;
    }
}

TEST(Unicyclic, NoDuplicatesUpTo14) {
    const std::uint64_t expected[] = {1806, 5026, 13999, 39260};
    for (int n = 11; n <= 14; ++n) {
        EXPECT_EQ(forms({GraphClass::unicyclic, n}).size(), expected[n - 11]) << n;
    }
}

TEST(Forests, Examples) {
    EXPECT_EQ(count_stream({GraphClass::forest, 1}), 1u);
    EXPECT_EQ(count_stream({GraphClass::forest, 2}), 2u);
    EXPECT_EQ(count_stream({GraphClass::forest, 4}), 6u);
}

TEST(Forests, MatchEdgeSubsetOracle) {
    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> got;
        std::uint64_t seen = 0;
        for_each_graph({GraphClass::forest, n}, [&](const Graph& f) {
            ASSERT_TRUE(is_forest(f));
            ASSERT_EQ(f.order(), n);
            got.insert(oracle::forest_code(f));
            ++seen;
        });
        EXPECT_EQ(seen, got.size());
        EXPECT_EQ(got.size(), oracle::forest_classes(n)) << n;
    }
}

TEST(Generation, AlphaFilter) {
    std::uint64_t total = 0;
    for (int a = 5; a <= 9; ++a) {
        GenerationTask task{GraphClass::tree, 10, {}, a};
        for_each_graph(task, [&](const Graph& t) { EXPECT_EQ(independence_number(t), a); });
        total += count_stream(task);
    }
    EXPECT_EQ(total, 106u);
}

TEST(Generation, OrderLimits) {
    EXPECT_THROW(FreeTreeStream(19), std::out_of_range);
    EXPECT_THROW(UnicyclicStream(15), std::out_of_range);
    EXPECT_THROW(ForestStream(17), std::out_of_range);
    EXPECT_THROW(FreeTreeStream(0), std::out_of_range);
    EXPECT_THROW(UnicyclicStream(2), std::out_of_range);
    EXPECT_NO_THROW(FreeTreeStream(19, true));
    EXPECT_THROW(count_stream({GraphClass::tree, 5, 3}), std::invalid_argument);
}

TEST(Necklaces, LeastRepresentative) {
    EXPECT_TRUE(is_least_necklace({0, 0, 1}));
    EXPECT_FALSE(is_least_necklace({0, 1, 0}));
    EXPECT_TRUE(is_least_necklace({0, 1, 2, 1}));
    EXPECT_TRUE(is_least_necklace({0, 1, 3, 2}));
    EXPECT_FALSE(is_least_necklace({0, 2, 3, 1}));  // reversal rotates to 0,1,3,2
}

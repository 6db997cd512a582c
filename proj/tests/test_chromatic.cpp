#include <gtest/gtest.h>

#include <random>
#include <thread>

#include <shadowpoly/chromatic.hpp>
#include <shadowpoly/generate.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace shadowpoly;

TEST(Chromatic, Triangle) { EXPECT_EQ(poly_format(chromatic_polynomial(graphs::complete(3))), "k^3 - 3k^2 + 2k"); }

TEST(Chromatic, SmallCases) {
    EXPECT_EQ(chromatic_polynomial(Graph(0)), RationalPoly::constant(1));
    EXPECT_EQ(chromatic_polynomial(Graph(1)), RationalPoly::variable());
    EXPECT_EQ(chromatic_polynomial(Graph(3)), RationalPoly::variable().pow(3));
    EXPECT_EQ(chromatic_polynomial(graphs::cycle(4)), fixtures::poly("k^4 - 4k^3 + 6k^2 - 3k"));
}

TEST(Chromatic, TreesAreKTimesKMinusOnePower) {
    for (std::size_t n = 1; n <= 9; ++n)
        for (const Graph& t : all_trees(n))
            EXPECT_EQ(chromatic_polynomial(t), to_rational(tree_term(static_cast<unsigned>(n - 1), 0, 0)));
}

TEST(Chromatic, PrintedCounterexamplePolynomials) {
    EXPECT_EQ(chromatic_polynomial(fixtures::twin_diamonds()), fixtures::twin_diamonds_chromatic());
    EXPECT_EQ(chromatic_polynomial(fixtures::k4_with_ears()), fixtures::k4_with_ears_chromatic());
}

TEST(Chromatic, MatchesColoringCountsOnAllSmallGraphs) {
    ChromaticCache cache;
    for (std::size_t n = 0; n <= 5; ++n)
        for (const Graph& g : all_graphs(n)) {
            RationalPoly p = chromatic_polynomial(g, cache);
            for (int k = 0; k <= 4; ++k) EXPECT_EQ(poly_eval(p, k), oracles::count_colorings(g, k));
        }
}

TEST(Chromatic, MatchesInterpolationOnRandomGraphs) {
    std::mt19937 rng(23);
    ChromaticCache cache;
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = oracles::random_graph(6 + trial % 2, 0.5, rng);
        EXPECT_EQ(chromatic_polynomial(g, cache), oracles::chromatic_by_interpolation(g));
    }
}

TEST(Chromatic, StructuralProperties) {
    std::mt19937 rng(29);
    ChromaticCache cache;
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = 1 + trial % 9;
        Graph g = oracles::random_graph(n, 0.45, rng);
        IntegerPoly p = chromatic_integer_polynomial(g, cache);
        EXPECT_EQ(p.degree(), static_cast<int>(n));
        EXPECT_EQ(p.leading(), 1);
        EXPECT_EQ(-p.coefficient(n - 1), BigInt(g.size()));
        for (std::size_t i = 1; i <= n; ++i) {
            BigInt coef = p.coefficient(i);
            bool odd_gap = (n - i) % 2 == 1;
            EXPECT_TRUE(odd_gap ? coef <= 0 : coef >= 0);
        }
        for (int k = 0; k <= 6; ++k) EXPECT_GE(poly_eval(p, k), 0);
        Graph h = oracles::random_graph(1 + trial % 4, 0.5, rng);
        EXPECT_EQ(chromatic_polynomial(g.disjoint_union(h), cache),
                  chromatic_polynomial(g, cache) * chromatic_polynomial(h, cache));
    }
}

TEST(Chromatic, ZeroBelowChromaticNumber) {
    Graph k5 = graphs::complete(5);
    auto p = chromatic_polynomial(k5);
    for (int k = 0; k < 5; ++k) EXPECT_EQ(poly_eval(p, k), 0);
    EXPECT_EQ(poly_eval(p, 5), 120);
    auto odd = chromatic_polynomial(graphs::cycle(7));
    EXPECT_EQ(poly_eval(odd, 2), 0);
    EXPECT_GT(poly_eval(odd, 3), 0);
}

TEST(ChromaticCache, SharedAcrossThreads) {
    ChromaticCache cache;
    std::vector<Graph> graphs;
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) graphs.push_back(oracles::random_graph(9, 0.5, rng));
    std::vector<RationalPoly> serial;
    for (const auto& g : graphs) serial.push_back(chromatic_polynomial(g));
    std::vector<RationalPoly> parallel(graphs.size());
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < graphs.size(); i += 4)
                parallel[i] = chromatic_polynomial(graphs[i], cache);
        });
    for (auto& th : pool) th.join();
    EXPECT_EQ(parallel, serial);
    EXPECT_GT(cache.size(), 0u);
}

TEST(ChromaticCache, EntriesEqualTheirClassPolynomial) {
    ChromaticCache cache;
    Graph g = fixtures::split_pair_left();
    auto p = chromatic_polynomial(g, cache);
    Graph relabeled = g.relabeled(std::vector<Vertex>{7, 6, 5, 4, 3, 2, 1, 0});
    EXPECT_EQ(chromatic_polynomial(relabeled, cache), p);
    EXPECT_EQ(chromatic_polynomial(relabeled), p);
}

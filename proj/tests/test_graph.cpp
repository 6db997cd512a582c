#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include <shadowpoly/graph.hpp>
#include <shadowpoly/graph6.hpp>

#include "oracles.hpp"

using namespace shadowpoly;

TEST(Graph, AddEdgeIsSymmetricAndIdempotent) {
    Graph g(3);
    g.add_edge(0, 2);
    g.add_edge(2, 0);
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_FALSE(g.has_edge(0, 1));
}

TEST(Graph, RejectsLoopsAndBadVertices) {
    Graph g(2);
    EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 2), std::out_of_range);
}

TEST(Graph, InducedKeepsOrderOfSelection) {
    Graph p = graphs::path(4);  // 0-1-2-3
    std::vector<Vertex> pick{3, 2, 0};
    Graph h = p.induced(pick);
    EXPECT_EQ(h.order(), 3u);
    EXPECT_TRUE(h.has_edge(0, 1));
    EXPECT_FALSE(h.has_edge(1, 2));
    EXPECT_EQ(h.size(), 1u);
}

TEST(Graph, NamedFamilies) {
    EXPECT_EQ(graphs::complete(5).size(), 10u);
    EXPECT_EQ(graphs::cycle(6).size(), 6u);
    EXPECT_EQ(graphs::star(3).degree(0), 3u);
    EXPECT_EQ(graphs::hypercube(3).order(), 8u);
    EXPECT_EQ(graphs::hypercube(3).size(), 12u);
    std::size_t sizes[] = {3, 2};
    Graph prism = graphs::clique_product(sizes);
    EXPECT_EQ(prism.order(), 6u);
    EXPECT_EQ(prism.size(), 9u);  // two triangles and a perfect matching
}

TEST(Components, SplitsDisjointUnion) {
    Graph g = graphs::complete(3).disjoint_union(graphs::complete(2));
    auto comps = connected_components(g);
    ASSERT_EQ(comps.size(), 2u);
    EXPECT_EQ(comps[0].graph.order(), 3u);
    EXPECT_EQ(comps[1].graph.order(), 2u);
    EXPECT_EQ(comps[1].vertices, (std::vector<Vertex>{3, 4}));
}

TEST(Components, ConnectedGraphIsOneComponent) {
    Graph c = graphs::cycle(5);
    auto comps = connected_components(c);
    ASSERT_EQ(comps.size(), 1u);
    EXPECT_EQ(comps[0].graph, c);
}

TEST(Components, EmptyGraphHasNone) { EXPECT_TRUE(connected_components(Graph(0)).empty()); }

TEST(Components, PartitionAndEmbedBack) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = oracles::random_graph(7, 0.25, rng);
        std::vector<int> hits(g.order(), 0);
        std::size_t edges = 0;
        for (const auto& c : connected_components(g)) {
            EXPECT_TRUE(is_connected(c.graph));
            for (Vertex v : c.vertices) ++hits[v];
            EXPECT_EQ(g.induced(c.vertices), c.graph);
            edges += c.graph.size();
        }
        EXPECT_EQ(edges, g.size());
        for (int h : hits) EXPECT_EQ(h, 1);
    }
}

TEST(Trees, IsTree) {
    EXPECT_TRUE(is_tree(graphs::path(5)));
    EXPECT_FALSE(is_tree(graphs::cycle(6)));
    EXPECT_TRUE(is_tree(Graph(1)));
    EXPECT_FALSE(is_tree(Graph(0)));
    EXPECT_FALSE(is_tree(graphs::path(2).disjoint_union(graphs::path(3)).disjoint_union(Graph(0))));
}

TEST(Graph6, SmallExamples) {
    EXPECT_EQ(parse_graph6("A_"), graphs::complete(2));
    EXPECT_EQ(parse_graph6("A?"), Graph(2));
    EXPECT_EQ(parse_graph6("Bw"), graphs::complete(3));
    EXPECT_EQ(encode_graph6(graphs::complete(2)), "A_");
    EXPECT_EQ(encode_graph6(graphs::complete(3)), "Bw");
    EXPECT_EQ(encode_graph6(Graph(0)), "?");
    EXPECT_EQ(parse_graph6(">>graph6<<Bw"), graphs::complete(3));
}

TEST(Graph6, RoundTripEveryLabeledGraphUpToFive) {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const Graph& g : oracles::labeled_graphs(n)) {
            std::string s = encode_graph6(g);
            EXPECT_EQ(parse_graph6(s), g) << s;
            EXPECT_EQ(encode_graph6(parse_graph6(s)), s);
        }
}

TEST(Graph6, ErrorsCarryOffsets) {
    try {
        parse_graph6("B");
        FAIL() << "short record accepted";
    } catch (const graph6_error& e) {
        EXPECT_EQ(e.offset(), 1u);
    }
    try {
        parse_graph6("Bw?");
        FAIL() << "trailing byte accepted";
    } catch (const graph6_error& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    try {
        parse_graph6("B\x20");
        FAIL() << "out-of-range byte accepted";
    } catch (const graph6_error& e) {
        EXPECT_EQ(e.offset(), 1u);
    }
    EXPECT_THROW(parse_graph6("~?@"), graph6_error);  // long form
    EXPECT_THROW(parse_graph6("Bx"), graph6_error);   // padding bits set
    EXPECT_THROW(parse_graph6(""), graph6_error);
}

TEST(Graph6, TooLargeToEncode) { EXPECT_THROW(encode_graph6(Graph(63)), std::length_error); }

TEST(Graph6, LargestShortForm) {
    Graph g = graphs::cycle(62);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
}

TEST(Graph6, StreamSkipsBlankLinesAndReportsErrors) {
    std::istringstream in("A_\n\nBw  \nB!\r\nA?\n");
    std::size_t line = 0;
    Graph6Record rec;
    std::vector<Graph6Record> seen;
    while (next_graph6_record(in, line, rec)) seen.push_back(rec);
    ASSERT_EQ(seen.size(), 4u);
    EXPECT_EQ(seen[1].line, 3u);
    EXPECT_EQ(seen[1].text, "Bw");
    EXPECT_FALSE(seen[2].graph.has_value());
    EXPECT_EQ(seen[2].line, 4u);
    EXPECT_FALSE(seen[2].error.empty());
    EXPECT_EQ(*seen[3].graph, Graph(2));
}

TEST(Orderings, ConnectedOrderingCheck) {
    Graph p = graphs::path(3);
    std::vector<Vertex> good{1, 0, 2}, bad{0, 2, 1};
    EXPECT_TRUE(is_connected_ordering(p, good));
    EXPECT_FALSE(is_connected_ordering(p, bad));
}

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <shadowpoly/generate.hpp>
#include <shadowpoly/graph6.hpp>
#include <shadowpoly/search.hpp>

#include "fixtures.hpp"

using namespace shadowpoly;

namespace {

std::vector<SearchInput> as_inputs(const std::vector<Graph>& gs) {
    std::vector<SearchInput> out;
    for (const auto& g : gs) out.push_back({g, encode_graph6(g), 0});
    return out;
}

} // namespace

TEST(Search, FindsThePrintedPair) {
    auto report = search_p2_collisions(as_inputs({fixtures::twin_diamonds(), fixtures::k4_with_ears(), graphs::path(8)}));
    EXPECT_EQ(report.graphs_read, 3u);
    ASSERT_EQ(report.groups.size(), 1u);
    const auto& group = report.groups[0];
    EXPECT_TRUE(group.is_counterexample());
    EXPECT_EQ(group.pairs, fixtures::pair1_pairs());
    EXPECT_EQ(group.members.size(), 2u);
    EXPECT_EQ(report.counterexamples().size(), 1u);
}

TEST(Search, IsomorphicCopiesCollideWithoutCounting) {
    Graph g = graphs::cycle(5);
    auto report = search_p2_collisions(as_inputs({g, g.relabeled(std::vector<Vertex>{2, 4, 1, 0, 3})}));
    ASSERT_EQ(report.groups.size(), 1u);
    EXPECT_FALSE(report.groups[0].is_counterexample());
    EXPECT_TRUE(report.counterexamples().empty());
}

TEST(Search, NothingBelowEightVertices) {
    auto all = all_graphs_upto(6);
    auto report = search_p2_collisions(as_inputs(all), 4);
    EXPECT_EQ(report.graphs_read, all.size());
    EXPECT_TRUE(report.counterexamples().empty());
    // trees with equal degree multisets do collide, harmlessly
    EXPECT_FALSE(report.groups.empty());
}

TEST(Search, ThreadCountDoesNotChangeTheReport) {
    auto inputs = as_inputs(all_graphs(5));
    auto serial = search_p2_collisions(inputs, 1), parallel = search_p2_collisions(inputs, 8);
    ASSERT_EQ(serial.groups.size(), parallel.groups.size());
    for (std::size_t i = 0; i < serial.groups.size(); ++i) {
        EXPECT_EQ(serial.groups[i].pairs, parallel.groups[i].pairs);
        ASSERT_EQ(serial.groups[i].members.size(), parallel.groups[i].members.size());
        for (std::size_t j = 0; j < serial.groups[i].members.size(); ++j)
            EXPECT_EQ(serial.groups[i].members[j].graph6, parallel.groups[i].members[j].graph6);
    }
}

TEST(Search, CuratedStreamReportsExactlyThePair) {
    std::ifstream in(std::string(SHADOWPOLY_TEST_DATA) + "/curated8.g6");
    ASSERT_TRUE(in);
    auto report = search_p2_collisions(in, 4);
    EXPECT_EQ(report.graphs_read, 42u);
    EXPECT_TRUE(report.skipped.empty());
    auto found = report.counterexamples();
    ASSERT_EQ(found.size(), 1u);
    std::vector<std::string> names;
    for (const auto& m : found[0]->members) names.push_back(m.graph6);
    EXPECT_EQ(names, (std::vector<std::string>{"G|?GWS", "G~WA@?"}));
    EXPECT_EQ(found[0]->members[0].line, 14u);
    EXPECT_EQ(found[0]->members[1].line, 30u);
}

TEST(Search, MalformedLinesAreSkipped) {
    std::istringstream in("G|?GWS\nnot graph6 !!\n\nG~WA@?\nB\n");
    auto report = search_p2_collisions(in);
    EXPECT_EQ(report.graphs_read, 2u);
    ASSERT_EQ(report.skipped.size(), 2u);
    EXPECT_EQ(report.skipped[0].line, 2u);
    EXPECT_EQ(report.skipped[1].line, 5u);
    EXPECT_FALSE(report.skipped[0].error.empty());
    EXPECT_EQ(report.counterexamples().size(), 1u);
}

TEST(Search, CheckedInCounterexamples) {
    std::ifstream in(std::string(SHADOWPOLY_TEST_DATA) + "/counterexamples.g6");
    ASSERT_TRUE(in);
    std::vector<Graph> gs;
    std::size_t line = 0;
    Graph6Record rec;
    while (next_graph6_record(in, line, rec)) {
        ASSERT_TRUE(rec.graph.has_value()) << rec.error;
        gs.push_back(*rec.graph);
    }
    ASSERT_EQ(gs.size(), 4u);
    EXPECT_EQ(gs[0], fixtures::twin_diamonds());
    EXPECT_EQ(gs[1], fixtures::k4_with_ears());
    EXPECT_EQ(gs[2], fixtures::split_pair_left());
    EXPECT_EQ(gs[3], fixtures::split_pair_right());

    auto report = search_p2_collisions(as_inputs(gs));
    auto found = report.counterexamples();
    ASSERT_EQ(found.size(), 2u);
    for (const auto* grp : found) {
        ASSERT_EQ(grp->members.size(), 2u);
        EXPECT_EQ(grp->chromatic_classes.size(), 2u);
    }
    // the second pair is connected; both of its printed chromatic
    // polynomials appear, with the labels of the drawing swapped
    std::vector<RationalPoly> second{chromatic_polynomial(gs[2]), chromatic_polynomial(gs[3])};
    EXPECT_EQ(second[0], fixtures::split_pair_right_chromatic());
    EXPECT_EQ(second[1], fixtures::split_pair_left_chromatic());
}

TEST(Search, InputOrderDoesNotMatter) {
    auto inputs = as_inputs(all_graphs(5));
    inputs.push_back({fixtures::twin_diamonds(), "G|?GWS", 0});
    inputs.push_back({fixtures::k4_with_ears(), "G~WA@?", 0});
    auto forward = search_p2_collisions(inputs);
    std::reverse(inputs.begin(), inputs.end());
    auto backward = search_p2_collisions(inputs);
    ASSERT_EQ(forward.groups.size(), backward.groups.size());
    for (std::size_t i = 0; i < forward.groups.size(); ++i) {
        EXPECT_EQ(forward.groups[i].pairs, backward.groups[i].pairs);
        EXPECT_EQ(forward.groups[i].chromatic_classes, backward.groups[i].chromatic_classes);
        ASSERT_EQ(forward.groups[i].members.size(), backward.groups[i].members.size());
    }
}

#include <gtest/gtest.h>

#include "cwlcp/graph.hpp"

using namespace cwlcp;

namespace {

const char* kP3 = "v a\nv b\nv c\ne a b\ne b c\n";

}

TEST(Graph, ParseK2) {
    auto g = parse_graph("v a\nv b\ne a b");
    EXPECT_EQ(g.vertex_count(), 2);
    EXPECT_EQ(g.edge_count(), 1);
    EXPECT_TRUE(g.has_edge("a", "b"));
}

TEST(Graph, ParseErrors) {
    EXPECT_THROW(parse_graph("v a\ne a a"), ParseError);
    EXPECT_THROW(parse_graph("v a\nv a"), ParseError);
    EXPECT_THROW(parse_graph("v a\ne a z"), ParseError);
    EXPECT_THROW(parse_graph("v a\nv b\ne a b\ne b a"), ParseError);
    EXPECT_THROW(parse_graph("x y"), ParseError);
    EXPECT_THROW(parse_graph("v a-b"), ParseError);
    try {
        parse_graph("# header\nv a\n\ne a a\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4);
    }
}

TEST(Graph, DegreeSequenceOfP3) {
    auto g = parse_graph(kP3);
    EXPECT_EQ(g.degree(g.index_of("a")), 1);
    EXPECT_EQ(g.degree(g.index_of("b")), 2);
    EXPECT_EQ(g.degree(g.index_of("c")), 1);
}

TEST(Graph, Neighbors) {
    auto g = parse_graph(kP3);
    EXPECT_EQ(g.neighbors(std::string("b")), (std::set<std::string>{"a", "c"}));
    EXPECT_EQ(g.neighbors(std::string("a")), (std::set<std::string>{"b"}));
    auto h = parse_graph("v x\nv y");
    EXPECT_TRUE(h.neighbors(std::string("x")).empty());
}

TEST(Graph, HasEdge) {
    auto g = parse_graph(kP3);
    EXPECT_TRUE(g.has_edge("a", "b"));
    EXPECT_FALSE(g.has_edge("a", "c"));
    EXPECT_TRUE(g.has_edge("b", "a"));
    EXPECT_THROW(g.has_edge("a", "zz"), ValidationError);
}

TEST(Graph, SymmetryAndHandshake) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : graphs::connected_up_to_iso(n)) {
            int sum = 0;
            for (int u = 0; u < n; ++u) {
                sum += g.degree(u);
                for (int v = 0; v < n; ++v) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
            }
            EXPECT_EQ(sum, 2 * g.edge_count());
        }
}

TEST(Graph, ConnectedGraphCounts) {
    // connected unlabeled graphs on 1..6 vertices
    const int expected[] = {1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 6; ++n) {
        auto gs = graphs::connected_up_to_iso(n);
        EXPECT_EQ(static_cast<int>(gs.size()), expected[n - 1]) << n;
        for (const auto& g : gs) EXPECT_TRUE(g.is_connected());
    }
}

TEST(Graph, TextRoundTripAndComplement) {
    auto g = graphs::cycle(5);
    auto h = parse_graph(g.to_text());
    EXPECT_EQ(g.edge_names(), h.edge_names());
    auto co = g.complement();
    EXPECT_EQ(co.edge_count(), 10 - 5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) EXPECT_NE(g.has_edge(u, v), co.has_edge(u, v));
}

#include <gtest/gtest.h>

#include "cwlcp/cwexpr.hpp"
#include "support.hpp"

using namespace cwlcp;

namespace {

const char* kK2 = "(join 1 2 (union (node a 1) (node b 2)))";
const char* kP3 = "(join 2 3 (union (join 1 2 (union (node a 1) (node b 2))) (node c 3)))";

Graph p3_graph() { return parse_graph("v a\nv b\nv c\ne a b\ne b c\n"); }

// Every edge of the realized graph is counted once at the join that creates it.
int joined_pairs(const CwExpression& e) {
    int total = 0;
    detail::simulate(
        e, e.root(),
        [&](NodeId, const std::vector<int>& ci, const std::vector<int>& cj, const auto&) {
            total += static_cast<int>(ci.size() * cj.size());
        },
        [](auto, const auto&) {});
    return total;
}

// Vertices sharing a label in a subexpression see the same neighbors outside it.
bool upcoming_neighbors_agree(const CwExpression& e) {
    const auto g = realize(e).graph;
    for (NodeId id = 0; id < e.size(); ++id) {
        const auto labels = labels_at(e, id);
        std::map<Label, std::set<std::string>> seen;
        std::map<Label, bool> first;
        for (const auto& [v, l] : labels) {
            std::set<std::string> outside;
            for (const auto& u : g.neighbors(v))
                if (!labels.count(u)) outside.insert(u);
            if (!first[l]) {
                first[l] = true;
                seen[l] = outside;
            } else if (seen[l] != outside) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST(CwExpr, ParseK2) {
    auto e = parse_expression(kK2);
    EXPECT_EQ(e.k(), 2);
    EXPECT_EQ(e.size(), 4);
    EXPECT_EQ(e.node(e.root()).kind, OpKind::join);
}

TEST(CwExpr, ParseP3) {
    auto e = parse_expression(kP3);
    EXPECT_EQ(e.k(), 3);
    EXPECT_EQ(e.vertex_count(), 3);
}

TEST(CwExpr, ParseErrors) {
    EXPECT_THROW(parse_expression("(join 1 1 (node a 1))"), ParseError);
    EXPECT_THROW(parse_expression("(rename 2 2 (node a 1))"), ParseError);
    EXPECT_THROW(parse_expression("(union (node a 1) (node a 2))"), ParseError);
    EXPECT_THROW(parse_expression("(node a 0)"), ParseError);
    EXPECT_THROW(parse_expression("(node a 1"), ParseError);
    EXPECT_THROW(parse_expression("(node a 1) x"), ParseError);
    EXPECT_THROW(parse_expression("(frob a 1)"), ParseError);
    EXPECT_THROW(parse_expression("(k 0 (node a 1))"), ParseError);
    try {
        parse_expression("; comment\n(union (node a 1)\n  (node b x))");
        FAIL();
    } catch (const ParseError& err) {
        EXPECT_EQ(err.line(), 3);
        EXPECT_GT(err.column(), 1);
    }
}

TEST(CwExpr, BuilderRejectsBadTrees) {
    ExpressionBuilder b;
    auto a = b.create("a", 1);
    EXPECT_THROW(b.create("a", 2), ValidationError);
    auto c = b.create("c", 2);
    auto u = b.disjoint_union(a, c);
    EXPECT_THROW(b.join(1, 2, a), ValidationError);  // a already adopted
    EXPECT_THROW(b.disjoint_union(u, 17), ValidationError);
    ExpressionBuilder two_roots;
    two_roots.create("x", 1);
    auto y = two_roots.create("y", 1);
    EXPECT_THROW(two_roots.finish(y), ValidationError);
}

TEST(CwExpr, ValidateExamples) {
    EXPECT_TRUE(validate(parse_expression(kP3)).ok());
    auto red = validate(parse_expression("(join 1 2 (join 1 2 (union (node a 1) (node b 2))))"));
    EXPECT_FALSE(red.ok());
    EXPECT_TRUE(red.has(ViolationKind::redundant_join));
    auto ren = validate(parse_expression("(k 3 (rename 1 3 (node a 1)))"));
    EXPECT_FALSE(ren.ok());
    EXPECT_TRUE(ren.has(ViolationKind::rename_into_empty));
    auto range = validate(parse_expression("(k 2 (node a 3))"));
    EXPECT_TRUE(range.has(ViolationKind::label_out_of_range));
    EXPECT_THROW(require_valid(parse_expression("(k 3 (rename 1 3 (node a 1)))")), ValidationError);
}

TEST(CwExpr, VacuousJoinIsWarning) {
    auto r = validate(parse_expression("(k 3 (join 1 3 (union (node a 1) (node b 2))))"));
    EXPECT_TRUE(r.ok());
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_EQ(r.warnings[0].kind, ViolationKind::vacuous_join);
}

TEST(CwExpr, ViolationPositions) {
    auto r = validate(parse_expression("(join 1 2\n  (join 1 2 (union (node a 1) (node b 2))))"));
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].line, 1);
    EXPECT_EQ(r.violations[0].column, 1);
}

TEST(CwExpr, RealizeExamples) {
    auto k2 = realize(parse_expression(kK2));
    EXPECT_EQ(k2.graph.edge_count(), 1);
    EXPECT_EQ(k2.labels.at("a"), 1);
    EXPECT_EQ(k2.labels.at("b"), 2);
    auto p3 = realize(parse_expression(kP3));
    EXPECT_EQ(p3.graph.edge_names(), (std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}}));
    EXPECT_EQ(p3.labels, (std::map<std::string, Label>{{"a", 1}, {"b", 2}, {"c", 3}}));
    EXPECT_EQ(realize(build_family(Family::complete, 4)).graph.edge_count(), 6);
}

TEST(CwExpr, FinalAndUnusedLabels) {
    EXPECT_TRUE(unused_labels(parse_expression(kP3)).empty());
    EXPECT_EQ(unused_labels(parse_expression(std::string("(k 3 ") + kK2 + ")")), (std::set<Label>{3}));
    auto renamed = parse_expression(std::string("(k 3 (rename 1 2 ") + kK2 + "))");
    EXPECT_EQ(unused_labels(renamed), (std::set<Label>{1, 3}));
    EXPECT_EQ(final_labels(renamed), (std::map<std::string, Label>{{"a", 2}, {"b", 2}}));
}

TEST(CwExpr, FamilyExamples) {
    EXPECT_TRUE(check_realizes(build_family(Family::complete, 3), graphs::complete(3)));
    auto p4 = graphs::path(4);
    auto t = trivial_expression(p4);
    EXPECT_EQ(t.k(), 4);
    int creates = 0, unions = 0, joins = 0;
    for (const auto& n : t.nodes()) {
        creates += n.kind == OpKind::create;
        unions += n.kind == OpKind::disjoint_union;
        joins += n.kind == OpKind::join;
    }
    EXPECT_EQ(creates, 4);
    EXPECT_EQ(unions, 3);
    EXPECT_EQ(joins, 3);
    EXPECT_EQ(realize(build_family(Family::path, 2)).graph.edge_names(), graphs::complete(2).edge_names());
    EXPECT_EQ(to_text(path_expression(3)), "(k 3 (join 2 3 (union (join 1 2 (union (node v1 1) (node v2 2))) (node v3 3))))");
}

TEST(CwExpr, CheckRealizesExamples) {
    auto p3 = parse_expression(kP3);
    EXPECT_TRUE(check_realizes(p3, p3_graph()));
    EXPECT_FALSE(check_realizes(p3, parse_graph("v a\nv b\nv c\ne a b\ne b c\ne a c")));
    EXPECT_FALSE(check_realizes(parse_expression(kK2), parse_graph("v x\nv y\ne x y")));
}

TEST(CwExpr, FamiliesValidateAndRealize) {
    for (int n = 1; n <= 12; ++n) {
        auto p = path_expression(n);
        EXPECT_TRUE(validate(p).ok()) << n;
        EXPECT_TRUE(validate(p).warnings.empty()) << n;
        EXPECT_TRUE(check_realizes(p, graphs::path(n))) << n;
        EXPECT_EQ(p.k(), 3);
        auto k = complete_expression(n);
        EXPECT_TRUE(validate(k).ok());
        EXPECT_TRUE(check_realizes(k, graphs::complete(n)));
        EXPECT_EQ(k.k(), 2);
        if (n >= 3) {
            auto c = cycle_expression(n);
            EXPECT_TRUE(validate(c).ok()) << n;
            EXPECT_TRUE(validate(c).warnings.empty()) << n;
            EXPECT_TRUE(check_realizes(c, graphs::cycle(n))) << n;
            EXPECT_LE(c.k(), 4);
        }
        for (int m = 1; m <= 4; ++m) {
            auto b = complete_bipartite_expression(m, n);
            EXPECT_TRUE(validate(b).ok());
            Graph target;
            for (int i = 1; i <= m; ++i) target.add_vertex("a" + std::to_string(i));
            for (int j = 1; j <= n; ++j) target.add_vertex("b" + std::to_string(j));
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j) target.add_edge("a" + std::to_string(i), "b" + std::to_string(j));
            EXPECT_TRUE(check_realizes(b, target));
        }
    }
    EXPECT_THROW(build_family(Family::trivial, 3), ValidationError);
    EXPECT_THROW(cycle_expression(2), ValidationError);
}

TEST(CwExpr, EdgeCountMatchesJoinedPairs) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : testing_support::connected_graphs(n)) {
            auto e = trivial_expression(g);
            EXPECT_TRUE(validate(e).ok());
            EXPECT_TRUE(check_realizes(e, g));
            EXPECT_EQ(joined_pairs(e), realize(e).graph.edge_count());
        }
    for (int n = 3; n <= 10; ++n) {
        EXPECT_EQ(joined_pairs(cycle_expression(n)), n);
        EXPECT_EQ(joined_pairs(path_expression(n)), n - 1);
    }
}

TEST(CwExpr, UpcomingNeighborInvariant) {
    for (int n = 1; n <= 9; ++n) {
        EXPECT_TRUE(upcoming_neighbors_agree(path_expression(n)));
        EXPECT_TRUE(upcoming_neighbors_agree(complete_expression(n)));
        if (n >= 3) EXPECT_TRUE(upcoming_neighbors_agree(cycle_expression(n)));
    }
    for (const auto& g : testing_support::connected_graphs(5)) EXPECT_TRUE(upcoming_neighbors_agree(trivial_expression(g)));
}

TEST(CwExpr, TextRoundTrip) {
    for (int n = 1; n <= 7; ++n) {
        auto e = path_expression(n);
        auto back = parse_expression(to_text(e));
        EXPECT_EQ(to_text(back), to_text(e));
        EXPECT_EQ(back.k(), e.k());
        EXPECT_TRUE(check_realizes(back, graphs::path(n)));
    }
}

TEST(CwExpr, DeclaredKWidensLabels) {
    auto e = parse_expression(std::string("(k 5 ") + kK2 + ")");
    EXPECT_EQ(e.k(), 5);
    EXPECT_EQ(e.max_label(), 2);
    EXPECT_TRUE(e.label_used(e.root(), 1));
    EXPECT_FALSE(e.label_used(e.root(), 5));
}

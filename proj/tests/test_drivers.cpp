#include <gtest/gtest.h>

#include "support.hpp"

using namespace cwlcp;
using namespace testing_support;

namespace {

std::vector<std::string> names_of(const Graph& g, std::initializer_list<int> vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(g.name(v));
    return out;
}

}  // namespace

TEST(Drivers, Compositions) {
    EXPECT_EQ(enumerate_compositions(4, 2, 2), (std::vector<Composition>{{2, 2}}));
    EXPECT_EQ(enumerate_compositions(6, 2, 2), (std::vector<Composition>{{2, 4}, {3, 3}, {4, 2}}));
    EXPECT_EQ(enumerate_compositions(5, 3, 0).size(), 21u);
    EXPECT_TRUE(enumerate_compositions(3, 2, 2).empty());
    EXPECT_EQ(enumerate_compositions(5, {1, 0, 3}), (std::vector<Composition>{{1, 0, 4}, {1, 1, 3}, {2, 0, 3}}));
    int seen = 0;
    for_each_composition(10, {0, 0, 0}, [&](const Composition&) { return ++seen == 4; });
    EXPECT_EQ(seen, 4);
}

TEST(Drivers, GlobalRoman) {
    for (int n : {1, 3}) {
        auto g = graphs::complete(n);
        auto r = solve_global_k_roman(1, g, complete_expression(n));
        EXPECT_EQ(r.weight, WeightValue(n));
        ASSERT_TRUE(r.coloring);
        EXPECT_TRUE(oracle::is_global_k_roman(g, *r.coloring, 1));
        EXPECT_EQ(oracle::min_global_k_roman(g, 1)->value, n);
    }
}

TEST(Drivers, Community) {
    auto k4 = graphs::complete(4);
    auto yes = solve_k_community(2, k4, complete_expression(4), true);
    EXPECT_EQ(yes.weight, WeightValue(0));
    EXPECT_EQ(yes.sizes, (Composition{2, 2}));
    auto p4 = graphs::path(4);
    EXPECT_EQ(solve_k_community(2, p4, path_expression(4)).weight, WeightValue(0));
    auto star = graphs::star(3);
    EXPECT_TRUE(solve_k_community(2, star, trivial_expression(star), true).weight.is_error());
    // k does not divide |V|
    auto r = solve_k_community(2, graphs::path(5), path_expression(5), true);
    EXPECT_TRUE(r.weight.is_error());
    EXPECT_EQ(r.solves, 0);
}

TEST(Drivers, ProportionallyDense) {
    auto c4 = graphs::cycle(4);
    auto e = cycle_expression(4);
    auto r = solve_max_pds(c4, e);
    EXPECT_EQ(r.weight, WeightValue(2));
    EXPECT_TRUE(oracle::is_pds(c4, detail::members(*r.coloring, builtin::kIn)));
    EXPECT_TRUE(solve_max_pds(c4, e, names_of(c4, {0, 2})).weight.is_error());
    auto with = solve_max_pds(c4, e, names_of(c4, {1}));
    EXPECT_EQ(with.weight, WeightValue(2));
    EXPECT_EQ((*with.coloring)[1], builtin::kIn);
    EXPECT_EQ(solve_max_pds(graphs::complete(3), complete_expression(3)).weight, WeightValue(2));
}

TEST(Drivers, QuasiClique) {
    auto diamond = graphs::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    EXPECT_EQ(solve_max_quasi_clique(Rational{1, 1}, diamond, trivial_expression(diamond)).weight, WeightValue(3));
    EXPECT_EQ(solve_max_quasi_clique(Rational{1, 2}, graphs::path(4), path_expression(4)).weight, WeightValue(3));
    auto none = graphs::empty(3);
    EXPECT_TRUE(solve_max_quasi_clique(Rational{1, 2}, none, trivial_expression(none)).weight.is_error());
}

// Drivers agree with the definition brute forces on every small connected graph.
TEST(DriversProperty, MatchDefinitions) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& g : connected_graphs(n)) {
            auto e = trivial_expression(g);
            auto gr = solve_global_k_roman(1, g, e);
            EXPECT_EQ(gr.weight, WeightValue(oracle::min_global_k_roman(g, 1)->value)) << g.to_text();

            auto def_c = oracle::find_k_community(g, 2, false);
            EXPECT_EQ(solve_k_community(2, g, e).weight.is_error(), !def_c.has_value()) << g.to_text();

            auto def_p = oracle::max_pds(g);
            auto p = solve_max_pds(g, e);
            EXPECT_EQ(p.weight.is_error(), !def_p.has_value());
            if (def_p) EXPECT_EQ(p.weight, WeightValue(def_p->value)) << g.to_text();

            for (Rational gamma : {Rational{1, 2}, Rational{2, 3}, Rational{1, 1}}) {
                auto def_q = oracle::max_quasi_clique(g, gamma);
                auto qc = solve_max_quasi_clique(gamma, g, e);
                ASSERT_TRUE(def_q);
                EXPECT_EQ(qc.weight, WeightValue(def_q->value)) << g.to_text();
            }
        }
}

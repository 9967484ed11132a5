#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace cwlcp;
using namespace testing_support;

TEST(Oracle, KnownOptima) {
    EXPECT_EQ(oracle::brute_force_solve(builtin::min_dominating_set(graphs::path(6)), graphs::path(6)).weight, WeightValue(2));
    for (int n = 1; n <= 9; ++n) {
        auto g = graphs::path(n);
        EXPECT_EQ(oracle::brute_force_solve(builtin::min_dominating_set(g), g).weight, WeightValue((n + 2) / 3)) << n;
    }
    EXPECT_EQ(oracle::brute_force_solve(builtin::odd_dominating_set(graphs::path(3)), graphs::path(3)).weight, WeightValue(1));
    EXPECT_EQ(oracle::brute_force_solve(builtin::k_roman(graphs::path(3), 2), graphs::path(3)).weight, WeightValue(3));
    EXPECT_TRUE(oracle::brute_force_solve(builtin::k_coloring(graphs::cycle(5), 2), graphs::cycle(5)).weight.is_error());
}

TEST(Oracle, VerifyColoring) {
    auto g = graphs::complete(2);
    auto m = builtin::k_roman(g, 3);
    auto v = oracle::verify_coloring(m, g, {0, 0});
    EXPECT_FALSE(v);
    EXPECT_NE(v.diagnostic.find("v1"), std::string::npos);
    EXPECT_TRUE(oracle::verify_coloring(m, g, {4, 0}));
    EXPECT_FALSE(oracle::verify_coloring(m, g, {4}));
    auto listed = builtin::max_independent_set(g).with_lists({{0}, {0, 1}});
    EXPECT_FALSE(oracle::verify_coloring(listed, g, {1, 0}));
    EXPECT_TRUE(oracle::verify_coloring(listed, g, {0, 1}));
    auto pds = builtin::specified_size_pds(graphs::cycle(4), 2, 2);
    EXPECT_FALSE(oracle::verify_coloring(pds, graphs::cycle(4), {1, 1, 1, 0}));
    EXPECT_THROW(oracle::verify_coloring(m, graphs::path(3), {0, 0, 0}), MismatchError);
}

TEST(Oracle, BudgetIsEnforced) {
    auto g = graphs::path(5);
    EXPECT_THROW(oracle::brute_force_solve(builtin::max_independent_set(g), g, 10), BudgetExceeded);
    EXPECT_THROW(oracle::max_pds(g, {}, 10), BudgetExceeded);
}

TEST(Oracle, DefinitionCheckers) {
    auto p3 = graphs::path(3);
    EXPECT_TRUE(oracle::is_k_roman(p3, {0, 2, 0}, 1));
    EXPECT_FALSE(oracle::is_k_roman(p3, {0, 1, 0}, 1));
    EXPECT_TRUE(oracle::is_k_roman(p3, {0, 3, 0}, 2));
    EXPECT_TRUE(oracle::is_global_k_roman(graphs::complete(1), {1}, 1));
    EXPECT_FALSE(oracle::is_global_k_roman(p3, {0, 2, 0}, 1));  // leaves are adjacent in the complement only
    EXPECT_TRUE(oracle::is_k_community(graphs::complete(4), {0, 0, 1, 1}, 2));
    EXPECT_FALSE(oracle::is_k_community(graphs::star(3), {0, 0, 1, 1}, 2));
    EXPECT_TRUE(oracle::is_pds(graphs::cycle(4), {true, true, false, false}));
    EXPECT_FALSE(oracle::is_pds(graphs::cycle(4), {true, false, true, false}));
    EXPECT_TRUE(oracle::is_quasi_clique(graphs::path(4), {true, true, true, false}, Rational{1, 2}));
    EXPECT_FALSE(oracle::is_quasi_clique(graphs::path(4), {true, true, true, false}, Rational{1, 1}));
}

TEST(Oracle, DefinitionBruteForces) {
    EXPECT_EQ(oracle::min_global_k_roman(graphs::complete(1), 1)->value, 1);
    EXPECT_EQ(oracle::min_global_k_roman(graphs::complete(3), 1)->value, 3);
    EXPECT_EQ(oracle::max_pds(graphs::cycle(4))->value, 2);
    EXPECT_FALSE(oracle::max_pds(graphs::cycle(4), {0, 2}).has_value());
    EXPECT_TRUE(oracle::find_k_community(graphs::complete(4), 2, true).has_value());
    EXPECT_FALSE(oracle::find_k_community(graphs::star(3), 2, true).has_value());
    Graph diamond = graphs::complete(4);
    diamond = graphs::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    EXPECT_EQ(oracle::max_quasi_clique(diamond, Rational{1, 1})->value, 3);
    EXPECT_FALSE(oracle::max_quasi_clique(graphs::empty(3), Rational{1, 2}).has_value());
}

// Truncating the counts at the model's cap never changes a verdict.
TEST(OracleProperty, CappedVerificationAgrees) {
    std::mt19937 rng(3);
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : connected_graphs(n)) {
            std::vector<ProblemModel> models = {builtin::k_coloring(g, 3), builtin::max_independent_set(g),
                                                builtin::min_dominating_set(g), builtin::k_roman(g, 2),
                                                builtin::k_roman(g, 3)};
            for (const auto& m : models)
                for (int t = 0; t < 20; ++t) {
                    Coloring c(n);
                    for (auto& x : c) x = static_cast<Color>(rng() % m.color_count());
                    EXPECT_EQ(oracle::verify_coloring(m, g, c).ok, oracle::verify_coloring(m, g, c, m.stability_cap()).ok);
                }
        }
}

// The model brute force agrees with its own verifier and with the definition checks.
TEST(OracleProperty, SelfConsistency) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : connected_graphs(n)) {
            for (int k = 1; k <= 2; ++k) {
                auto m = builtin::k_roman(g, k);
                auto s = oracle::brute_force_solve(m, g);
                ASSERT_TRUE(s.coloring);
                EXPECT_TRUE(oracle::verify_coloring(m, g, *s.coloring));
                EXPECT_TRUE(oracle::is_k_roman(g, *s.coloring, k));
                EXPECT_EQ(oracle::coloring_weight(m, *s.coloring), s.weight);
            }
            // strict global Roman: minimum over compositions equals the definition
            WeightValue best = WeightValue::error();
            for (const auto& c : enumerate_compositions(n, 3, 0)) {
                auto m = builtin::specified_size_global_k_roman(g, 1, c);
                best = m.weight_set().prefer(best, oracle::brute_force_solve(m, g).weight);
            }
            auto def = oracle::min_global_k_roman(g, 1);
            ASSERT_TRUE(def);
            EXPECT_EQ(best, WeightValue(def->value));
        }
}

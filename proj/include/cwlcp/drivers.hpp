#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cwlcp/checkmodel.hpp"
#include "cwlcp/cwexpr.hpp"
#include "cwlcp/dpcore.hpp"
#include "cwlcp/errors.hpp"
#include "cwlcp/graph.hpp"
#include "cwlcp/oracle.hpp"

namespace cwlcp {

using Composition = std::vector<int>;

// Every composition of `total` into parts[i] >= lower[i], lexicographic.
inline void for_each_composition(int total, const std::vector<int>& lower, const std::function<bool(const Composition&)>& f) {
    const int parts = static_cast<int>(lower.size());
    if (parts == 0) {
        if (total == 0) f({});
        return;
    }
    std::vector<int> rest(parts + 1, 0);  // rest[i] = sum of lower bounds from i on
    for (int i = parts - 1; i >= 0; --i) rest[i] = rest[i + 1] + lower[i];
    if (rest[0] > total) return;
    Composition c(parts);
    bool stop = false;
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (stop) return;
        if (i == parts - 1) {
            c[i] = left;
            stop = f(c);
            return;
        }
        for (int x = lower[i]; x + rest[i + 1] <= left && !stop; ++x) {
            c[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, total);
}

inline std::vector<Composition> enumerate_compositions(int total, const std::vector<int>& lower) {
    std::vector<Composition> out;
    for_each_composition(total, lower, [&](const Composition& c) {
        out.push_back(c);
        return false;
    });
    return out;
}

inline std::vector<Composition> enumerate_compositions(int total, int parts, int lower) {
    return enumerate_compositions(total, std::vector<int>(parts, lower));
}

struct DriverResult {
    WeightValue weight;               // Error when nothing qualifies
    std::optional<Coloring> coloring; // by graph vertex
    Composition sizes;                // composition of the answer
    int solves = 0;
    std::size_t memo_entries = 0;     // summed over solves
    double elapsed_ms = 0;
};

namespace detail {

class DriverClock {
public:
    double ms() const { return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline void require_model_witness(const ProblemModel& m, const Graph& g, const Solution& s) {
    if (!s.coloring) throw InternalError(m.name() + ": feasible solve without a witness");
    auto v = oracle::verify_coloring(m, g, *s.coloring);
    if (!v) throw InternalError(m.name() + ": witness fails verification: " + v.diagnostic);
    if (oracle::coloring_weight(m, *s.coloring) != s.weight) throw InternalError(m.name() + ": witness weight differs");
}

inline std::vector<bool> members(const Coloring& c, Color a) {
    std::vector<bool> out(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) out[v] = c[v] == a;
    return out;
}

}  // namespace detail

// Compositions are tried in order of their weight sum_a a * s_a, which every
// coloring with those class sizes attains, so the first feasible one is optimal.
inline DriverResult solve_global_k_roman(int k, const Graph& g, const CwExpression& e,
                                         ComplementCheck variant = ComplementCheck::strict, bool prune = true) {
    detail::DriverClock clock;
    auto comps = enumerate_compositions(g.vertex_count(), k + 2, 0);
    auto weight = [](const Composition& c) {
        long w = 0;
        for (std::size_t a = 0; a < c.size(); ++a) w += static_cast<long>(a) * c[a];
        return w;
    };
    std::stable_sort(comps.begin(), comps.end(), [&](const auto& x, const auto& y) { return weight(x) < weight(y); });
    DriverResult out;
    for (const auto& c : comps) {
        auto m = builtin::specified_size_global_k_roman(g, k, c, variant);
        auto s = solve(m, e, SolveOptions{true, prune});
        ++out.solves;
        out.memo_entries += s.stats.memo_entries;
        if (s.weight.is_error()) continue;
        detail::require_model_witness(m, g, s);
        if (variant == ComplementCheck::strict && !oracle::is_global_k_roman(g, *s.coloring, k))
            throw InternalError("global_k_roman: witness is not a global Roman function");
        out.weight = s.weight;
        out.coloring = s.coloring;
        out.sizes = c;
        break;
    }
    out.elapsed_ms = clock.ms();
    return out;
}

// YES is weight 0, NO is Error. A balanced request with k not dividing |V| is NO.
inline DriverResult solve_k_community(int k, const Graph& g, const CwExpression& e, bool balanced = false, bool prune = true) {
    detail::DriverClock clock;
    const int n = g.vertex_count();
    std::vector<Composition> comps;
    if (balanced) {
        if (n % k == 0 && n / k >= 2) comps.push_back(Composition(k, n / k));
    } else {
        comps = enumerate_compositions(n, k, 2);
    }
    DriverResult out;
    for (const auto& c : comps) {
        auto m = builtin::specified_size_k_community(g, k, c);
        auto s = solve(m, e, SolveOptions{true, prune});
        ++out.solves;
        out.memo_entries += s.stats.memo_entries;
        if (s.weight.is_error()) continue;
        detail::require_model_witness(m, g, s);
        if (!oracle::is_k_community(g, *s.coloring, k)) throw InternalError("k_community: witness is not a community structure");
        out.weight = s.weight;
        out.coloring = s.coloring;
        out.sizes = c;
        break;
    }
    out.elapsed_ms = clock.ms();
    return out;
}

// Largest |S| first; weight is |S|. `required` are graph vertex names forced into S.
inline DriverResult solve_max_pds(const Graph& g, const CwExpression& e, const std::vector<std::string>& required = {},
                                  bool prune = true) {
    detail::DriverClock clock;
    const int n = g.vertex_count();
    DriverResult out;
    for (int s_in = n - 1; s_in >= 2; --s_in) {
        if (static_cast<int>(required.size()) > s_in) break;
        auto m = builtin::specified_size_pds(g, s_in, n - s_in, required);
        auto s = solve(m, e, SolveOptions{true, prune});
        ++out.solves;
        out.memo_entries += s.stats.memo_entries;
        if (s.weight.is_error()) continue;
        detail::require_model_witness(m, g, s);
        const auto in = detail::members(*s.coloring, builtin::kIn);
        if (!oracle::is_pds(g, in)) throw InternalError("pds: witness is not proportionally dense");
        for (const auto& r : required)
            if (!in[g.index_of(r)]) throw InternalError("pds: witness misses a required vertex");
        out.weight = WeightValue(s_in);
        out.coloring = s.coloring;
        out.sizes = {s_in, n - s_in};
        break;
    }
    out.elapsed_ms = clock.ms();
    return out;
}

inline DriverResult solve_max_quasi_clique(Rational gamma, const Graph& g, const CwExpression& e, bool prune = true) {
    detail::DriverClock clock;
    const int n = g.vertex_count();
    DriverResult out;
    for (int s_in = n; s_in >= 2; --s_in) {
        auto m = builtin::quasi_clique(g, gamma, s_in);
        auto s = solve(m, e, SolveOptions{true, prune});
        ++out.solves;
        out.memo_entries += s.stats.memo_entries;
        if (s.weight.is_error()) continue;
        detail::require_model_witness(m, g, s);
        if (!oracle::is_quasi_clique(g, detail::members(*s.coloring, builtin::kIn), gamma))
            throw InternalError("quasi_clique: witness fails the degree bound");
        out.weight = WeightValue(s_in);
        out.coloring = s.coloring;
        out.sizes = {s_in};
        break;
    }
    out.elapsed_ms = clock.ms();
    return out;
}

}  // namespace cwlcp

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cwlcp/checkmodel.hpp"
#include "cwlcp/errors.hpp"
#include "cwlcp/graph.hpp"
#include "cwlcp/solution.hpp"

// Reference implementations that work on the graph directly. Nothing here
// touches expressions, so these can arbitrate the dynamic program.
namespace cwlcp::oracle {

struct Verdict {
    bool ok = true;
    std::string diagnostic;
    explicit operator bool() const { return ok; }
};

namespace detail {

// Model vertex -> graph vertex, by name.
inline std::vector<int> vertex_map(const ProblemModel& m, const Graph& g) {
    if (m.vertex_count() != g.vertex_count()) throw MismatchError("model and graph have different vertex counts");
    std::vector<int> out(m.vertex_count());
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (!g.contains(m.vertex_name(v))) throw MismatchError("graph lacks vertex '" + m.vertex_name(v) + "'");
        out[v] = g.index_of(m.vertex_name(v));
    }
    return out;
}

// Exact neighbor counts per color, optionally truncated at `cap`.
inline std::vector<int> neighbor_counts(const ProblemModel& m, const Graph& g, const std::vector<int>& to_graph,
                                        const std::vector<int>& to_model, const Coloring& c, int v,
                                        std::optional<int> cap) {
    std::vector<int> n(m.color_count(), 0);
    for (int u : g.neighbors(to_graph[v])) ++n[c[to_model[u]]];
    if (cap)
        for (int& x : n) x = std::min(x, *cap);
    return n;
}

inline std::vector<int> invert(const std::vector<int>& to_graph) {
    std::vector<int> out(to_graph.size());
    for (std::size_t v = 0; v < to_graph.size(); ++v) out[to_graph[v]] = static_cast<int>(v);
    return out;
}

inline bool size_ok(const ProblemModel& m, const Coloring& c, Color a) {
    const auto& aut = m.size_constraint(a);
    if (!aut) return true;
    long count = 0;
    for (Color x : c) count += x == a;
    return aut->accepts_length(count);
}

}  // namespace detail

// Checks list membership, every vertex check and every size constraint.
// With `cap` the counts handed to the checks are truncated.
inline Verdict verify_coloring(const ProblemModel& m, const Graph& g, const Coloring& c, std::optional<int> cap = std::nullopt) {
    const auto to_graph = detail::vertex_map(m, g);
    const auto to_model = detail::invert(to_graph);
    if (static_cast<int>(c.size()) != m.vertex_count()) return {false, "coloring does not cover every vertex"};
    for (int v = 0; v < m.vertex_count(); ++v)
        if (c[v] < 0 || c[v] >= m.color_count() || !m.allows(v, c[v]))
            return {false, "vertex " + m.vertex_name(v) + ": color not in its list"};
    for (int v = 0; v < m.vertex_count(); ++v) {
        auto n = detail::neighbor_counts(m, g, to_graph, to_model, c, v, cap);
        if (!m.evaluate_check(v, c[v], n))
            return {false, "vertex " + m.vertex_name(v) + ": check fails for color " + m.color_name(c[v])};
    }
    for (int a = 0; a < m.color_count(); ++a)
        if (!detail::size_ok(m, c, a)) return {false, "color " + m.color_name(a) + ": class size rejected"};
    return {};
}

inline WeightValue coloring_weight(const ProblemModel& m, const Coloring& c) {
    const auto& ws = m.weight_set();
    WeightValue w = ws.neutral();
    for (int v = 0; v < m.vertex_count(); ++v) w = ws.combine(w, m.weight_of(v, c[v]));
    return w;
}

inline constexpr double kDefaultBudget = 2e6;

// Every coloring in list order (vertex 0 most significant, colors ascending);
// the first strictly better one is kept.
inline Solution brute_force_solve(const ProblemModel& m, const Graph& g, double budget = kDefaultBudget) {
    double space = 1;
    for (int v = 0; v < m.vertex_count(); ++v) space *= static_cast<double>(m.color_list(v).size());
    if (space > budget) throw BudgetExceeded("oracle: " + std::to_string(static_cast<long long>(space)) + " colorings exceed the budget");

    const auto to_graph = detail::vertex_map(m, g);
    const auto to_model = detail::invert(to_graph);
    const auto& ws = m.weight_set();
    const int n = m.vertex_count();
    Solution best;
    best.weight = WeightValue::error();
    std::vector<std::size_t> pick(n, 0);
    Coloring c(n);
    std::vector<int> counts(m.color_count());
    while (true) {
        for (int v = 0; v < n; ++v) c[v] = m.color_list(v)[pick[v]];
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int u : g.neighbors(to_graph[v])) ++counts[c[to_model[u]]];
            ok = m.evaluate_check(v, c[v], counts);
        }
        for (int a = 0; a < m.color_count() && ok; ++a) ok = detail::size_ok(m, c, a);
        if (ok) {
            WeightValue w = coloring_weight(m, c);
            if (ws.precedes(w, best.weight)) {
                best.weight = w;
                best.coloring = c;
            }
        }
        int v = n - 1;
        while (v >= 0 && ++pick[v] == m.color_list(v).size()) pick[v--] = 0;
        if (v < 0) break;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Definition-level checks for the size-constrained problems. These take an
// assignment indexed by graph vertex and never go through a ProblemModel.

inline bool is_k_roman(const Graph& g, const std::vector<int>& f, int k) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (f[v] >= k) continue;
        long sum = f[v], active = 0;
        for (int u : g.neighbors(v)) {
            sum += f[u];
            active += f[u] >= 1;
        }
        if (sum < active + k) return false;
    }
    return true;
}

inline bool is_global_k_roman(const Graph& g, const std::vector<int>& f, int k) {
    return is_k_roman(g, f, k) && is_k_roman(g.complement(), f, k);
}

// `part[v]` in [0, k). Parts need size >= 2; member v of part i satisfies
// |N(v) & P_i| / (|P_i| - 1) >= |N(v) & P_j| / |P_j| for all j != i.
inline bool is_k_community(const Graph& g, const std::vector<int>& part, int k) {
    std::vector<long> size(k, 0);
    for (int p : part) {
        if (p < 0 || p >= k) return false;
        ++size[p];
    }
    for (long s : size)
        if (s < 2) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<long> deg(k, 0);
        for (int u : g.neighbors(v)) ++deg[part[u]];
        const int i = part[v];
        for (int j = 0; j < k; ++j)
            if (j != i && deg[i] * size[j] < deg[j] * (size[i] - 1)) return false;
    }
    return true;
}

// 2 <= |S| < |V|, and each v in S: |N(v) & S| / (|S| - 1) >= |N(v) \ S| / |V \ S|.
inline bool is_pds(const Graph& g, const std::vector<bool>& in) {
    long s = 0;
    for (bool b : in) s += b;
    const long rest = g.vertex_count() - s;
    if (s < 2 || rest < 1) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        long inside = 0, outside = 0;
        for (int u : g.neighbors(v)) (in[u] ? inside : outside) += 1;
        if (inside * rest < outside * (s - 1)) return false;
    }
    return true;
}

// |S| >= 2 and each v in S has at least gamma (|S| - 1) neighbors in S.
inline bool is_quasi_clique(const Graph& g, const std::vector<bool>& in, Rational gamma) {
    long s = 0;
    for (bool b : in) s += b;
    if (s < 2) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!in[v]) continue;
        long inside = 0;
        for (int u : g.neighbors(v)) inside += in[u];
        if (inside * gamma.den < gamma.num * (s - 1)) return false;
    }
    return true;
}

struct Witnessed {
    std::int64_t value = 0;
    std::vector<int> assignment;  // by graph vertex
};

namespace detail {

// Calls f on every vector in [0, base)^n, lexicographically; stops when f returns true.
template <class F>
void for_each_assignment(int n, int base, double budget, F&& f) {
    double space = 1;
    for (int i = 0; i < n; ++i) space *= base;
    if (space > budget) throw BudgetExceeded("oracle: assignment space exceeds the budget");
    std::vector<int> x(n, 0);
    while (true) {
        if (f(x)) return;
        int i = n - 1;
        while (i >= 0 && ++x[i] == base) x[i--] = 0;
        if (i < 0) return;
    }
}

inline std::vector<bool> as_set(const std::vector<int>& x) { return {x.begin(), x.end()}; }

}  // namespace detail

inline std::optional<Witnessed> min_global_k_roman(const Graph& g, int k, double budget = kDefaultBudget) {
    std::optional<Witnessed> best;
    const Graph co = g.complement();
    detail::for_each_assignment(g.vertex_count(), k + 2, budget, [&](const std::vector<int>& f) {
        std::int64_t w = 0;
        for (int x : f) w += x;
        if ((!best || w < best->value) && is_k_roman(g, f, k) && is_k_roman(co, f, k)) best = Witnessed{w, f};
        return false;
    });
    return best;
}

inline std::optional<Witnessed> find_k_community(const Graph& g, int k, bool balanced, double budget = kDefaultBudget) {
    std::optional<Witnessed> found;
    detail::for_each_assignment(g.vertex_count(), k, budget, [&](const std::vector<int>& part) {
        if (balanced) {
            std::vector<int> size(k, 0);
            for (int p : part) ++size[p];
            for (int s : size)
                if (s != size[0]) return false;
        }
        if (!is_k_community(g, part, k)) return false;
        found = Witnessed{0, part};
        return true;
    });
    return found;
}

// Largest PDS containing `required`; value is |S|.
inline std::optional<Witnessed> max_pds(const Graph& g, const std::vector<int>& required = {}, double budget = kDefaultBudget) {
    std::optional<Witnessed> best;
    detail::for_each_assignment(g.vertex_count(), 2, budget, [&](const std::vector<int>& x) {
        for (int r : required)
            if (!x[r]) return false;
        const auto in = detail::as_set(x);
        std::int64_t s = 0;
        for (int b : x) s += b;
        if ((!best || s > best->value) && is_pds(g, in)) best = Witnessed{s, x};
        return false;
    });
    return best;
}

inline std::optional<Witnessed> max_quasi_clique(const Graph& g, Rational gamma, double budget = kDefaultBudget) {
    std::optional<Witnessed> best;
    detail::for_each_assignment(g.vertex_count(), 2, budget, [&](const std::vector<int>& x) {
        std::int64_t s = 0;
        for (int b : x) s += b;
        if ((!best || s > best->value) && is_quasi_clique(g, detail::as_set(x), gamma)) best = Witnessed{s, x};
        return false;
    });
    return best;
}

}  // namespace cwlcp::oracle

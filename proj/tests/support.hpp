#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <random>
#include <vector>

#include "cwlcp/cwlcp.hpp"

namespace testing_support {

using namespace cwlcp;

inline const std::vector<Graph>& connected_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, graphs::connected_up_to_iso(n)).first;
    return it->second;
}

inline CountMatrix matrix(int rows, int cols, std::vector<Count> data) { return CountMatrix(rows, cols, std::move(data)); }

// Minimum weight over colorings of the subexpression graph at `node` that
// match C under capped label x color counts and pass every check once the
// promised upcoming counts N are added. Written straight from the definition:
// it enumerates colorings and never looks at the recurrences.
inline WeightValue lambda_brute(const ProblemModel& m, const CwExpression& e, NodeId node, const CountMatrix& c,
                                const CountMatrix& n, const std::vector<TrackerState>& trackers = {}) {
    auto [classes, edges] = detail::simulate(e, node, [](auto&&...) {}, [](auto&&...) {});
    const auto names = e.vertex_names();
    std::vector<int> members;  // creation indices inside the subtree
    std::map<int, Label> label_of;
    for (const auto& [l, vs] : classes)
        for (int v : vs) {
            members.push_back(v);
            label_of[v] = l;
        }
    std::sort(members.begin(), members.end());
    const int cap = m.stability_cap();
    const int q = m.color_count();
    std::vector<int> model_of(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) model_of[i] = *m.vertex_index(names[i]);
    const auto constrained = m.constrained_colors();

    const auto& ws = m.weight_set();
    WeightValue best = WeightValue::error();
    std::vector<int> color(names.size(), -1);
    std::vector<std::size_t> pick(members.size(), 0);
    if (members.empty()) return best;
    while (true) {
        for (std::size_t t = 0; t < members.size(); ++t) color[members[t]] = m.color_list(model_of[members[t]])[pick[t]];
        bool ok = true;
        // label x color counts
        std::vector<int> cnt(static_cast<std::size_t>(c.rows()) * q, 0);
        for (int v : members) ++cnt[(label_of[v] - 1) * q + color[v]];
        for (int i = 0; i < c.rows() && ok; ++i)
            for (int a = 0; a < q && ok; ++a) ok = std::min(cap, cnt[i * q + a]) == c(i, a);
        for (int v : members) {
            if (!ok) break;
            std::vector<int> nb(q, 0);
            for (int u : members)
                if (u != v && edges.count(detail::edge_key(u, v))) ++nb[color[u]];
            for (int a = 0; a < q; ++a) nb[a] = std::min(cap, nb[a] + n(label_of[v] - 1, a));
            ok = m.evaluate_check(model_of[v], color[v], nb);
        }
        for (std::size_t t = 0; t < constrained.size() && ok; ++t) {
            long size = 0;
            for (int v : members) size += color[v] == constrained[t];
            const auto& aut = *m.size_constraint(constrained[t]);
            ok = trackers[t].predicate.holds(aut, aut.power(trackers[t].state, size));
        }
        if (ok) {
            WeightValue w = ws.neutral();
            for (int v : members) w = ws.combine(w, m.weight_of(model_of[v], color[v]));
            best = ws.prefer(best, w);
        }
        int t = static_cast<int>(members.size()) - 1;
        while (t >= 0 && ++pick[t] == m.color_list(model_of[members[t]]).size()) pick[t--] = 0;
        if (t < 0) break;
    }
    return best;
}

inline CountMatrix random_matrix(std::mt19937& rng, int rows, int cols, int cap, double zero_bias = 0.5) {
    CountMatrix out(rows, cols);
    std::uniform_real_distribution<double> coin(0, 1);
    std::uniform_int_distribution<int> val(0, cap);
    for (int i = 0; i < rows; ++i)
        for (int a = 0; a < cols; ++a) out(i, a) = static_cast<Count>(coin(rng) < zero_bias ? 0 : val(rng));
    return out;
}

}  // namespace testing_support

namespace testing_support {

// Random expression over vertices v1..vn with labels in [1, k]. Retries until
// the result validates, so joins and renames are never redundant or empty.
inline CwExpression random_expression(std::mt19937& rng, int n, int k) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        ExpressionBuilder b;
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        std::shuffle(order.begin(), order.end(), rng);
        std::uniform_int_distribution<int> label(1, k);
        std::function<NodeId(int, int)> build = [&](int lo, int hi) -> NodeId {
            NodeId id;
            if (hi - lo == 1) {
                id = b.create("v" + std::to_string(order[lo]), label(rng));
            } else {
                const int mid = std::uniform_int_distribution<int>(lo + 1, hi - 1)(rng);
                NodeId l = build(lo, mid);
                NodeId r = build(mid, hi);
                id = b.disjoint_union(l, r);
            }
            if (k < 2) return id;
            const int ops = std::uniform_int_distribution<int>(0, 2)(rng);
            for (int t = 0; t < ops; ++t) {
                int i = label(rng), j = label(rng);
                while (j == i) j = label(rng);
                id = (rng() % 3 == 0) ? b.rename(i, j, id) : b.join(i, j, id);
            }
            return id;
        };
        NodeId root = build(0, n);
        auto e = b.finish(root, k);
        if (validate(e).ok()) return e;
    }
    throw std::runtime_error("no valid random expression found");
}

}  // namespace testing_support

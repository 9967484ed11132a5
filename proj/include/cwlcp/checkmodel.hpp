#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cwlcp/errors.hpp"
#include "cwlcp/graph.hpp"
#include "cwlcp/sizedfa.hpp"
#include "cwlcp/weights.hpp"

namespace cwlcp {

using Color = int;  // 0-based index into the model's color list

// check(v, a, n_1..n_q): vertex index, its color, per-color neighbor counts.
using CheckFunction = std::function<bool(int vertex, Color color, std::span<const int> counts)>;

struct ModelParts {
    std::string name;
    std::vector<std::string> vertices;
    std::vector<std::string> colors;
    WeightSet weight_set;
    std::vector<std::vector<Color>> lists;          // per vertex; empty vector means all colors
    std::vector<std::vector<std::int64_t>> weights;  // [vertex][color]
    CheckFunction check;
    int stability_cap = 1;
    std::vector<std::optional<CountingAutomaton>> size_constraints;  // per color, may be empty
};

// A color-counting 1-locally checkable problem bound to a vertex universe.
class ProblemModel {
public:
    explicit ProblemModel(ModelParts parts) : p_(std::move(parts)) {
        const int n = vertex_count();
        const int q = color_count();
        if (q < 1) throw ValidationError(p_.name + ": needs at least one color");
        if (!p_.check) throw ValidationError(p_.name + ": missing check function");
        for (int v = 0; v < n; ++v) index_.emplace(p_.vertices[v], v);
        if (static_cast<int>(index_.size()) != n) throw ValidationError(p_.name + ": duplicate vertex");
        p_.lists.resize(n);
        for (auto& l : p_.lists) {
            if (l.empty()) {
                l.resize(q);
                std::iota(l.begin(), l.end(), 0);
            }
            std::sort(l.begin(), l.end());
            l.erase(std::unique(l.begin(), l.end()), l.end());
            for (Color a : l)
                if (a < 0 || a >= q) throw ValidationError(p_.name + ": color list entry out of range");
        }
        if (static_cast<int>(p_.weights.size()) != n) throw ValidationError(p_.name + ": weight table size mismatch");
        for (const auto& row : p_.weights)
            if (static_cast<int>(row.size()) != q) throw ValidationError(p_.name + ": weight table size mismatch");
        if (p_.stability_cap < 1 || (n > 0 && p_.stability_cap > n))
            throw ValidationError(p_.name + ": stability cap must lie in [1, |V|]");
        p_.size_constraints.resize(q);
    }

    const std::string& name() const { return p_.name; }
    int vertex_count() const { return static_cast<int>(p_.vertices.size()); }
    int color_count() const { return static_cast<int>(p_.colors.size()); }
    const std::vector<std::string>& vertices() const { return p_.vertices; }
    const std::string& vertex_name(int v) const { return p_.vertices.at(v); }
    std::optional<int> vertex_index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    const std::vector<std::string>& color_names() const { return p_.colors; }
    const std::string& color_name(Color a) const { return p_.colors.at(a); }
    std::optional<Color> color_index(const std::string& name) const {
        auto it = std::find(p_.colors.begin(), p_.colors.end(), name);
        if (it == p_.colors.end()) return std::nullopt;
        return static_cast<Color>(it - p_.colors.begin());
    }

    const WeightSet& weight_set() const { return p_.weight_set; }
    WeightValue weight_of(int v, Color a) const { return WeightValue{p_.weights.at(v).at(a)}; }
    const std::vector<Color>& color_list(int v) const { return p_.lists.at(v); }
    bool allows(int v, Color a) const { return std::binary_search(p_.lists.at(v).begin(), p_.lists.at(v).end(), a); }

    bool evaluate_check(int v, Color a, std::span<const int> counts) const { return p_.check(v, a, counts); }

    int stability_cap() const { return p_.stability_cap; }

    const std::optional<CountingAutomaton>& size_constraint(Color a) const { return p_.size_constraints.at(a); }
    std::vector<Color> constrained_colors() const {
        std::vector<Color> out;
        for (Color a = 0; a < color_count(); ++a)
            if (p_.size_constraints[a]) out.push_back(a);
        return out;
    }

    // Same model with a different cap. The caller vouches that the check is
    // stable at `cap`; |V| is always safe.
    ProblemModel with_cap(int cap) const {
        ModelParts parts = p_;
        parts.stability_cap = cap;
        return ProblemModel(std::move(parts));
    }

    ProblemModel with_lists(std::vector<std::vector<Color>> lists) const {
        ModelParts parts = p_;
        parts.lists = std::move(lists);
        return ProblemModel(std::move(parts));
    }

private:
    ModelParts p_;
    std::unordered_map<std::string, int> index_;
};

// A finite set of non-negative integers, or the complement of one.
class IntSet {
public:
    static IntSet finite(std::set<int> values) { return IntSet(false, std::move(values)); }
    static IntSet all_except(std::set<int> values) { return IntSet(true, std::move(values)); }
    static IntSet all() { return IntSet(true, {}); }

    bool contains(int n) const { return listed_.count(n) != cofinite_; }
    bool is_cofinite() const { return cofinite_; }
    const std::set<int>& listed() const { return listed_; }
    std::optional<int> max_listed() const {
        if (listed_.empty()) return std::nullopt;
        return *listed_.rbegin();
    }

private:
    IntSet(bool cofinite, std::set<int> listed) : cofinite_(cofinite), listed_(std::move(listed)) {}
    bool cofinite_;
    std::set<int> listed_;
};

// q x q matrix: a vertex of color a accepts iff n_j is in D[a][j] for every j.
struct DegreeConstraintMatrix {
    std::vector<std::vector<IntSet>> entries;

    static DegreeConstraintMatrix unconstrained(int q) {
        return {std::vector<std::vector<IntSet>>(q, std::vector<IntSet>(q, IntSet::all()))};
    }
    int size() const { return static_cast<int>(entries.size()); }

    // 1 + the largest integer written down anywhere; counts above it all behave alike.
    int stability() const {
        int m = -1;
        for (const auto& row : entries)
            for (const auto& s : row)
                if (auto x = s.max_listed()) m = std::max(m, *x);
        return std::max(1, m + 1);
    }
};

struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;
};

enum class ComplementCheck { strict, literal };

namespace builtin {

namespace detail {

inline int clamp_cap(int d, int n) { return std::max(1, std::min(d, std::max(n, 1))); }

inline std::vector<std::string> numbered(int from, int to) {
    std::vector<std::string> out;
    for (int i = from; i <= to; ++i) out.push_back(std::to_string(i));
    return out;
}

inline ModelParts base(const std::string& name, const Graph& g, std::vector<std::string> colors, WeightSet ws) {
    ModelParts p;
    p.name = name;
    p.vertices = g.names();
    p.weight_set = ws;
    p.colors = std::move(colors);
    p.lists.assign(g.vertex_count(), {});
    p.weights.assign(g.vertex_count(), std::vector<std::int64_t>(p.colors.size(), 0));
    return p;
}

// w_{v,a} = a for every vertex.
inline void weight_by_color(ModelParts& p) {
    for (auto& row : p.weights)
        for (std::size_t a = 0; a < row.size(); ++a) row[a] = static_cast<std::int64_t>(a);
}

inline void require_sizes(const std::string& what, const Graph& g, const std::vector<int>& sizes, std::size_t parts,
                          int lower) {
    if (sizes.size() != parts)
        throw ValidationError(what + ": expected " + std::to_string(parts) + " sizes, got " + std::to_string(sizes.size()));
    long total = 0;
    for (int s : sizes) {
        if (s < lower) throw ValidationError(what + ": sizes must be >= " + std::to_string(lower));
        total += s;
    }
    if (total != g.vertex_count()) throw ValidationError(what + ": sizes must sum to |V| = " + std::to_string(g.vertex_count()));
}

}  // namespace detail

// Colors 1..k, decision weights, check n_a = 0.
inline ProblemModel k_coloring(const Graph& g, int k) {
    if (k < 1) throw ValidationError("k_coloring: k must be >= 1");
    auto p = detail::base("k_coloring", g, detail::numbered(1, k), WeightSet::decision());
    p.check = [](int, Color a, std::span<const int> n) { return n[a] == 0; };
    p.stability_cap = detail::clamp_cap(1, g.vertex_count());
    return ProblemModel(std::move(p));
}

inline ProblemModel max_independent_set(const Graph& g) {
    auto p = detail::base("max_independent_set", g, {"0", "1"}, WeightSet::max_sum());
    detail::weight_by_color(p);
    p.check = [](int, Color a, std::span<const int> n) { return a == 0 || n[1] == 0; };
    p.stability_cap = detail::clamp_cap(1, g.vertex_count());
    return ProblemModel(std::move(p));
}

inline ProblemModel odd_dominating_set(const Graph& g) {
    auto p = detail::base("odd_dominating_set", g, {"0", "1"}, WeightSet::min_sum());
    detail::weight_by_color(p);
    p.check = [](int, Color a, std::span<const int> n) { return (a + n[1]) % 2 == 1; };
    p.stability_cap = detail::clamp_cap(g.vertex_count(), g.vertex_count());
    return ProblemModel(std::move(p));
}

inline ProblemModel lcvp(const Graph& g, DegreeConstraintMatrix d, WeightSet ws, std::vector<std::int64_t> color_weights,
                         std::vector<std::string> color_names = {}) {
    const int q = d.size();
    if (q < 1) throw ValidationError("lcvp: empty constraint matrix");
    for (const auto& row : d.entries)
        if (static_cast<int>(row.size()) != q) throw ValidationError("lcvp: constraint matrix must be square");
    if (static_cast<int>(color_weights.size()) != q) throw ValidationError("lcvp: one weight per color required");
    if (color_names.empty()) color_names = detail::numbered(0, q - 1);
    auto p = detail::base("lcvp", g, std::move(color_names), ws);
    for (auto& row : p.weights) row = color_weights;
    const int cap = d.stability();
    p.check = [d = std::move(d)](int, Color a, std::span<const int> n) {
        for (std::size_t j = 0; j < n.size(); ++j)
            if (!d.entries[a][j].contains(n[j])) return false;
        return true;
    };
    p.stability_cap = detail::clamp_cap(cap, g.vertex_count());
    return ProblemModel(std::move(p));
}

// Color 0 vertices need a neighbor of color 1.
inline ProblemModel min_dominating_set(const Graph& g) {
    auto d = DegreeConstraintMatrix::unconstrained(2);
    d.entries[0][1] = IntSet::all_except({0});
    auto m = lcvp(g, std::move(d), WeightSet::min_sum(), {0, 1});
    return m;
}

// Colors 0..k+1, w_{v,a} = a, check a + sum_j j n_j >= k + sum_{j>=1} n_j.
inline ProblemModel k_roman(const Graph& g, int k) {
    if (k < 1) throw ValidationError("k_roman: k must be >= 1");
    auto p = detail::base("k_roman", g, detail::numbered(0, k + 1), WeightSet::min_sum());
    detail::weight_by_color(p);
    p.check = [k](int, Color a, std::span<const int> n) {
        long lhs = a, rhs = k;
        for (std::size_t j = 0; j < n.size(); ++j) {
            lhs += static_cast<long>(j) * n[j];
            if (j >= 1) rhs += n[j];
        }
        return lhs >= rhs;
    };
    p.stability_cap = detail::clamp_cap(k + 1, g.vertex_count());
    return ProblemModel(std::move(p));
}

// Roman condition in G and in the complement with every color class of size s_a.
// `literal` uses the complement-side inequality sum_{j>=1} (j-1)(s_j - n_j) >= k as
// written; `strict` derives the complement counts as s_j - n_j - [j = a] and keeps
// the own-color term, which is the Roman condition in the complement graph.
inline ProblemModel specified_size_global_k_roman(const Graph& g, int k, const std::vector<int>& sizes,
                                                  ComplementCheck variant = ComplementCheck::strict) {
    if (k < 1) throw ValidationError("global_k_roman: k must be >= 1");
    detail::require_sizes("global_k_roman", g, sizes, static_cast<std::size_t>(k) + 2, 0);
    auto p = detail::base(variant == ComplementCheck::strict ? "specified_size_global_k_roman"
                                                             : "specified_size_global_k_roman_literal",
                          g, detail::numbered(0, k + 1), WeightSet::min_sum());
    detail::weight_by_color(p);
    p.check = [k, sizes, variant](int, Color a, std::span<const int> n) {
        long in_g = a;
        for (std::size_t j = 1; j < n.size(); ++j) in_g += static_cast<long>(j - 1) * n[j];
        if (in_g < k) return false;
        long in_complement = 0;
        if (variant == ComplementCheck::literal) {
            for (std::size_t j = 1; j < n.size(); ++j) in_complement += static_cast<long>(j - 1) * (sizes[j] - n[j]);
        } else {
            in_complement = a;
            for (std::size_t j = 1; j < n.size(); ++j) {
                const long others = sizes[j] - n[j] - (static_cast<Color>(j) == a ? 1 : 0);
                in_complement += static_cast<long>(j - 1) * others;
            }
        }
        return in_complement >= k;
    };
    p.stability_cap = detail::clamp_cap(g.vertex_count(), g.vertex_count());
    for (int s : sizes) p.size_constraints.push_back(dfa_exact_size(s));
    return ProblemModel(std::move(p));
}

// Colors 1..k; every part a of size s_a >= 2 with n_a / (s_a - 1) >= n_b / s_b for all b.
inline ProblemModel specified_size_k_community(const Graph& g, int k, const std::vector<int>& sizes) {
    if (k < 2) throw ValidationError("k_community: k must be >= 2");
    detail::require_sizes("k_community", g, sizes, static_cast<std::size_t>(k), 2);
    auto p = detail::base("specified_size_k_community", g, detail::numbered(1, k), WeightSet::decision());
    p.check = [sizes](int, Color a, std::span<const int> n) {
        for (std::size_t b = 0; b < n.size(); ++b) {
            if (static_cast<Color>(b) == a) continue;
            if (static_cast<long>(n[a]) * sizes[b] < static_cast<long>(n[b]) * (sizes[a] - 1)) return false;
        }
        return true;
    };
    p.stability_cap = detail::clamp_cap(g.vertex_count(), g.vertex_count());
    for (int s : sizes) p.size_constraints.push_back(dfa_exact_size(s));
    return ProblemModel(std::move(p));
}

// Colors "out" (0) and "in" (1).
inline constexpr Color kOut = 0;
inline constexpr Color kIn = 1;

inline ProblemModel specified_size_pds(const Graph& g, int in_size, int out_size, const std::vector<std::string>& required = {}) {
    if (in_size < 2 || out_size < 1 || in_size + out_size != g.vertex_count())
        throw ValidationError("pds: need 2 <= |S| < |V| and |S| + |V \\ S| = |V|");
    auto p = detail::base("specified_size_pds", g, {"out", "in"}, WeightSet::decision());
    p.check = [in_size, out_size](int, Color a, std::span<const int> n) {
        if (a != kIn) return true;
        return static_cast<long>(n[kIn]) * out_size >= static_cast<long>(n[kOut]) * (in_size - 1);
    };
    for (const auto& name : required) p.lists.at(g.index_of(name)) = {kIn};
    p.stability_cap = detail::clamp_cap(g.vertex_count(), g.vertex_count());
    p.size_constraints = {dfa_exact_size(out_size), dfa_exact_size(in_size)};
    return ProblemModel(std::move(p));
}

// Members of S need n_S >= gamma (|S| - 1), compared as n_S * den >= num * (|S| - 1).
inline ProblemModel quasi_clique(const Graph& g, Rational gamma, int in_size) {
    if (gamma.den <= 0 || gamma.num <= 0 || gamma.num > gamma.den) throw ValidationError("quasi_clique: need 0 < gamma <= 1");
    if (in_size < 2 || in_size > g.vertex_count()) throw ValidationError("quasi_clique: need 2 <= |S| <= |V|");
    auto p = detail::base("quasi_clique", g, {"out", "in"}, WeightSet::decision());
    p.check = [gamma, in_size](int, Color a, std::span<const int> n) {
        if (a != kIn) return true;
        return n[kIn] * gamma.den >= gamma.num * (in_size - 1);
    };
    p.stability_cap = detail::clamp_cap(g.vertex_count(), g.vertex_count());
    p.size_constraints = {dfa_exact_size(g.vertex_count() - in_size), dfa_exact_size(in_size)};
    return ProblemModel(std::move(p));
}

}  // namespace builtin

// Identifier plus parameters, as accepted on the command line.
struct BuiltinSpec {
    std::string id;
    int k = 0;
    std::vector<int> sizes;
    Rational gamma;
    std::vector<std::string> required;
    std::optional<DegreeConstraintMatrix> constraints;
    ComplementCheck complement = ComplementCheck::strict;
};

inline ProblemModel instantiate_builtin(const BuiltinSpec& s, const Graph& g) {
    using namespace builtin;
    if (s.id == "k_coloring") return k_coloring(g, s.k);
    if (s.id == "max_independent_set") return max_independent_set(g);
    if (s.id == "odd_dominating_set") return odd_dominating_set(g);
    if (s.id == "min_dominating_set") return min_dominating_set(g);
    if (s.id == "k_roman") return k_roman(g, s.k);
    if (s.id == "specified_size_global_k_roman") return specified_size_global_k_roman(g, s.k, s.sizes, s.complement);
    if (s.id == "specified_size_k_community") return specified_size_k_community(g, s.k, s.sizes);
    if (s.id == "specified_size_pds") {
        if (s.sizes.size() != 2) throw ValidationError("pds: expected sizes |S|,|V\\S|");
        return specified_size_pds(g, s.sizes[0], s.sizes[1], s.required);
    }
    if (s.id == "quasi_clique") {
        if (s.sizes.size() != 1) throw ValidationError("quasi_clique: expected one size |S|");
        return quasi_clique(g, s.gamma, s.sizes[0]);
    }
    if (s.id == "lcvp") {
        if (!s.constraints) throw ValidationError("lcvp: missing constraint matrix");
        return lcvp(g, *s.constraints, WeightSet::min_sum(), std::vector<std::int64_t>(s.constraints->size(), 0));
    }
    throw ValidationError("unknown problem '" + s.id + "'");
}

}  // namespace cwlcp

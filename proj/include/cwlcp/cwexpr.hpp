#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cwlcp/errors.hpp"
#include "cwlcp/graph.hpp"

namespace cwlcp {

using NodeId = int;
using Label = int;  // 1-based, as written in expressions

enum class OpKind { create, disjoint_union, join, rename };

struct ExprNode {
    OpKind kind = OpKind::create;
    std::string vertex;        // create
    Label label = 0;           // create
    Label first = 0;           // join i / rename from
    Label second = 0;          // join j / rename to
    NodeId left = -1;          // union left, join/rename child
    NodeId right = -1;         // union right
    int line = 0, column = 0;  // source position when parsed
};

// A clique-width expression stored as an arena. Children always precede their
// parents, so ascending node id is a valid bottom-up order; the root is last.
class CwExpression {
public:
    CwExpression() = default;

    const std::vector<ExprNode>& nodes() const { return nodes_; }
    const ExprNode& node(NodeId id) const { return nodes_.at(id); }
    NodeId root() const { return static_cast<NodeId>(nodes_.size()) - 1; }
    int size() const { return static_cast<int>(nodes_.size()); }

    // Declared label budget.
    int k() const { return k_; }
    // Largest label mentioned anywhere; may exceed k() only for invalid input.
    int max_label() const { return max_label_; }

    // Labels with a nonempty class at the node, indexed by label (slot 0 unused).
    const std::vector<bool>& used_labels(NodeId id) const { return used_.at(id); }
    bool label_used(NodeId id, Label l) const {
        const auto& u = used_.at(id);
        return l >= 1 && l < static_cast<int>(u.size()) && u[l];
    }
    int vertex_count(NodeId id) const { return vcount_.at(id); }
    int vertex_count() const { return nodes_.empty() ? 0 : vcount_.back(); }

    // Vertex names in creation order (left to right).
    std::vector<std::string> vertex_names() const {
        std::vector<std::string> out;
        for (const auto& n : nodes_)
            if (n.kind == OpKind::create) out.push_back(n.vertex);
        return out;
    }

private:
    friend class ExpressionBuilder;
    std::vector<ExprNode> nodes_;
    std::vector<std::vector<bool>> used_;
    std::vector<int> vcount_;
    int k_ = 0;
    int max_label_ = 0;
};

// Incremental construction; each call returns the new node's id.
class ExpressionBuilder {
public:
    NodeId create(const std::string& vertex, Label label) {
        if (!is_valid_name(vertex)) throw ValidationError("invalid vertex name '" + vertex + "'");
        if (label < 1) throw ValidationError("label must be positive, got " + std::to_string(label));
        if (!names_.insert(vertex).second) throw ValidationError("duplicate vertex '" + vertex + "'");
        ExprNode n;
        n.kind = OpKind::create;
        n.vertex = vertex;
        n.label = label;
        return push(std::move(n));
    }

    NodeId disjoint_union(NodeId left, NodeId right) {
        check_child(left);
        check_child(right);
        ExprNode n;
        n.kind = OpKind::disjoint_union;
        n.left = left;
        n.right = right;
        return push(std::move(n));
    }

    NodeId join(Label i, Label j, NodeId child) { return unary(OpKind::join, i, j, child); }
    NodeId rename(Label from, Label to, NodeId child) { return unary(OpKind::rename, from, to, child); }

    void set_position(NodeId id, int line, int column) {
        nodes_.at(id).line = line;
        nodes_.at(id).column = column;
    }

    // Finalize with `root` as the root; k defaults to the largest label used.
    CwExpression finish(NodeId root, std::optional<int> declared_k = std::nullopt) {
        if (nodes_.empty()) throw ValidationError("empty expression");
        if (root != static_cast<NodeId>(nodes_.size()) - 1)
            throw ValidationError("root must be the last node built");
        int parents_expected = 0;
        for (const auto& n : nodes_) {
            if (n.left >= 0) ++parents_expected;
            if (n.right >= 0) ++parents_expected;
        }
        if (parents_expected != static_cast<int>(nodes_.size()) - 1)
            throw ValidationError("expression nodes do not form a single tree");

        CwExpression e;
        e.nodes_ = std::move(nodes_);
        e.max_label_ = max_label_;
        e.k_ = declared_k ? std::max(*declared_k, 0) : max_label_;
        if (declared_k && *declared_k < 1) throw ValidationError("declared k must be positive");
        const int span = std::max(e.k_, e.max_label_) + 1;
        e.used_.assign(e.nodes_.size(), std::vector<bool>(span, false));
        e.vcount_.assign(e.nodes_.size(), 0);
        for (NodeId id = 0; id < e.size(); ++id) {
            const auto& n = e.nodes_[id];
            auto& used = e.used_[id];
            switch (n.kind) {
                case OpKind::create:
                    used[n.label] = true;
                    e.vcount_[id] = 1;
                    break;
                case OpKind::disjoint_union:
                    for (int l = 0; l < span; ++l) used[l] = e.used_[n.left][l] || e.used_[n.right][l];
                    e.vcount_[id] = e.vcount_[n.left] + e.vcount_[n.right];
                    break;
                case OpKind::join:
                    used = e.used_[n.left];
                    e.vcount_[id] = e.vcount_[n.left];
                    break;
                case OpKind::rename:
                    used = e.used_[n.left];
                    if (used[n.first]) {
                        used[n.first] = false;
                        used[n.second] = true;
                    }
                    e.vcount_[id] = e.vcount_[n.left];
                    break;
            }
        }
        nodes_.clear();
        adopted_.clear();
        names_.clear();
        max_label_ = 0;
        return e;
    }

private:
    NodeId unary(OpKind kind, Label i, Label j, NodeId child) {
        check_child(child);
        const char* what = kind == OpKind::join ? "join" : "rename";
        if (i < 1 || j < 1) throw ValidationError(std::string(what) + " label must be positive");
        if (i == j) throw ValidationError(std::string(what) + " with i = j = " + std::to_string(i));
        ExprNode n;
        n.kind = kind;
        n.first = i;
        n.second = j;
        n.left = child;
        return push(std::move(n));
    }

    void check_child(NodeId id) {
        if (id < 0 || id >= static_cast<NodeId>(nodes_.size())) throw ValidationError("dangling child reference");
        if (adopted_.size() < nodes_.size()) adopted_.resize(nodes_.size(), 0);
        if (adopted_[id]) throw ValidationError("node used as a child twice");
        adopted_[id] = 1;
    }

    NodeId push(ExprNode n) {
        max_label_ = std::max({max_label_, n.label, n.first, n.second});
        nodes_.push_back(std::move(n));
        return static_cast<NodeId>(nodes_.size()) - 1;
    }

    std::vector<ExprNode> nodes_;
    std::vector<char> adopted_;
    std::unordered_set<std::string> names_;
    int max_label_ = 0;
};

// ---------------------------------------------------------------------------
// Text form

namespace detail {

class SexprReader {
public:
    explicit SexprReader(std::string_view text) : text_(text) {}

    CwExpression read() {
        skip_space();
        auto [line, col] = position();
        std::optional<int> declared_k;
        NodeId root;
        expect('(');
        std::string head = atom();
        if (head == "k") {
            int k = integer("k");
            if (k < 1) throw ParseError("k must be positive", line, col);
            declared_k = k;
            root = expr();
            expect(')');
        } else {
            root = form(head, line, col);
        }
        skip_space();
        if (pos_ != text_.size()) fail("trailing input after expression");
        try {
            return builder_.finish(root, declared_k);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line, col);
        }
    }

private:
    NodeId expr() {
        skip_space();
        auto [line, col] = position();
        expect('(');
        std::string head = atom();
        return form(head, line, col);
    }

    NodeId form(const std::string& head, int line, int col) {
        NodeId id = -1;
        try {
            if (head == "node") {
                std::string name = atom();
                int label = integer("label");
                if (label < 1) throw ParseError("label must be positive, got " + std::to_string(label), line, col);
                id = builder_.create(name, label);
            } else if (head == "union") {
                NodeId l = expr();
                NodeId r = expr();
                id = builder_.disjoint_union(l, r);
            } else if (head == "join" || head == "rename") {
                int i = integer("label");
                int j = integer("label");
                if (i < 1 || j < 1) throw ParseError("label must be positive", line, col);
                if (i == j) throw ParseError(head + " with i = j = " + std::to_string(i), line, col);
                NodeId c = expr();
                id = head == "join" ? builder_.join(i, j, c) : builder_.rename(i, j, c);
            } else {
                throw ParseError("unknown form '" + head + "'", line, col);
            }
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line, col);
        }
        builder_.set_position(id, line, col);
        expect(')');
        return id;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    std::pair<int, int> position() const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail(const std::string& msg) const {
        auto [line, col] = position();
        throw ParseError(msg, line, col);
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size()) fail(std::string("unexpected end of input, expected '") + c + "'");
        if (text_[pos_] != c) fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
        ++pos_;
    }

    std::string atom() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
            ++pos_;
        }
        if (start == pos_) fail("expected an atom");
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer(const char* what) {
        skip_space();
        auto [line, col] = position();
        std::string a = atom();
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(a, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != a.size()) throw ParseError(std::string("expected integer ") + what + ", found '" + a + "'", line, col);
        if (v > 1'000'000 || v < -1'000'000) throw ParseError(std::string(what) + " out of range", line, col);
        return static_cast<int>(v);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    ExpressionBuilder builder_;
};

}  // namespace detail

inline CwExpression parse_expression(std::string_view text) { return detail::SexprReader(text).read(); }

// Single-line s-expression, wrapped in (k ...) so the label budget survives a round trip.
inline std::string to_text(const CwExpression& e) {
    std::vector<std::string> text(e.size());
    for (NodeId id = 0; id < e.size(); ++id) {
        const auto& n = e.node(id);
        switch (n.kind) {
            case OpKind::create:
                text[id] = "(node " + n.vertex + " " + std::to_string(n.label) + ")";
                break;
            case OpKind::disjoint_union:
                text[id] = "(union " + std::move(text[n.left]) + " " + std::move(text[n.right]) + ")";
                break;
            case OpKind::join:
            case OpKind::rename:
                text[id] = std::string(n.kind == OpKind::join ? "(join " : "(rename ") + std::to_string(n.first) + " " +
                           std::to_string(n.second) + " " + std::move(text[n.left]) + ")";
                break;
        }
    }
    return "(k " + std::to_string(e.k()) + " " + text[e.root()] + ")";
}

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind { redundant_join, rename_into_empty, label_out_of_range, vacuous_join };

inline const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::redundant_join: return "redundant-join";
        case ViolationKind::rename_into_empty: return "rename-into-empty";
        case ViolationKind::label_out_of_range: return "label-out-of-range";
        case ViolationKind::vacuous_join: return "vacuous-join";
    }
    return "?";
}

struct Violation {
    NodeId node = -1;
    ViolationKind kind{};
    std::string message;
    int line = 0, column = 0;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<Violation> warnings;  // vacuous joins only
    bool ok() const { return violations.empty(); }
    bool has(ViolationKind k) const {
        return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
    }
};

namespace detail {

// Label classes at a node: label -> vertices (dense creation indices).
using LabelClasses = std::map<Label, std::vector<int>>;

inline std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

// Walks the expression bottom-up, maintaining label classes and the edge set.
// `on_join` sees (node, class_i, class_j, edges) before edges are added.
template <class OnJoin, class OnRename>
std::pair<LabelClasses, std::unordered_set<std::uint64_t>> simulate(const CwExpression& e, NodeId upto,
                                                                    OnJoin&& on_join, OnRename&& on_rename) {
    std::vector<LabelClasses> classes(e.size());
    std::unordered_set<std::uint64_t> edges;
    std::unordered_map<std::string, int> vid;
    for (const auto& name : e.vertex_names()) vid.emplace(name, static_cast<int>(vid.size()));
    // Only nodes inside the subtree of `upto` are simulated.
    std::vector<char> inside(e.size(), 0);
    inside[upto] = 1;
    for (NodeId id = upto; id >= 0; --id) {
        if (!inside[id]) continue;
        const auto& n = e.node(id);
        if (n.left >= 0) inside[n.left] = 1;
        if (n.right >= 0) inside[n.right] = 1;
    }
    for (NodeId id = 0; id <= upto; ++id) {
        if (!inside[id]) continue;
        const auto& n = e.node(id);
        switch (n.kind) {
            case OpKind::create:
                classes[id][n.label].push_back(vid.at(n.vertex));
                break;
            case OpKind::disjoint_union: {
                classes[id] = std::move(classes[n.left]);
                for (auto& [l, vs] : classes[n.right]) {
                    auto& dst = classes[id][l];
                    dst.insert(dst.end(), vs.begin(), vs.end());
                }
                classes[n.right].clear();
                break;
            }
            case OpKind::join: {
                classes[id] = std::move(classes[n.left]);
                static const std::vector<int> none;
                auto it = classes[id].find(n.first);
                auto jt = classes[id].find(n.second);
                const auto& ci = it == classes[id].end() ? none : it->second;
                const auto& cj = jt == classes[id].end() ? none : jt->second;
                on_join(id, ci, cj, edges);
                for (int u : ci)
                    for (int v : cj) edges.insert(edge_key(u, v));
                break;
            }
            case OpKind::rename: {
                classes[id] = std::move(classes[n.left]);
                on_rename(id, classes[id]);
                auto it = classes[id].find(n.first);
                if (it != classes[id].end()) {
                    auto moved = std::move(it->second);
                    classes[id].erase(it);
                    auto& dst = classes[id][n.second];
                    dst.insert(dst.end(), moved.begin(), moved.end());
                }
                break;
            }
        }
    }
    return {std::move(classes[upto]), std::move(edges)};
}

}  // namespace detail

inline ValidationReport validate(const CwExpression& e) {
    ValidationReport report;
    auto add = [&](std::vector<Violation>& into, NodeId id, ViolationKind kind, std::string msg) {
        const auto& n = e.node(id);
        into.push_back(Violation{id, kind, std::move(msg), n.line, n.column});
    };
    for (NodeId id = 0; id < e.size(); ++id) {
        const auto& n = e.node(id);
        for (Label l : {n.label, n.first, n.second})
            if (l > e.k()) {
                add(report.violations, id, ViolationKind::label_out_of_range,
                    "label " + std::to_string(l) + " exceeds k = " + std::to_string(e.k()));
                break;
            }
    }
    detail::simulate(
        e, e.root(),
        [&](NodeId id, const std::vector<int>& ci, const std::vector<int>& cj,
            const std::unordered_set<std::uint64_t>& edges) {
            const auto& n = e.node(id);
            if (ci.empty() || cj.empty()) {
                add(report.warnings, id, ViolationKind::vacuous_join,
                    "join " + std::to_string(n.first) + " " + std::to_string(n.second) + " has an empty class");
                return;
            }
            for (int u : ci)
                for (int v : cj)
                    if (edges.count(detail::edge_key(u, v))) {
                        add(report.violations, id, ViolationKind::redundant_join,
                            "join " + std::to_string(n.first) + " " + std::to_string(n.second) +
                                " re-adds an existing edge");
                        return;
                    }
        },
        [&](NodeId id, const detail::LabelClasses& classes) {
            const auto& n = e.node(id);
            auto it = classes.find(n.second);
            if (it == classes.end() || it->second.empty())
                add(report.violations, id, ViolationKind::rename_into_empty,
                    "rename target label " + std::to_string(n.second) + " is empty");
        });
    return report;
}

inline void require_valid(const CwExpression& e) {
    auto report = validate(e);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw ValidationError(std::string(to_string(v.kind)) + " at node " + std::to_string(v.node) + ": " + v.message);
    }
}

// ---------------------------------------------------------------------------
// Realization and label bookkeeping

struct Realization {
    Graph graph;
    std::map<std::string, Label> labels;  // final label per vertex
};

inline Realization realize(const CwExpression& e) {
    auto names = e.vertex_names();
    auto [classes, edges] = detail::simulate(
        e, e.root(), [](auto, const auto&, const auto&, const auto&) {}, [](auto, const auto&) {});
    Realization r;
    for (const auto& n : names) r.graph.add_vertex(n);
    std::vector<std::uint64_t> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto key : sorted) r.graph.add_edge(static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffU));
    for (const auto& [label, vs] : classes)
        for (int v : vs) r.labels[names[v]] = label;
    return r;
}

// Labels of the vertices of the subexpression rooted at `id`, after its root operation.
inline std::map<std::string, Label> labels_at(const CwExpression& e, NodeId id) {
    auto names = e.vertex_names();
    auto [classes, edges] = detail::simulate(
        e, id, [](auto, const auto&, const auto&, const auto&) {}, [](auto, const auto&) {});
    std::map<std::string, Label> out;
    for (const auto& [label, vs] : classes)
        for (int v : vs) out[names[v]] = label;
    return out;
}

inline std::map<std::string, Label> final_labels(const CwExpression& e) { return labels_at(e, e.root()); }

inline std::set<Label> unused_labels(const CwExpression& e) {
    std::set<Label> out;
    for (Label l = 1; l <= e.k(); ++l)
        if (!e.label_used(e.root(), l)) out.insert(l);
    return out;
}

inline bool check_realizes(const CwExpression& e, const Graph& g) {
    auto r = realize(e);
    auto a = r.graph.names();
    auto b = g.names();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b && r.graph.edge_names() == g.edge_names();
}

// ---------------------------------------------------------------------------
// Standard families. Vertices are v1..vn (a1..am, b1..bn for bipartite).

enum class Family { path, cycle, complete, complete_bipartite, trivial };

inline std::optional<Family> family_from_name(std::string_view s) {
    if (s == "path") return Family::path;
    if (s == "cycle") return Family::cycle;
    if (s == "complete") return Family::complete;
    if (s == "complete_bipartite") return Family::complete_bipartite;
    if (s == "trivial") return Family::trivial;
    return std::nullopt;
}

namespace detail {

inline std::string vname(int i) { return "v" + std::to_string(i); }

// Extends a path whose last vertex carries `last` and second-to-last `prev`
// (every other vertex has label 1) by one vertex. Labels 2 and 3 alternate for
// the tail so every rename targets the nonempty class 1.
inline NodeId extend_path(ExpressionBuilder& b, NodeId e, Label& last, Label& prev, const std::string& v) {
    if (prev != 1) e = b.rename(prev, 1, e);
    const Label fresh = last == 2 ? 3 : 2;
    e = b.join(last, fresh, b.disjoint_union(e, b.create(v, fresh)));
    prev = last;
    last = fresh;
    return e;
}

}  // namespace detail

inline CwExpression path_expression(int n) {
    if (n < 1) throw ValidationError("path needs n >= 1");
    ExpressionBuilder b;
    if (n == 1) return b.finish(b.create(detail::vname(1), 1), 3);
    NodeId e = b.join(1, 2, b.disjoint_union(b.create(detail::vname(1), 1), b.create(detail::vname(2), 2)));
    Label last = 2, prev = 1;
    for (int t = 3; t <= n; ++t) e = detail::extend_path(b, e, last, prev, detail::vname(t));
    return b.finish(e, 3);
}

inline CwExpression complete_expression(int n) {
    if (n < 1) throw ValidationError("complete needs n >= 1");
    ExpressionBuilder b;
    NodeId e = b.create(detail::vname(1), 1);
    for (int t = 2; t <= n; ++t) {
        if (t > 2) e = b.rename(2, 1, e);
        e = b.join(1, 2, b.disjoint_union(e, b.create(detail::vname(t), 2)));
    }
    return b.finish(e, 2);
}

inline CwExpression cycle_expression(int n) {
    if (n < 3) throw ValidationError("cycle needs n >= 3");
    if (n == 3) return complete_expression(3);
    ExpressionBuilder b;
    // v1 keeps label 4 until the closing join; v2 seeds class 1.
    NodeId e = b.join(4, 1, b.disjoint_union(b.create(detail::vname(1), 4), b.create(detail::vname(2), 1)));
    e = b.join(1, 2, b.disjoint_union(e, b.create(detail::vname(3), 2)));
    Label last = 2, prev = 1;
    for (int t = 4; t <= n; ++t) e = detail::extend_path(b, e, last, prev, detail::vname(t));
    e = b.join(last, 4, e);
    return b.finish(e, 4);
}

inline CwExpression complete_bipartite_expression(int m, int n) {
    if (m < 1 || n < 1) throw ValidationError("complete_bipartite needs m, n >= 1");
    ExpressionBuilder b;
    NodeId e = b.create("a1", 1);
    for (int i = 2; i <= m; ++i) e = b.disjoint_union(e, b.create("a" + std::to_string(i), 1));
    for (int i = 1; i <= n; ++i) e = b.disjoint_union(e, b.create("b" + std::to_string(i), 2));
    return b.finish(b.join(1, 2, e), 2);
}

// One label per vertex (declaration order), a left-deep union chain, then one join per edge.
inline CwExpression trivial_expression(const Graph& g) {
    if (g.vertex_count() < 1) throw ValidationError("trivial expression needs a nonempty graph");
    ExpressionBuilder b;
    NodeId e = b.create(g.name(0), 1);
    for (int v = 1; v < g.vertex_count(); ++v) e = b.disjoint_union(e, b.create(g.name(v), v + 1));
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) e = b.join(u + 1, v + 1, e);
    return b.finish(e, g.vertex_count());
}

inline CwExpression build_family(Family f, int n, int m = 0) {
    switch (f) {
        case Family::path: return path_expression(n);
        case Family::cycle: return cycle_expression(n);
        case Family::complete: return complete_expression(n);
        case Family::complete_bipartite: return complete_bipartite_expression(n, m);
        case Family::trivial: throw ValidationError("the trivial family is built from a graph");
    }
    throw ValidationError("unknown family");
}

}  // namespace cwlcp

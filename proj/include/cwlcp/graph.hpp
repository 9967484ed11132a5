#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cwlcp/errors.hpp"

namespace cwlcp {

inline bool is_valid_name(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

// Simple undirected graph over named vertices. Vertices get dense indices in
// declaration order; all queries by name go through that index.
class Graph {
public:
    Graph() = default;

    int add_vertex(const std::string& name) {
        if (!is_valid_name(name)) throw ValidationError("invalid vertex name '" + name + "'");
        if (index_.count(name)) throw ValidationError("duplicate vertex '" + name + "'");
        const int id = static_cast<int>(names_.size());
        index_.emplace(name, id);
        names_.push_back(name);
        adj_.emplace_back();
        return id;
    }

    void add_edge(int u, int v) {
        if (u == v) throw ValidationError("self-loop on '" + names_.at(u) + "'");
        if (has_edge(u, v)) throw ValidationError("parallel edge " + names_.at(u) + " " + names_.at(v));
        adj_.at(u).push_back(v);
        adj_.at(v).push_back(u);
        std::sort(adj_[u].begin(), adj_[u].end());
        std::sort(adj_[v].begin(), adj_[v].end());
        ++edge_count_;
    }

    void add_edge(const std::string& u, const std::string& v) { add_edge(index_of(u), index_of(v)); }

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }

    bool contains(const std::string& name) const { return index_.count(name) != 0; }

    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw ValidationError("unknown vertex '" + name + "'");
        return it->second;
    }

    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

    std::set<std::string> neighbors(const std::string& v) const {
        std::set<std::string> out;
        for (int u : adj_.at(index_of(v))) out.insert(names_[u]);
        return out;
    }

    bool has_edge(int u, int v) const {
        const auto& a = adj_.at(u);
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool has_edge(const std::string& u, const std::string& v) const { return has_edge(index_of(u), index_of(v)); }

    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    // Edges as name pairs with the lexicographically smaller name first.
    std::set<std::pair<std::string, std::string>> edge_names() const {
        std::set<std::pair<std::string, std::string>> out;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace(std::min(names_[u], names_[v]), std::max(names_[u], names_[v]));
        return out;
    }

    bool is_connected() const {
        if (names_.empty()) return true;
        std::vector<char> seen(names_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == vertex_count();
    }

    Graph complement() const {
        Graph g;
        for (const auto& n : names_) g.add_vertex(n);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v = u + 1; v < vertex_count(); ++v)
                if (!has_edge(u, v)) g.add_edge(u, v);
        return g;
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& n : names_) os << "v " << n << "\n";
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : adj_[u])
                if (u < v) os << "e " << names_[u] << " " << names_[v] << "\n";
        return os.str();
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Line format: "# comment", "v <name>", "e <name> <name>", blank lines ignored.
inline Graph parse_graph(std::string_view text) {
    Graph g;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        std::vector<std::string> args;
        for (std::string a; ls >> a;) args.push_back(a);
        try {
            if (tag == "v" && args.size() == 1) {
                if (!is_valid_name(args[0])) throw ParseError("invalid vertex name '" + args[0] + "'", lineno, 1);
                g.add_vertex(args[0]);
            } else if (tag == "e" && args.size() == 2) {
                for (const auto& a : args)
                    if (!g.contains(a)) throw ParseError("edge references unknown vertex '" + a + "'", lineno, 1);
                if (args[0] == args[1]) throw ParseError("self-loop on '" + args[0] + "'", lineno, 1);
                g.add_edge(args[0], args[1]);
            } else {
                throw ParseError("malformed line '" + line + "'", lineno, 1);
            }
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), lineno, 1);
        }
    }
    return g;
}

// Named graph builders used by tests, the CLI and the sweeps. Vertices are v1..vn.
namespace graphs {

inline Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

inline Graph cycle(int n) {
    auto e = std::vector<std::pair<int, int>>{};
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(n - 1, 0);
    return from_edges(n, e);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, e);
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

inline Graph empty(int n) { return from_edges(n, {}); }

// All connected graphs on n vertices up to isomorphism, each with vertices
// v1..vn. Canonical form is the minimum edge mask over all relabelings.
inline std::vector<Graph> connected_up_to_iso(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int m = static_cast<int>(slots.size());
    std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
    for (int s = 0; s < m; ++s) {
        slot_of[slots[s].first][slots[s].second] = s;
        slot_of[slots[s].second][slots[s].first] = s;
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::set<std::uint32_t> seen;
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::uint32_t best = mask;
        for (const auto& perm : perms) {
            std::uint32_t img = 0;
            for (int s = 0; s < m; ++s)
                if (mask >> s & 1U) img |= std::uint32_t{1} << slot_of[perm[slots[s].first]][perm[slots[s].second]];
            best = std::min(best, img);
            if (best < mask) break;
        }
        if (best != mask || !seen.insert(mask).second) continue;
        std::vector<std::pair<int, int>> e;
        for (int s = 0; s < m; ++s)
            if (mask >> s & 1U) e.push_back(slots[s]);
        Graph g = from_edges(n, e);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace graphs
}  // namespace cwlcp

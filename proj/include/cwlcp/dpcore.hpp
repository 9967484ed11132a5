#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cwlcp/checkmodel.hpp"
#include "cwlcp/cwexpr.hpp"
#include "cwlcp/errors.hpp"
#include "cwlcp/sizedfa.hpp"
#include "cwlcp/solution.hpp"
#include "cwlcp/weights.hpp"

namespace cwlcp {

using Count = std::uint16_t;

// k x q matrix of capped counts; row r holds label r + 1.
class CountMatrix {
public:
    CountMatrix() = default;
    CountMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}
    CountMatrix(int rows, int cols, std::vector<Count> data) : rows_(rows), cols_(cols), data_(std::move(data)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Count operator()(int row, int col) const { return data_[static_cast<std::size_t>(row) * cols_ + col]; }
    Count& operator()(int row, int col) { return data_[static_cast<std::size_t>(row) * cols_ + col]; }
    std::span<const Count> data() const { return data_; }

    bool row_is_zero(int row) const {
        for (int a = 0; a < cols_; ++a)
            if ((*this)(row, a) != 0) return false;
        return true;
    }

    friend bool operator==(const CountMatrix&, const CountMatrix&) = default;
    friend auto operator<=>(const CountMatrix& x, const CountMatrix& y) { return x.data_ <=> y.data_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Count> data_;
};

// Size tracker for one size-constrained color: current automaton state and
// the predicate its final state must satisfy.
struct TrackerState {
    State state = 0;
    StatePredicate predicate = StatePredicate::accepting();
    friend bool operator==(const TrackerState&, const TrackerState&) = default;
};

struct SolveOptions {
    bool want_coloring = false;
    // Restrict root and split enumerations to reachable count profiles.
    bool prune = true;
};

// All (x, y) in [0, cap]^2 with min(cap, x + y) == c, in lexicographic order.
inline std::vector<std::pair<int, int>> capped_splits(int c, int cap) {
    std::vector<std::pair<int, int>> out;
    if (c < 0 || c > cap) return out;
    for (int x = 0; x <= cap; ++x)
        for (int y = 0; y <= cap; ++y)
            if (std::min(cap, x + y) == c) out.emplace_back(x, y);
    return out;
}

// Upcoming-neighbor matrix for the child of a join on labels i, j.
inline CountMatrix join_upcoming(const CountMatrix& c, const CountMatrix& n, Label i, Label j, int cap) {
    CountMatrix out = n;
    for (int a = 0; a < n.cols(); ++a) {
        out(i - 1, a) = static_cast<Count>(std::min(cap, n(i - 1, a) + c(j - 1, a)));
        out(j - 1, a) = static_cast<Count>(std::min(cap, n(j - 1, a) + c(i - 1, a)));
    }
    return out;
}

namespace detail {

using Key = std::vector<Count>;

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (Count x : k) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

struct ProfileSet {
    std::vector<Key> list;  // sorted
    std::unordered_set<Key, KeyHash> set;
};

}  // namespace detail

// Memoized evaluation of the (C, N, trackers) recurrences over one expression.
// Keys are computed on demand from the root; nothing is tabulated eagerly.
class DpSolver {
public:
    DpSolver(const ProblemModel& model, const CwExpression& expr, bool prune = true)
        : m_(model), e_(expr), prune_(prune) {
        require_valid(e_);
        k_ = e_.k();
        q_ = m_.color_count();
        cap_ = m_.stability_cap();
        if (cap_ > 0xffff) throw ValidationError("stability cap too large");
        kq_ = k_ * q_;

        vertex_of_.assign(e_.size(), -1);
        int seen = 0;
        for (NodeId id = 0; id < e_.size(); ++id) {
            const auto& n = e_.node(id);
            if (n.kind != OpKind::create) continue;
            auto v = m_.vertex_index(n.vertex);
            if (!v) throw MismatchError("expression vertex '" + n.vertex + "' is not in the model");
            vertex_of_[id] = *v;
            ++seen;
        }
        if (seen != m_.vertex_count()) throw MismatchError("model has vertices that the expression does not create");

        for (Color a : m_.constrained_colors()) {
            tracked_.push_back(a);
            automata_.push_back(&*m_.size_constraint(a));
        }
        memo_.resize(e_.size());
        if (prune_) build_profiles();
    }

    int k() const { return k_; }
    int q() const { return q_; }
    int cap() const { return cap_; }

    std::vector<TrackerState> initial_trackers() const {
        std::vector<TrackerState> out;
        for (const auto* a : automata_) out.push_back({a->start(), StatePredicate::accepting()});
        return out;
    }

    // Minimum weight of a coloring of the subexpression at `node` matching C, N and trackers.
    WeightValue lambda(NodeId node, const CountMatrix& c, const CountMatrix& n, std::span<const TrackerState> trackers = {}) {
        if (c.rows() != k_ || c.cols() != q_ || n.rows() != k_ || n.cols() != q_)
            throw std::invalid_argument("count matrix dimensions must be k x q");
        if (trackers.size() != tracked_.size()) throw std::invalid_argument("one tracker per size-constrained color");
        for (Count x : c.data())
            if (x > cap_) throw std::invalid_argument("C entry exceeds the stability cap");
        for (Count x : n.data())
            if (x > cap_) throw std::invalid_argument("N entry exceeds the stability cap");
        return eval(node, make_key(c, n, trackers)).first;
    }

    // Witness for a previously evaluated, non-Error key.
    Coloring witness(NodeId node, const CountMatrix& c, const CountMatrix& n, std::span<const TrackerState> trackers = {}) {
        auto [w, key] = eval(node, make_key(c, n, trackers));
        if (w.is_error()) throw std::invalid_argument("no coloring exists for this key");
        return reconstruct(node, key);
    }

    Solution solve(bool want_coloring = false) {
        const auto t0 = std::chrono::steady_clock::now();
        Solution sol;
        sol.weight = WeightValue::error();
        const Key* best_key = nullptr;
        const auto& ws = m_.weight_set();
        auto trackers = initial_trackers();
        std::size_t candidates = 0;
        for_each_root_candidate([&](const Key& c) {
            ++candidates;
            Key key(c);
            key.resize(2 * kq_, 0);
            append_trackers(key, trackers);
            auto [w, kp] = eval(e_.root(), std::move(key));
            if (ws.precedes(w, sol.weight)) {
                sol.weight = w;
                best_key = kp;
            }
        });
        if (want_coloring && !sol.weight.is_error()) sol.coloring = reconstruct(e_.root(), best_key);
        sol.stats.nodes = e_.size();
        sol.stats.memo_entries = memo_entries();
        sol.stats.root_candidates = candidates;
        sol.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return sol;
    }

    std::size_t memo_entries() const {
        std::size_t total = 0;
        for (const auto& t : memo_) total += t.size();
        return total;
    }

    // Reachable C matrices per node; empty when pruning is off.
    std::vector<std::vector<CountMatrix>> profiles() const {
        std::vector<std::vector<CountMatrix>> out(e_.size());
        if (!prune_) return out;
        for (NodeId id = 0; id < e_.size(); ++id)
            for (const auto& p : profiles_[id]->list) out[id].emplace_back(k_, q_, p);
        return out;
    }

private:
    using Key = detail::Key;
    using KeyHash = detail::KeyHash;

    struct Entry {
        WeightValue weight;
        const Key* first = nullptr;   // child key (join, rename, union left)
        const Key* second = nullptr;  // union right
        NodeId first_node = -1;       // owner of `first`; joins may skip ahead
    };
    using Table = std::unordered_map<Key, Entry, KeyHash>;

    // Key layout: C (k*q) | N (k*q) | per tracker: state, predicate code.
    Count c_at(const Key& key, int row, int a) const { return key[row * q_ + a]; }
    Count n_at(const Key& key, int row, int a) const { return key[kq_ + row * q_ + a]; }
    std::size_t tracker_base() const { return 2 * static_cast<std::size_t>(kq_); }

    Key make_key(const CountMatrix& c, const CountMatrix& n, std::span<const TrackerState> trackers) const {
        Key key(c.data().begin(), c.data().end());
        key.insert(key.end(), n.data().begin(), n.data().end());
        append_trackers(key, trackers);
        return key;
    }

    static void append_trackers(Key& key, std::span<const TrackerState> trackers) {
        for (const auto& t : trackers) {
            key.push_back(static_cast<Count>(t.state));
            key.push_back(static_cast<Count>(t.predicate.encode()));
        }
    }

    std::pair<WeightValue, const Key*> eval(NodeId id, Key&& key) {
        auto& table = memo_[id];
        if (auto it = table.find(key); it != table.end()) return {it->second.weight, &it->first};
        Entry entry;
        switch (e_.node(id).kind) {
            case OpKind::create: entry = eval_create(id, key); break;
            case OpKind::disjoint_union: entry = eval_union(id, key); break;
            case OpKind::join: entry = eval_join(id, key); break;
            case OpKind::rename: entry = eval_rename(id, key); break;
        }
        auto [it, inserted] = table.emplace(std::move(key), entry);
        return {it->second.weight, &it->first};
    }

    Entry eval_create(NodeId id, const Key& key) const {
        const auto& node = e_.node(id);
        const int row = node.label - 1;
        int color = -1;
        for (int r = 0; r < k_; ++r)
            for (int a = 0; a < q_; ++a) {
                Count x = c_at(key, r, a);
                if (x == 0) continue;
                if (x != 1 || r != row || color >= 0) return {WeightValue::error()};
                color = a;
            }
        const int v = vertex_of_[id];
        if (color < 0 || !m_.allows(v, color)) return {WeightValue::error()};
        counts_.resize(q_);
        for (int a = 0; a < q_; ++a) counts_[a] = n_at(key, row, a);
        if (!m_.evaluate_check(v, color, counts_)) return {WeightValue::error()};
        const std::size_t base = tracker_base();
        for (std::size_t t = 0; t < tracked_.size(); ++t) {
            const auto& aut = *automata_[t];
            State s = key[base + 2 * t];
            if (tracked_[t] == color) s = aut.step(s);
            if (!StatePredicate::decode(key[base + 2 * t + 1]).holds(aut, s)) return {WeightValue::error()};
        }
        return {m_.weight_of(v, color)};
    }

    // A run of joins only rewrites N, so it is applied in one step and only
    // the first non-join descendant is memoized.
    Entry eval_join(NodeId id, const Key& key) {
        Key child = key;
        NodeId at = id;
        while (e_.node(at).kind == OpKind::join) {
            const auto& node = e_.node(at);
            const int i = node.first - 1, j = node.second - 1;
            for (int a = 0; a < q_; ++a) {
                const Count ni = child[kq_ + i * q_ + a], nj = child[kq_ + j * q_ + a];
                child[kq_ + i * q_ + a] = static_cast<Count>(std::min(cap_, ni + c_at(child, j, a)));
                child[kq_ + j * q_ + a] = static_cast<Count>(std::min(cap_, nj + c_at(child, i, a)));
            }
            at = node.left;
        }
        auto [w, kp] = eval(at, std::move(child));
        return {w, kp, nullptr, at};
    }

    Entry eval_rename(NodeId id, const Key& key) {
        const auto& node = e_.node(id);
        const int i = node.first - 1, j = node.second - 1;
        if (!(i < k_ && j < k_)) return {WeightValue::error()};
        for (int a = 0; a < q_; ++a)
            if (c_at(key, i, a) != 0) return {WeightValue::error()};

        Key base = key;  // C rows i, j are overwritten per candidate
        for (int a = 0; a < q_; ++a) base[kq_ + i * q_ + a] = n_at(key, j, a);

        const auto& ws = m_.weight_set();
        Entry best{WeightValue::error()};
        auto consider = [&](const Key& ce) {
            Key child = base;
            std::copy(ce.begin(), ce.begin() + kq_, child.begin());
            auto [w, kp] = eval(node.left, std::move(child));
            if (ws.precedes(w, best.weight)) best = {w, kp, nullptr, node.left};
        };

        std::vector<std::vector<std::pair<int, int>>> splits(q_);
        std::size_t product = 1;
        for (int a = 0; a < q_; ++a) {
            splits[a] = capped_splits(c_at(key, j, a), cap_);
            product *= splits[a].size();
            if (product == 0) return best;
        }
        const detail::ProfileSet* child_profiles = prune_ ? profiles_[node.left].get() : nullptr;
        if (child_profiles && child_profiles->list.size() < product) {
            for (const auto& p : child_profiles->list) {
                bool match = true;
                for (int r = 0; r < k_ && match; ++r) {
                    if (r == i || r == j) continue;
                    for (int a = 0; a < q_; ++a)
                        if (p[r * q_ + a] != c_at(key, r, a)) {
                            match = false;
                            break;
                        }
                }
                for (int a = 0; a < q_ && match; ++a)
                    if (std::min(cap_, p[i * q_ + a] + p[j * q_ + a]) != c_at(key, j, a)) match = false;
                if (match) consider(p);
            }
            return best;
        }
        Key ce(key.begin(), key.begin() + kq_);
        std::vector<std::size_t> pick(q_, 0);
        while (true) {
            for (int a = 0; a < q_; ++a) {
                ce[i * q_ + a] = static_cast<Count>(splits[a][pick[a]].first);
                ce[j * q_ + a] = static_cast<Count>(splits[a][pick[a]].second);
            }
            if (!child_profiles || child_profiles->set.count(ce)) consider(ce);
            int a = q_ - 1;
            while (a >= 0 && ++pick[a] == splits[a].size()) pick[a--] = 0;
            if (a < 0) break;
        }
        return best;
    }

    Entry eval_union(NodeId id, const Key& key) {
        const auto& node = e_.node(id);
        const NodeId l = node.left, r = node.right;
        const auto& ws = m_.weight_set();

        // Upcoming counts restricted to labels present on each side.
        Key nl(key.begin() + kq_, key.begin() + 2 * kq_), nr = nl;
        for (int row = 0; row < k_; ++row) {
            const bool in_l = e_.label_used(l, row + 1), in_r = e_.label_used(r, row + 1);
            for (int a = 0; a < q_; ++a) {
                if (!in_l) nl[row * q_ + a] = 0;
                if (!in_r) nr[row * q_ + a] = 0;
            }
        }

        Entry best{WeightValue::error()};
        const std::size_t base = tracker_base();
        const std::size_t rcount = tracked_.size();
        std::vector<std::vector<State>> mids(rcount);
        std::vector<std::size_t> pick(rcount, 0);

        auto consider = [&](const Key& c1, const Key& c2) {
            // Intermediate automaton state per tracked color.
            for (std::size_t t = 0; t < rcount; ++t) {
                const auto& aut = *automata_[t];
                const State s = key[base + 2 * t];
                mids[t].clear();
                std::optional<int> exact;
                if (prune_) {
                    int total = 0;
                    bool capped = false;
                    for (int row = 0; row < k_; ++row) {
                        Count x = c1[row * q_ + tracked_[t]];
                        capped = capped || x >= cap_;
                        total += x;
                    }
                    if (!capped) exact = total;
                }
                if (exact) {
                    mids[t].push_back(aut.power(s, *exact));
                } else {
                    for (State q = 0; q < aut.state_count(); ++q) mids[t].push_back(q);
                }
                pick[t] = 0;
            }
            while (true) {
                Key k1, k2;
                k1.reserve(key.size());
                k2.reserve(key.size());
                k1.insert(k1.end(), c1.begin(), c1.begin() + kq_);
                k1.insert(k1.end(), nl.begin(), nl.end());
                k2.insert(k2.end(), c2.begin(), c2.begin() + kq_);
                k2.insert(k2.end(), nr.begin(), nr.end());
                for (std::size_t t = 0; t < rcount; ++t) {
                    const State mid = mids[t][pick[t]];
                    k1.push_back(key[base + 2 * t]);
                    k1.push_back(static_cast<Count>(StatePredicate::equals(mid).encode()));
                    k2.push_back(static_cast<Count>(mid));
                    k2.push_back(key[base + 2 * t + 1]);
                }
                auto [w1, p1] = eval(l, std::move(k1));
                if (!w1.is_error()) {
                    auto [w2, p2] = eval(r, std::move(k2));
                    const WeightValue w = ws.combine(w1, w2);
                    if (ws.precedes(w, best.weight)) best = {w, p1, p2, l};
                }
                std::size_t t = rcount;
                while (t > 0 && ++pick[t - 1] == mids[t - 1].size()) pick[--t] = 0;
                if (t == 0) break;
            }
        };

        // Per entry, every capped split that respects unused labels; entry x
        // owns splits[offset[x] .. offset[x + 1]).
        std::vector<std::pair<Count, Count>> splits;
        std::vector<int> offset(kq_ + 1, 0);
        double product = 1;
        for (int row = 0; row < k_; ++row) {
            const bool in_l = e_.label_used(l, row + 1), in_r = e_.label_used(r, row + 1);
            for (int a = 0; a < q_; ++a) {
                const int x0 = row * q_ + a;
                const int c = key[x0];
                for (int x = 0; x <= (in_l ? c : 0); ++x) {
                    if (c < cap_) {
                        if (in_r || x == c) splits.emplace_back(x, c - x);
                    } else {
                        for (int y = cap_ - x; y <= (in_r ? cap_ : 0); ++y) splits.emplace_back(x, y);
                    }
                }
                offset[x0 + 1] = static_cast<int>(splits.size());
                const int width = offset[x0 + 1] - offset[x0];
                if (width == 0) return best;
                product *= width;
            }
        }

        const detail::ProfileSet* p1s = prune_ ? profiles_[l].get() : nullptr;
        const detail::ProfileSet* p2s = prune_ ? profiles_[r].get() : nullptr;
        if (p1s && product > static_cast<double>(p1s->list.size())) {
            Key lo(kq_), hi(kq_), c2(kq_);
            for (const auto& c1 : p1s->list) {
                bool ok = true;
                bool exact = true;
                double range = 1;
                for (int x = 0; x < kq_ && ok; ++x) {
                    const int c = key[x];
                    if (c < cap_) {
                        if (c1[x] > c) ok = false;
                        lo[x] = hi[x] = static_cast<Count>(c - c1[x]);
                    } else {
                        lo[x] = static_cast<Count>(std::max(0, cap_ - c1[x]));
                        hi[x] = static_cast<Count>(cap_);
                        if (lo[x] != hi[x]) {
                            exact = false;
                            range *= hi[x] - lo[x] + 1;
                        }
                    }
                }
                if (!ok) continue;
                if (exact) {
                    if (p2s->set.count(lo)) consider(c1, lo);
                } else if (range < static_cast<double>(p2s->list.size())) {
                    c2 = lo;
                    while (true) {
                        if (p2s->set.count(c2)) consider(c1, c2);
                        int x = kq_ - 1;
                        while (x >= 0 && c2[x] == hi[x]) {
                            c2[x] = lo[x];
                            --x;
                        }
                        if (x < 0) break;
                        ++c2[x];
                    }
                } else {
                    for (const auto& cand : p2s->list) {
                        bool in = true;
                        for (int x = 0; x < kq_ && in; ++x) in = cand[x] >= lo[x] && cand[x] <= hi[x];
                        if (in) consider(c1, cand);
                    }
                }
            }
            return best;
        }

        Key c1(kq_), c2(kq_);
        std::vector<int> at(offset.begin(), offset.end() - 1);
        while (true) {
            for (int x = 0; x < kq_; ++x) {
                c1[x] = splits[at[x]].first;
                c2[x] = splits[at[x]].second;
            }
            if (!p1s || (p1s->set.count(c1) && p2s->set.count(c2))) consider(c1, c2);
            int x = kq_ - 1;
            while (x >= 0 && ++at[x] == offset[x + 1]) {
                at[x] = offset[x];
                --x;
            }
            if (x < 0) break;
        }
        return best;
    }

    // Root C matrices: reachable profiles, or (unpruned) every matrix that is
    // zero on unused labels and whose entries sum to at most |V|.
    template <class F>
    void for_each_root_candidate(F&& f) {
        if (prune_) {
            for (const auto& c : profiles_[e_.root()]->list) f(c);
            return;
        }
        std::vector<int> free_slots;
        for (int row = 0; row < k_; ++row)
            if (e_.label_used(e_.root(), row + 1))
                for (int a = 0; a < q_; ++a) free_slots.push_back(row * q_ + a);
        Key c(kq_, 0);
        const int budget = e_.vertex_count();
        std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int left) {
            if (idx == free_slots.size()) {
                f(c);
                return;
            }
            for (int x = 0; x <= std::min(cap_, left); ++x) {
                c[free_slots[idx]] = static_cast<Count>(x);
                rec(idx + 1, left - x);
            }
            c[free_slots[idx]] = 0;
        };
        rec(0, budget);
    }

    void build_profiles() {
        profiles_.resize(e_.size());
        for (NodeId id = 0; id < e_.size(); ++id) {
            const auto& node = e_.node(id);
            switch (node.kind) {
                case OpKind::create: {
                    auto ps = std::make_shared<detail::ProfileSet>();
                    for (Color a : m_.color_list(vertex_of_[id])) {
                        Key c(kq_, 0);
                        c[(node.label - 1) * q_ + a] = 1;
                        ps->set.insert(std::move(c));
                    }
                    finish_profiles(*ps);
                    profiles_[id] = std::move(ps);
                    break;
                }
                case OpKind::join:
                    profiles_[id] = profiles_[node.left];
                    break;
                case OpKind::rename: {
                    auto ps = std::make_shared<detail::ProfileSet>();
                    const int i = node.first - 1, j = node.second - 1;
                    for (Key c : profiles_[node.left]->list) {
                        for (int a = 0; a < q_; ++a) {
                            c[j * q_ + a] = static_cast<Count>(std::min(cap_, c[i * q_ + a] + c[j * q_ + a]));
                            c[i * q_ + a] = 0;
                        }
                        ps->set.insert(std::move(c));
                    }
                    finish_profiles(*ps);
                    profiles_[id] = std::move(ps);
                    break;
                }
                case OpKind::disjoint_union: {
                    auto ps = std::make_shared<detail::ProfileSet>();
                    for (const auto& x : profiles_[node.left]->list)
                        for (const auto& y : profiles_[node.right]->list) {
                            Key c(kq_);
                            for (int t = 0; t < kq_; ++t) c[t] = static_cast<Count>(std::min(cap_, x[t] + y[t]));
                            ps->set.insert(std::move(c));
                        }
                    finish_profiles(*ps);
                    profiles_[id] = std::move(ps);
                    break;
                }
            }
        }
    }

    static void finish_profiles(detail::ProfileSet& ps) {
        ps.list.assign(ps.set.begin(), ps.set.end());
        std::sort(ps.list.begin(), ps.list.end());
    }

    Coloring reconstruct(NodeId root, const Key* root_key) const {
        Coloring out(m_.vertex_count(), -1);
        std::vector<std::pair<NodeId, const Key*>> stack{{root, root_key}};
        while (!stack.empty()) {
            auto [id, kp] = stack.back();
            stack.pop_back();
            if (!kp) throw InternalError("missing reconstruction choice");
            const auto& node = e_.node(id);
            if (node.kind == OpKind::create) {
                for (int a = 0; a < q_; ++a)
                    if (c_at(*kp, node.label - 1, a) == 1) out[vertex_of_[id]] = a;
                continue;
            }
            auto it = memo_[id].find(*kp);
            if (it == memo_[id].end() || it->second.weight.is_error())
                throw InternalError("reconstruction reached an infeasible entry");
            stack.emplace_back(it->second.first_node, it->second.first);
            if (node.kind == OpKind::disjoint_union) stack.emplace_back(node.right, it->second.second);
        }
        // below the root, vertices outside the subtree stay at -1
        if (root == e_.root())
            for (Color c : out)
                if (c < 0) throw InternalError("reconstruction left a vertex uncolored");
        return out;
    }

    const ProblemModel& m_;
    const CwExpression& e_;
    bool prune_;
    int k_ = 0, q_ = 0, cap_ = 1, kq_ = 0;
    std::vector<int> vertex_of_;
    std::vector<Color> tracked_;
    std::vector<const CountingAutomaton*> automata_;
    std::vector<Table> memo_;
    std::vector<std::shared_ptr<const detail::ProfileSet>> profiles_;
    mutable std::vector<int> counts_;
};

inline Solution solve(const ProblemModel& model, const CwExpression& expr, SolveOptions options = {}) {
    DpSolver solver(model, expr, options.prune);
    return solver.solve(options.want_coloring);
}

inline Solution solve(const ProblemModel& model, const CwExpression& expr, bool want_coloring) {
    return solve(model, expr, SolveOptions{want_coloring, true});
}

inline std::vector<std::vector<CountMatrix>> reachable_profiles(const ProblemModel& model, const CwExpression& expr) {
    return DpSolver(model, expr, true).profiles();
}

}  // namespace cwlcp

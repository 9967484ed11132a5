#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace cwlcp {

using State = int;

// Deterministic automaton over the unary alphabet {1}.
class CountingAutomaton {
public:
    CountingAutomaton(std::vector<State> transition, State start, std::vector<bool> accepting)
        : delta_(std::move(transition)), start_(start), accepting_(std::move(accepting)) {
        const int n = static_cast<int>(delta_.size());
        if (n == 0) throw std::invalid_argument("automaton needs at least one state");
        if (start_ < 0 || start_ >= n) throw std::invalid_argument("start state out of range");
        if (static_cast<int>(accepting_.size()) != n) throw std::invalid_argument("accepting set size mismatch");
        for (State s : delta_)
            if (s < 0 || s >= n) throw std::invalid_argument("transition target out of range");
    }

    int state_count() const { return static_cast<int>(delta_.size()); }
    State start() const { return start_; }
    bool is_accepting(State s) const { return accepting_.at(s); }

    State step(State s) const { return delta_.at(s); }

    State power(State s, long n) const {
        for (long i = 0; i < n; ++i) {
            State next = delta_.at(s);
            if (next == s) break;  // self-loop: fixed from here on
            s = next;
        }
        return s;
    }

    bool accepts_length(long n) const { return is_accepting(power(start_, n)); }

    friend bool operator==(const CountingAutomaton&, const CountingAutomaton&) = default;

private:
    std::vector<State> delta_;
    State start_;
    std::vector<bool> accepting_;
};

// Chain s_0 -> s_1 -> ... -> s_{m+1} with s_{m+1} absorbing and F = {s_i : i in sigma}.
// For empty sigma this is a single rejecting state.
inline CountingAutomaton dfa_from_finite_set(const std::set<int>& sigma) {
    if (!sigma.empty() && *sigma.begin() < 0) throw std::invalid_argument("sizes must be non-negative");
    if (sigma.empty()) return CountingAutomaton({0}, 0, {false});
    const int m = *sigma.rbegin();
    std::vector<State> delta(m + 2);
    std::vector<bool> accepting(m + 2, false);
    for (int i = 0; i <= m; ++i) delta[i] = i + 1;
    delta[m + 1] = m + 1;
    for (int i : sigma) accepting[i] = true;
    return CountingAutomaton(std::move(delta), 0, std::move(accepting));
}

inline CountingAutomaton dfa_exact_size(int s) { return dfa_from_finite_set({s}); }

// A subset of an automaton's states: either its accepting set, or a single
// state. These are the only two shapes the size trackers need.
class StatePredicate {
public:
    static StatePredicate accepting() { return StatePredicate(-1); }
    static StatePredicate equals(State q) { return StatePredicate(q); }
    static StatePredicate nothing() { return StatePredicate(-2); }

    bool holds(const CountingAutomaton& a, State s) const {
        if (code_ == -2) return false;
        if (code_ == -1) return a.is_accepting(s);
        return s == code_;
    }

    // Compact form used inside DP keys: 0 = accepting set, 1 + q = {q}.
    int encode() const { return code_ == -1 ? 0 : code_ + 1; }
    static StatePredicate decode(int code) { return code == 0 ? accepting() : equals(code - 1); }

    bool is_singleton() const { return code_ >= 0; }
    State singleton_state() const { return code_; }

    friend bool operator==(const StatePredicate&, const StatePredicate&) = default;

private:
    explicit StatePredicate(int code) : code_(code) {}
    int code_;
};

inline bool predicate_holds(const CountingAutomaton& a, const StatePredicate& p, State s) { return p.holds(a, s); }

}  // namespace cwlcp

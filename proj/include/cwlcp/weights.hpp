#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace cwlcp {

// An extended integer: either a finite 64-bit value or the absorbing Error.
class WeightValue {
public:
    constexpr WeightValue() = default;
    constexpr explicit WeightValue(std::int64_t v) : value_(v), error_(false) {}

    static constexpr WeightValue error() { return WeightValue{}; }

    constexpr bool is_error() const { return error_; }
    constexpr std::int64_t value() const { return value_; }

    friend constexpr bool operator==(const WeightValue&, const WeightValue&) = default;

    std::string to_string() const { return error_ ? "INFEASIBLE" : std::to_string(value_); }

private:
    std::int64_t value_ = 0;
    bool error_ = true;
};

inline std::ostream& operator<<(std::ostream& os, const WeightValue& w) { return os << w.to_string(); }

constexpr bool is_error(const WeightValue& w) { return w.is_error(); }

enum class Orientation { minimize, maximize };
enum class Combination { sum, max };

// Totally ordered commutative monoid over extended integers. The order is the
// integer order (minimize) or its reverse (maximize); Error is always the
// maximum and absorbs under combine.
struct WeightSet {
    Orientation orientation = Orientation::minimize;
    Combination combination = Combination::sum;

    static constexpr WeightSet min_sum() { return {Orientation::minimize, Combination::sum}; }
    static constexpr WeightSet max_sum() { return {Orientation::maximize, Combination::sum}; }
    // ({0,1}, <=, max)
    static constexpr WeightSet decision() { return {Orientation::minimize, Combination::max}; }

    constexpr WeightValue neutral() const { return WeightValue{0}; }

    constexpr WeightValue combine(WeightValue a, WeightValue b) const {
        if (a.is_error() || b.is_error()) return WeightValue::error();
        if (combination == Combination::max) return a.value() >= b.value() ? a : b;
        std::int64_t out = 0;
        if (__builtin_add_overflow(a.value(), b.value(), &out)) return WeightValue::error();
        // The extreme values stand in for the infinities and are never finite results.
        if (out == std::numeric_limits<std::int64_t>::max() || out == std::numeric_limits<std::int64_t>::min())
            return WeightValue::error();
        return WeightValue{out};
    }

    // Strict order a < b under this weight set.
    constexpr bool precedes(WeightValue a, WeightValue b) const {
        if (a.is_error()) return false;
        if (b.is_error()) return true;
        return orientation == Orientation::minimize ? a.value() < b.value() : a.value() > b.value();
    }

    constexpr WeightValue prefer(WeightValue a, WeightValue b) const { return precedes(b, a) ? b : a; }

    friend constexpr bool operator==(const WeightSet&, const WeightSet&) = default;
};

inline std::string to_string(const WeightSet& ws) {
    if (ws.combination == Combination::max) return "decision";
    return ws.orientation == Orientation::minimize ? "min-sum" : "max-sum";
}

}  // namespace cwlcp

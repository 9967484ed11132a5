#pragma once

#include <stdexcept>
#include <string>

namespace cwlcp {

// Malformed graph or expression text. Position is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : std::runtime_error(line > 0 ? what + " at " + std::to_string(line) + ":" + std::to_string(column) : what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// An expression failed validation, or a builder argument is out of range.
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression, graph and model disagree about the vertex universe or edges.
class MismatchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A result failed independent re-verification. Always a bug.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace cwlcp

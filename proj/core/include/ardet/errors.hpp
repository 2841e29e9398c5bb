#ifndef ARDET_ERRORS_HPP
#define ARDET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ardet {

// Malformed quiver text or JSON. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what_arg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what_arg
                                      : what_arg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

// Structurally invalid input (bad relation, out-of-range vertex, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A structural identity that must hold failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace ardet

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace speccurve {

// Raised when an input violates a documented precondition or standing
// assumption (bad degrees, carrier mismatch, non-constant leading
// coefficient, ...). The CLI maps these to exit code 2.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by the operator-expression parser; offset is a byte position
// into the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace speccurve

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alliance {

/// Malformed instance text. `line()` is 1-based, 0 when the error is not tied to a line.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string &what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exponential routine was asked to go past its configured size guard.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result failed its own internal verification. Always a bug.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace alliance

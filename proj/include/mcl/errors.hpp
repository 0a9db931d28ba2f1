#pragma once

#include <stdexcept>
#include <string>

namespace mcl {

// Bad arguments or malformed problem data.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structured-file syntax errors; line is 1-based, 0 when unknown.
class ParseError : public InputError {
public:
    ParseError(const std::string& msg, std::size_t line)
        : InputError(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Instance exceeds a hard enumeration limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mcl

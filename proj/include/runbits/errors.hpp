#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace runbits {

// Input outside the domain of an operation (n = 0, bad alphabet, malformed runs).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A theorem-facing check was invoked with arguments violating its hypotheses.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed lines that violate a file-level invariant (e.g. index gaps).
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace runbits

#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace gsb {

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (presentation or group file). Carries a 1-based
/// line number when the location is known, 0 otherwise.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An explicitly budgeted loop ran out of budget. Distinct from a property
/// failing: the computation was cut short, nothing was decided.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

/// A group table failed validation. Identifies the broken axiom and a
/// witness triple of element indices (unused slots are -1).
class GroupValidationError : public Error {
public:
    GroupValidationError(std::string axiom, std::array<int, 3> witness, const std::string& msg)
        : Error(msg), axiom_(std::move(axiom)), witness_(witness) {}
    const std::string& axiom() const { return axiom_; }
    const std::array<int, 3>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::array<int, 3> witness_;
};

}  // namespace gsb

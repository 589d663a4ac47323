#pragma once

#include <stdexcept>
#include <string>

namespace sigmarho {

// Input text could not be parsed. line is 1-based within the offending document.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An exhaustive oracle was asked to run above its configured size cap.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The (sigma, rho) specification is outside what the requested operation supports
// (infinite set where a finite one is required, empty set, failed guard, ...).
class UnsupportedSpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A satisfying assignment of a reduced instance did not lift to a valid
// dominating set. Surfaced loudly; the acceptance sweep requires zero of these.
class LiftError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Interpolation nodes were not pairwise distinct.
class InterpolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sigmarho

#pragma once

#include <stdexcept>
#include <string>

namespace drazin {

/// Operand shapes do not conform, or an index is out of range.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

/// The numerator vanishes to a lower order at zero than the denominator.
/// Valid inputs never produce this; seeing it means an internal inconsistency.
class LimitDiverges : public std::logic_error {
public:
    LimitDiverges() : std::logic_error("limit diverges") {}
};

/// Group inverse requested for a matrix whose index exceeds one.
class IndexTooLarge : public std::domain_error {
public:
    IndexTooLarge() : std::domain_error("matrix has index > 1") {}
};

/// The two dual determinantal evaluations of the same quantity disagreed.
class RepresentationMismatch : public std::logic_error {
public:
    explicit RepresentationMismatch(const std::string& what)
        : std::logic_error("representation mismatch: " + what) {}
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace drazin

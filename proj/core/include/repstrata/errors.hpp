#pragma once

#include <stdexcept>
#include <string>

namespace repstrata {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad field parameters (p not an odd prime, mixed-field arithmetic, ...).
struct FieldError : Error {
    using Error::Error;
};

// Incompatible matrix / block / layering shapes.
struct DimensionError : Error {
    using Error::Error;
};

// Singular matrix where an invertible one is required.
struct SingularError : Error {
    using Error::Error;
};

// det(gram) = 0 in a local-algebra presentation.
struct DegeneracyError : Error {
    using Error::Error;
};

// A representation that fails its relations.
struct InvalidRepresentationError : Error {
    using Error::Error;
};

// Out-of-range or inconsistent arguments to a construction.
struct ParameterError : Error {
    using Error::Error;
};

// Operation asked about a layering whose stratum is empty.
struct EmptyStratumError : Error {
    using Error::Error;
};

// Randomized search exhausted its retry budget.
struct SearchError : Error {
    using Error::Error;
};

// Enumeration refused: search space exceeds the budget.
struct BudgetError : Error {
    explicit BudgetError(const std::string& what, double searchSpace)
        : Error(what), search_space(searchSpace) {}
    double search_space;
};

// No decomposition into root generators exists.
struct DecompositionError : Error {
    using Error::Error;
};

// Malformed JSON input.
struct FormatError : Error {
    using Error::Error;
};

} // namespace repstrata

#pragma once

#include <stdexcept>
#include <string>

namespace ffgeom {

// Constructor arguments outside the supported field family.
struct InvalidField : std::invalid_argument {
    explicit InvalidField(const std::string& what) : std::invalid_argument(what) {}
};

// Parameter combination the engine does not implement (e.g. extension degree > 2).
struct Unsupported : std::invalid_argument {
    explicit Unsupported(const std::string& what) : std::invalid_argument(what) {}
};

// Value outside an operation's mathematical domain (division by zero, bad index).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Operands whose shapes/contexts do not match (mixed fields, wrong dimension).
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Requested computation exceeds the configured enumeration budget.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// A set builder's hypotheses cannot be satisfied with the given parameters.
struct ConstructionError : std::runtime_error {
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (point sets, cached groups).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ffgeom

#pragma once

#include <stdexcept>
#include <string>

namespace gsphere {

// Every library failure derives from Error and carries a short machine-readable kind,
// which the CLI copies into its error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Malformed graph data: duplicate ids, loops, dangling endpoints, absent vertices.
class GraphError : public Error {
public:
    explicit GraphError(const std::string& message) : Error("graph_error", message) {}
};

// An operation was called on an input outside its domain (not a sphere, wrong degree, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message)
        : Error("precondition_violated", message) {}
};

// A search cap was hit. Recursive recognition reports this as a verdict instead.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& message) : Error("budget_exceeded", message) {}
};

// The input claims a structure it does not have, e.g. a simplex dual that is not a cycle.
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& message) : Error("structural_error", message) {}
};

class FormatError : public Error {
public:
    explicit FormatError(const std::string& message) : Error("format_error", message) {}
};

} // namespace gsphere

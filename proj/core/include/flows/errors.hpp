#pragma once

#include <stdexcept>
#include <string>

namespace flows {

/// A graph or flow document failed to parse (bad JSON, bad schema, or a
/// value that violates the document rules). The message names the
/// offending token.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A parsed flow document does not fit the graph it is checked against
/// (unknown vertex, missing layer entry, wrong arity). Distinct from a
/// flow that is well formed but violates the flow conditions.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force routine was asked to run on an instance larger than its
/// size guard allows.
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A brute-force routine observed its cancel token mid-search.
class OracleCancelled : public std::runtime_error {
public:
    OracleCancelled() : std::runtime_error("oracle search cancelled") {}
};

}  // namespace flows

#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace tridom {

/// Malformed input text (digraph or tournament files, bad headers).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation that requires acyclic input received a cyclic digraph.
struct CyclicInputError : std::invalid_argument {
    explicit CyclicInputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The tournament construction hit a triple whose induced sub-digraph is
/// cyclic (the input digraph has girth <= 3). Carries the first offending
/// triple in colex order.
struct CyclicTripleError : std::invalid_argument {
    explicit CyclicTripleError(const std::array<int, 3>& t)
        : std::invalid_argument("triple {" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                                "," + std::to_string(t[2]) +
                                "} induces a directed cycle (girth <= 3)"),
          triple(t) {}
    std::array<int, 3> triple;
};

/// Rejection sampling gave up (e.g. a girth filter that the parameters
/// cannot satisfy).
struct RetriesExhaustedError : std::runtime_error {
    explicit RetriesExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tridom

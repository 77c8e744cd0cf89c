#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace starcluster {

/** Base class for every error thrown by this library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An edge with no vertices was supplied (edges must be non-empty).
class EmptyEdgeError : public Error {
 public:
  using Error::Error;
};

/// A size parameter (cycle length, path length, arity, density, ...) is out of range.
class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

/// A tight-path edge required by an expansion is absent from the hypergraph.
class MissingPathEdgeError : public Error {
 public:
  using Error::Error;
};

/// A vertex id was referenced that the hypergraph does not contain.
class UnknownVertexError : public Error {
 public:
  explicit UnknownVertexError(int vertex)
      : Error("unknown vertex id " + std::to_string(vertex)), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// An edge was referenced that the hypergraph does not contain.
class UnknownEdgeError : public Error {
 public:
  using Error::Error;
};

/// A 1-based index into an edge list is out of range.
class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// A claimed Berge cycle fails validation against its hypergraph.
class NotACycleError : public Error {
 public:
  using Error::Error;
};

/// An operation restricted to graphs received an edge of size != 2.
class NotAGraphError : public Error {
 public:
  using Error::Error;
};

/// A simplex was passed that is not a face of the complex at hand.
class NotAFaceError : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard (vertex-count cap) was exceeded.
class TooLargeError : public Error {
 public:
  TooLargeError(std::size_t vertex_count, std::size_t guard)
      : Error("vertex count " + std::to_string(vertex_count) +
              " exceeds enumeration guard " + std::to_string(guard)),
        vertex_count_(vertex_count),
        guard_(guard) {}
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t guard() const noexcept { return guard_; }

 private:
  std::size_t vertex_count_;
  std::size_t guard_;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A backtracking search hit its node budget. Signals "unknown", never a wrong
/// answer: the caller may retry with a larger budget.
class SearchBudgetExceededError : public Error {
 public:
  explicit SearchBudgetExceededError(std::uint64_t nodes_expanded)
      : Error("search node budget exhausted after " +
              std::to_string(nodes_expanded) + " nodes"),
        nodes_expanded_(nodes_expanded) {}
  std::uint64_t nodes_expanded() const noexcept { return nodes_expanded_; }

 private:
  std::uint64_t nodes_expanded_;
};

/// The tuple cap of the reduction's union enumeration was exceeded.
class CombinationBudgetExceededError : public Error {
 public:
  explicit CombinationBudgetExceededError(std::uint64_t tuples_visited)
      : Error("combination budget exhausted after " +
              std::to_string(tuples_visited) + " tuples"),
        tuples_visited_(tuples_visited) {}
  std::uint64_t tuples_visited() const noexcept { return tuples_visited_; }

 private:
  std::uint64_t tuples_visited_;
};

}  // namespace starcluster

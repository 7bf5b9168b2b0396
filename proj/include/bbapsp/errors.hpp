#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bbapsp {

using VertexId = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller-supplied data or parameters are unusable.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A directed cycle where an acyclic graph was required. The witness lists
// the cycle's vertices in arc order, starting at its smallest vertex; the
// closing arc back to the first vertex is implied.
class CycleError : public Error {
 public:
  CycleError(const std::string& what, std::vector<VertexId> witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<VertexId>& witness() const noexcept { return witness_; }

 private:
  std::vector<VertexId> witness_;
};

class NegativeCycleError : public CycleError {
 public:
  using CycleError::CycleError;
};

// An internal invariant was broken: an engine returned an inconsistent tree,
// a list lost its ordering, or a cursor event named the wrong arc.
class InternalFault : public Error {
 public:
  using Error::Error;
};

// Vertex ids are 0-based in the library and 1-based in files and messages.
std::string format_cycle(const std::vector<VertexId>& cycle);

}  // namespace bbapsp

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hcst {

// Malformed OR-Library input. `offset` is the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Some terminal cannot be reached from the growing tree within the hop limit.
class InfeasibleInstance : public std::runtime_error {
 public:
  InfeasibleInstance(const std::string& what, unsigned terminal)
      : std::runtime_error(what), terminal_(terminal) {}
  unsigned terminal() const noexcept { return terminal_; }

 private:
  unsigned terminal_;
};

// An edge set that should be a rooted tree is not one.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReachable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A heuristic produced output that violates its own postcondition.
class SolverPostconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PairingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hcst

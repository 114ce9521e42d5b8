#pragma once

#include <stdexcept>

namespace oddcolor {

// Malformed input: out-of-range ids, self-loops, duplicate edges, unparsable files.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A JSON artifact does not have the expected shape.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant broke. Always a bug, never a property of the input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exhaustive search refused to start, or ran past its node limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An emitted artifact was rejected by its own verifier.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddcolor

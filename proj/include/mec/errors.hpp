#pragma once

#include <stdexcept>
#include <string>

namespace mec {

/// Malformed or out-of-contract input (bad vertex, non-chordal component, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input graph (or one of its chain components) is not chordal or not connected
/// where a UCCG is required.
class InvalidGraphError : public InputError {
 public:
  using InputError::InputError;
};

/// An internal invariant failed; this indicates a bug, not bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mec

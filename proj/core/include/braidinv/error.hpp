#pragma once

#include <stdexcept>
#include <string>

namespace braidinv {

// Base for every error the library raises on bad input or a failed
// precondition. Programming errors (broken internal invariants) use
// std::logic_error instead.
class BraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: braid words, cycle notation, include files.
class ParseError : public BraidError {
 public:
  using BraidError::BraidError;
};

// The input is well-formed but outside the domain of the operation,
// e.g. a Fiedler polynomial requested for a braid whose closure is a link.
class DomainError : public BraidError {
 public:
  using BraidError::BraidError;
};

// A braid move whose local pattern is not present at the requested place.
class MoveError : public BraidError {
 public:
  using BraidError::BraidError;
};

}  // namespace braidinv

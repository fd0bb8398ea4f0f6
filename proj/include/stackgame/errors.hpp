#pragma once

#include <stdexcept>

namespace stackgame {

/// Base class for every error raised by the library.
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed numbers, documents or command-line values.
class ParseError : public GameError {
 public:
  using GameError::GameError;
};

/// A constructed object would violate one of its invariants
/// (bad probability vector, zero attacker omega, index out of range, ...).
class ValidationError : public GameError {
 public:
  using GameError::GameError;
};

/// The instance fails a feasibility requirement of the requested operation.
class InfeasibleError : public GameError {
 public:
  using GameError::GameError;
};

/// A geometric or algebraic problem has no solution set
/// (empty anchor interval, hyperplane missing the simplex, singular system).
class DegenerateError : public GameError {
 public:
  using GameError::GameError;
};

/// A brute-force enumeration would exceed the configured cap.
class GridCapError : public GameError {
 public:
  using GameError::GameError;
};

}  // namespace stackgame

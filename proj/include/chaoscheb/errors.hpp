#pragma once

#include <stdexcept>
#include <string>

namespace chaoscheb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero and similar inputs with no meaningful result.
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain (|v| > 1 for arccos, k = 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The semi-group identity no longer holds at the working precision, or a
// value needed as a divisor vanished within epsilon.
class PrecisionBreakdown : public Error {
 public:
  using Error::Error;
};

// Two values produced under different PrecisionConfigs were combined.
class PrecisionMismatch : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class IncompleteTranscript : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace chaoscheb

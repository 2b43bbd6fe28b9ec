#pragma once

#include <stdexcept>
#include <string>

namespace stralg {

// Malformed input text: algebra files, word syntax, unknown names.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ErrorCode {
  NotAString,
  NotQuasiBand,
  NotBand,
  TrivialWord,
  DimensionMismatch,
  SameModuleMismatch,
  NotQuadratic,
  NotAComponent,
  BadDecomposition,
  InvalidWitness,
  ZeroParameter,
  SpecMismatch,
  InvalidAlgebra,
};

const char* to_string(ErrorCode code) noexcept;

// A well-formed request whose mathematical precondition does not hold.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Broken internal consistency (a realized module violating a relation, etc).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stralg

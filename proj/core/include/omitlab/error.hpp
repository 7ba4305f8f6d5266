#pragma once

#include <stdexcept>
#include <string>

namespace omitlab {

// Every failure raised by the library derives from Error. The CLI maps the
// concrete type onto a process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad parameters, out-of-range vertex).
class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed text input; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A search exceeded its node-expansion budget. Never carries a partial answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A self-verification step found an invariant violation in produced output.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// A randomized construction gave up after its retry budget.
class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& what, std::size_t level_reached)
      : Error(what), level_(level_reached) {}
  std::size_t level_reached() const noexcept { return level_; }

 private:
  std::size_t level_;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

// Iterative solver failed to converge; carries the last off-diagonal residual.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class UnsupportedModulus : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace omitlab

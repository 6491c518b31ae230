#pragma once

#include <stdexcept>
#include <string>

namespace tangenttab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct DivisionByZero : Error {
  using Error::Error;
};

// A normalization coefficient f_d^(b) the computation needs is not in the table.
struct UnknownNormalization : Error {
  UnknownNormalization(int d, int b)
      : Error("unknown normalization f_" + std::to_string(d) + "^(" + std::to_string(b) + ")"),
        degree(d),
        order(b) {}
  int degree;
  int order;
};

struct ZeroNormalization : Error {
  using Error::Error;
};

// Engine output violates an integrality property; only a wrong f/K table can cause it.
struct CalibrationMismatch : Error {
  using Error::Error;
};

struct NotReducible : Error {
  using Error::Error;
};

struct UnsupportedOrder : Error {
  using Error::Error;
};

struct ProfileMismatch : Error {
  using Error::Error;
};

struct NotEvaluable : Error {
  using Error::Error;
};

struct DegenerateConfiguration : Error {
  using Error::Error;
};

struct IdenticallyZeroEliminant : Error {
  using Error::Error;
};

struct ExtraneousFactorAmbiguity : Error {
  using Error::Error;
};

}  // namespace tangenttab

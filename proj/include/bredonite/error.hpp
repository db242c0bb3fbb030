#pragma once

#include <stdexcept>
#include <string>

namespace bredonite {

// Domain errors. The CLI maps UsageError to exit code 2 and every other
// Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: group specs, builder specs, complex JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid objects (non-subgroups, bad complexes, bad morphisms).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Broken algebraic preconditions: d∘d ≠ 0, non-integral back-substitution,
// sequences that are not short exact.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

// Unknown theory names or suite names given on the command line.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace bredonite

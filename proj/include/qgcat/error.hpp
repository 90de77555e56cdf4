#pragma once

#include <stdexcept>
#include <string>

namespace qgcat {

// Malformed text input (words, scalars, spec files, polynomials).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands whose shapes, dimensions or moduli do not fit together.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested word or operation lies outside the cutoffs a table was built with.
class CutoffError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Inputs that violate an operation's hypotheses (singular frame, missing scalar c, ...).
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qgcat

#pragma once

#include <stdexcept>
#include <string>

namespace pivotlab {

// Operand sizes disagree (e.g. adding functions over different n).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Variable or vertex index outside [0, n).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NotAnEdgeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// x_u x_v is not a term of p, or it is a multiplying term of p - x_u x_v.
class InadmissibleEdgeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested computation exceeds the configured size ceiling.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pivotlab

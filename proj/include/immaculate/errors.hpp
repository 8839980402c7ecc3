#pragma once

#include <stdexcept>
#include <string>

namespace nsym {

/// Malformed textual input (composition syntax, partition syntax).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inputs whose shapes do not fit together: unequal lengths, a
/// non-partition where a partition is required, inner shape not contained
/// in the outer shape.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested matrix dimension exceeds the exact-expansion cap.
class DimensionError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Integer coefficient arithmetic left the representable range.
class CoefficientOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace nsym

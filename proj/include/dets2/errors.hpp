#pragma once

#include <stdexcept>

namespace dets2 {

// Invalid scalar construction or parse (zero denominator, malformed "p/q").
struct invalid_scalar : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Matrix dimension violation (non-square determinant, size mismatch).
struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A lambda vector handed to reconstruction that does not solve the system.
struct invalid_witness : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Broken internal assumption, e.g. a fraction-free division with remainder.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace dets2

#pragma once

#include <stdexcept>
#include <string>

namespace spinmod {

/// Malformed input object (index out of range, bad leg map, wrong vector length).
class StructuralError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request outside the enumerated (g, n) window.
class WindowError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Operation requires a nonempty spin moduli space.
class EmptinessError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Text/JSON document could not be decoded.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace spinmod

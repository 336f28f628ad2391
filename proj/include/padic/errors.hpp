#pragma once

#include <stdexcept>
#include <string>

namespace padic {

/// Malformed textual input (scalars, norm values, lattice files).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// A mathematical precondition does not hold: singular matrix, dependent
/// basis, incompatible dimensions, division by zero.
class MathError : public std::domain_error {
 public:
  explicit MathError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace padic

#pragma once

#include <stdexcept>
#include <string>

namespace phant {

/// Malformed input: dimension mismatch, ill-defined morphism, bad manifest.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must hold failed to hold. Always a defect.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace phant

#pragma once

#include <stdexcept>
#include <string>

namespace legspec {

/// Malformed input: bad files, dimension mismatches, zero classes where a
/// nonzero class is required.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is well-formed but the model does not support it (for example
/// product structure on a complex without one, or a selector over Q).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace legspec

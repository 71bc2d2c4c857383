#pragma once

#include <stdexcept>
#include <string>

namespace engel {

// Raised when a numerical procedure cannot meet its contract (non-convergent
// quadrature, indefinite spectrum, ...). The message carries the diagnostic.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace engel

#pragma once

#include <stdexcept>

namespace rqnn {

// A state vector failed its normalization check.
struct InvalidState : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested construction method cannot produce the object.
struct UnsupportedMethod : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rejection sampling exhausted its retry budget.
struct SamplingFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A fitted amplitude does not fit into the arccos encoding for the given R.
struct AmplitudeOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rqnn

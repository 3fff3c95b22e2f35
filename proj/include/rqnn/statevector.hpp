#pragma once

#include <array>
#include <vector>

#include "rqnn/gates.hpp"

namespace rqnn {

// Dense state vector over the padded register.
struct StateVector {
  std::vector<cdouble> amps;

  std::size_t dim() const { return amps.size(); }
  double norm_sq() const;

  static StateVector basis0(std::size_t dim);
};

// Probabilities of the four measurement outcomes, i.e. total weight of the
// amplitude indices congruent to 0..3 mod 4 (the two low-order qubits of the
// unit blocks). Throws InvalidState if |norm - 1| > 1e-9.
std::array<double, 4> measure_class_probs(const StateVector& state);

}  // namespace rqnn

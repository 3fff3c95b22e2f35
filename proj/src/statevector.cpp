#include "rqnn/statevector.hpp"

#include <cmath>
#include <string>

#include "rqnn/errors.hpp"

namespace rqnn {

double StateVector::norm_sq() const {
  double s = 0.0;
  for (const cdouble& a : amps) s += std::norm(a);
  return s;
}

StateVector StateVector::basis0(std::size_t dim) {
  StateVector state;
  state.amps.assign(dim, cdouble(0.0, 0.0));
  state.amps[0] = 1.0;
  return state;
}

std::array<double, 4> measure_class_probs(const StateVector& state) {
  const double nrm = state.norm_sq();
  if (std::abs(nrm - 1.0) > 1e-9)
    throw InvalidState("measure_class_probs: state norm^2 = " + std::to_string(nrm));
  std::array<double, 4> probs{0.0, 0.0, 0.0, 0.0};
  for (std::size_t k = 0; k < state.amps.size(); ++k)
    probs[k % 4] += std::norm(state.amps[k]);
  return probs;
}

}  // namespace rqnn

#include "rqnn/params.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rqnn {

void CircuitParams::validate() const {
  if (units.empty()) throw std::invalid_argument("CircuitParams: no units");
  if (!(R > 0.0) || !std::isfinite(R))
    throw std::invalid_argument("CircuitParams: R must be positive and finite");
  const std::size_t d = units[0].a.size();
  for (const UnitParams& u : units) {
    if (u.a.size() != d)
      throw std::invalid_argument("CircuitParams: inconsistent weight lengths");
    for (double w : u.a)
      if (!std::isfinite(w)) throw std::invalid_argument("CircuitParams: non-finite weight");
    if (!std::isfinite(u.b)) throw std::invalid_argument("CircuitParams: non-finite offset");
    if (!std::isfinite(u.gamma) || u.gamma < 0.0 || u.gamma > 2.0 * std::numbers::pi)
      throw std::invalid_argument("CircuitParams: gamma outside [0, 2pi]");
  }
}

std::size_t padded_dim(int n) {
  if (n < 1) throw std::invalid_argument("padded_dim: n must be >= 1");
  std::size_t dim = 4;
  while (dim < 4 * static_cast<std::size_t>(n)) dim *= 2;
  return dim;
}

int padding_blocks(int n) {
  return static_cast<int>(padded_dim(n) / 4) - n;
}

int register_qubits(int n) {
  std::size_t dim = padded_dim(n);
  int q = 0;
  while (dim > 1) {
    dim /= 2;
    ++q;
  }
  return q;
}

void ThetaBundle::validate() const {
  if (circuits.empty()) throw std::invalid_argument("ThetaBundle: no circuits");
  if (state_dim <= 0 || input_dim <= 0)
    throw std::invalid_argument("ThetaBundle: state_dim and input_dim must be positive");
  if (static_cast<int>(circuits.size()) != state_dim)
    throw std::invalid_argument("ThetaBundle: need one circuit per state component");
  const int n = circuits[0].n();
  const double R = circuits[0].R;
  for (const CircuitParams& c : circuits) {
    c.validate();
    if (c.n() != n) throw std::invalid_argument("ThetaBundle: circuits disagree on n");
    if (c.R != R) throw std::invalid_argument("ThetaBundle: circuits disagree on R");
    if (c.dim() != state_dim + input_dim)
      throw std::invalid_argument("ThetaBundle: weight length != state_dim + input_dim");
  }
}

}  // namespace rqnn

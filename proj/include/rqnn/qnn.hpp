#pragma once

#include <vector>

#include "rqnn/linalg.hpp"
#include "rqnn/params.hpp"

namespace rqnn {

enum class EvalPath { closed_form, dense };

// One component of the QNN state map,
//   F(x, z) = R (1 - 2 (P1 + P2)) = (R/n) sum_i cos(gamma^i) cos(b^i + a^i.(x,z)).
// |result| <= R for every input. The dense path re-derives the probabilities
// by full state-vector simulation and is the reference oracle (n <= 64).
double eval_component(const CircuitParams& circ, const std::vector<double>& x,
                      const std::vector<double>& z,
                      EvalPath path = EvalPath::closed_form);

// All N components of the bundle at (x, z).
std::vector<double> eval_state_map(const ThetaBundle& theta, const std::vector<double>& x,
                                   const std::vector<double>& z);

// Gradient with respect to the joint input (x, z), length N + d:
//   d_k F = -(R/n) sum_i a^i_k cos(gamma^i) sin(b^i + a^i.(x,z)).
std::vector<double> eval_gradient(const CircuitParams& circ, const std::vector<double>& x,
                                  const std::vector<double>& z);

// N x N Jacobian of the state map with respect to x (column k = d/dx_k).
Matrix jacobian_x(const ThetaBundle& theta, const std::vector<double>& x,
                  const std::vector<double>& z);

struct SpectralNormResult {
  double value = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Largest singular value via power iteration on A^T A: at most 100
// iterations, relative tolerance 1e-10. A non-converged run returns the
// last iterate with converged = false instead of throwing.
SpectralNormResult spectral_norm(const Matrix& m);

}  // namespace rqnn

#include "rqnn/qnn.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "rqnn/circuit.hpp"
#include "rqnn/gates.hpp"

namespace rqnn {

double eval_component(const CircuitParams& circ, const std::vector<double>& x,
                      const std::vector<double>& z, EvalPath path) {
  double value;
  if (path == EvalPath::dense) {
    const std::array<double, 4> p = class_probs_dense(circ, x, z);
    value = circ.R * (1.0 - 2.0 * (p[1] + p[2]));
  } else {
    circ.validate();
    if (static_cast<std::size_t>(circ.dim()) != x.size() + z.size())
      throw std::invalid_argument("eval_component: weight length != state dim + input dim");
    double s = 0.0;
    for (const UnitParams& unit : circ.units)
      s += std::cos(unit.gamma) * std::cos(-encoding_angle(unit.a, unit.b, x, z));
    value = circ.R * s / static_cast<double>(circ.n());
  }
  assert(std::abs(value) <= circ.R * (1.0 + 1e-12));
  return value;
}

std::vector<double> eval_state_map(const ThetaBundle& theta, const std::vector<double>& x,
                                   const std::vector<double>& z) {
  theta.validate();
  std::vector<double> out(theta.circuits.size());
  for (std::size_t j = 0; j < theta.circuits.size(); ++j)
    out[j] = eval_component(theta.circuits[j], x, z);
  return out;
}

std::vector<double> eval_gradient(const CircuitParams& circ, const std::vector<double>& x,
                                  const std::vector<double>& z) {
  circ.validate();
  if (static_cast<std::size_t>(circ.dim()) != x.size() + z.size())
    throw std::invalid_argument("eval_gradient: weight length != state dim + input dim");
  std::vector<double> grad(circ.dim(), 0.0);
  for (const UnitParams& unit : circ.units) {
    const double s = std::cos(unit.gamma) * std::sin(-encoding_angle(unit.a, unit.b, x, z));
    for (std::size_t k = 0; k < unit.a.size(); ++k) grad[k] -= unit.a[k] * s;
  }
  const double scale = circ.R / static_cast<double>(circ.n());
  for (double& g : grad) g *= scale;
  return grad;
}

Matrix jacobian_x(const ThetaBundle& theta, const std::vector<double>& x,
                  const std::vector<double>& z) {
  theta.validate();
  const std::size_t n_comp = theta.circuits.size();
  Matrix jac(n_comp, static_cast<std::size_t>(theta.state_dim));
  for (std::size_t j = 0; j < n_comp; ++j) {
    const std::vector<double> g = eval_gradient(theta.circuits[j], x, z);
    for (std::size_t k = 0; k < static_cast<std::size_t>(theta.state_dim); ++k)
      jac(j, k) = g[k];
  }
  return jac;
}

SpectralNormResult spectral_norm(const Matrix& m) {
  if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("spectral_norm: empty matrix");
  SpectralNormResult res;
  if (m.rows == 1 && m.cols == 1) {
    res.value = std::abs(m(0, 0));
    res.converged = true;
    res.iterations = 0;
    return res;
  }
  // Power iteration on A^T A from a fixed deterministic start.
  std::vector<double> v(m.cols);
  for (std::size_t k = 0; k < m.cols; ++k)
    v[k] = 1.0 + 1e-3 * static_cast<double>(k % 7);
  double nv = norm2(v);
  for (double& c : v) c /= nv;
  const Matrix mt = transpose(m);
  double sigma_prev = 0.0;
  for (int it = 1; it <= 100; ++it) {
    std::vector<double> w = matvec(mt, matvec(m, v));
    const double nw = norm2(w);
    if (nw == 0.0) {  // v in the null space; the matrix may still be zero
      res.value = 0.0;
      res.converged = true;
      res.iterations = it;
      return res;
    }
    for (double& c : w) c /= nw;
    const double sigma = std::sqrt(nw);  // ||A^T A v|| -> sigma_max^2
    res.iterations = it;
    if (std::abs(sigma - sigma_prev) <= 1e-10 * std::max(1.0, sigma)) {
      res.value = sigma;
      res.converged = true;
      return res;
    }
    sigma_prev = sigma;
    v = std::move(w);
  }
  res.value = sigma_prev;
  res.converged = false;
  return res;
}

}  // namespace rqnn

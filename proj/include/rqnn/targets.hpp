#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rqnn/rng.hpp"

namespace rqnn {

// A scalar target F: R^dim -> R together with the analytic descriptors of
// its Fourier transform Fhat (convention Fhat(xi) = ∫ exp(-2 pi i u.xi) F(u) du)
// that the constructive sampler and the rate constants need. Built-in
// factories below declare everything in closed form; numerical Fourier
// transforms of arbitrary functions are out of scope.
struct TargetFunction {
  std::string name;
  int dim = 0;

  std::function<double(const std::vector<double>&)> value;
  std::function<std::vector<double>(const std::vector<double>&)> grad;

  double fhat_l1 = 0.0;   // ∫ |Fhat|
  double mass_re = 0.0;   // ∫ |Re Fhat|
  double mass_im = 0.0;   // ∫ |Im Fhat|

  // Per-coordinate second moments ∫ xi_k^2 |Fhat| and the radial moments
  // I_q = ∫ ||xi||^q |Fhat| for q in {2, 4}.
  std::vector<double> coord_m2;
  double i2 = 0.0;
  double i4 = 0.0;

  // Samplers for the normalized densities |Re Fhat| / mass_re and
  // |Im Fhat| / mass_im; null when the corresponding part vanishes.
  std::function<std::vector<double>(Rng&)> sample_re;
  std::function<std::vector<double>(Rng&)> sample_im;

  // Pointwise signs of Re Fhat and Im Fhat (-1, 0, +1).
  std::function<int(const std::vector<double>&)> sign_re;
  std::function<int(const std::vector<double>&)> sign_im;

  // Pointwise Fourier data for quadrature cross-checks.
  std::function<double(const std::vector<double>&)> fhat_re;
  std::function<double(const std::vector<double>&)> fhat_im;

  // Fraction of the Bernoulli branch variable Z landing on the real part:
  // mass_re / (mass_re + mass_im).
  double p_real() const;
  // I_q for q in {2, 4}; other q throw std::invalid_argument.
  double moment(int q) const;
};

// A e^{-pi ||u/sigma||^2}. Fhat = A sigma^dim e^{-pi sigma^2 ||xi||^2}, real
// and positive; for A = sigma = 1 this is the self-dual unit Gaussian with
// ||Fhat||_1 = 1.
TargetFunction gaussian_target(int dim, double amplitude, double sigma);

// A e^{-pi ||(u - c)/sigma||^2}. Fhat picks up the phase e^{-2 pi i c.xi},
// so both branch samplers and the Bernoulli split are exercised.
TargetFunction shifted_gaussian_target(int dim, double amplitude, double sigma,
                                       const std::vector<double>& shift);

// A e^{-pi ||u/sigma||^2} cos(2 pi omega.u). Fhat is the symmetric mixture
// of two displaced Gaussians, real and nonnegative.
TargetFunction cosine_gaussian_target(int dim, double amplitude, double sigma,
                                      const std::vector<double>& freq);

// Joint L2 approximation constant
//   C = ||Fhat||_1^2 + 4 pi^2 ||Fhat||_1 sum_k ∫ xi_k^2 |Fhat|;
// the mean squared joint error of an n-unit construction is <= C/n and the
// randomized-selection variant carries 3 C.
double barron_l2_constant(const TargetFunction& target);
double barron_l2_constant_randomized(const TargetFunction& target);

// Sup-norm constant on the centered box of half-width M:
//   2 (pi+1) w + (8 pi M + 4 pi^2) sqrt(dim) sqrt(w I2) + 16 M pi^2 dim sqrt(w I4)
// with w = ||Fhat||_1; the sup error of an n-unit construction obeys
// <= Cinf / sqrt(n).
double barron_sup_constant(const TargetFunction& target, double box_halfwidth);

// E|cos(2 pi Y)| and E|sin(2 pi Y)| for Y ~ N(0, s2), by the Fourier series
// of |cos| / |sin| (terms decay like exp(-8 pi^2 k^2 s2)). Exposed for the
// shifted-Gaussian mass computations and their quadrature cross-checks.
double folded_cos_mean(double s2);
double folded_sin_mean(double s2);

}  // namespace rqnn

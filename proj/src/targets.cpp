#include "rqnn/targets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rqnn/errors.hpp"

namespace rqnn {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("target dimension must be >= 1");
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

double sq_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

double dot_v(const std::vector<double>& u, const std::vector<double>& v) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

}  // namespace

double TargetFunction::p_real() const {
  const double total = mass_re + mass_im;
  if (total <= 0.0) throw std::invalid_argument("target has zero Fourier mass");
  return mass_re / total;
}

double TargetFunction::moment(int q) const {
  if (q == 2) return i2;
  if (q == 4) return i4;
  throw std::invalid_argument("moment(q) declared only for q in {2, 4}");
}

double folded_cos_mean(double s2) {
  if (s2 < 0.0) throw std::invalid_argument("folded_cos_mean: negative variance");
  // |cos t| stays on its quadratic branch for tiny t; avoids the slowly
  // truncating series regime.
  if (s2 < 1e-7) return 1.0 - 2.0 * kPi * kPi * s2;
  double sum = 2.0 / kPi;
  double sign = 1.0;
  for (int k = 1; k <= 5000; ++k) {
    const double term = std::exp(-8.0 * kPi * kPi * s2 * k * k) / (4.0 * k * k - 1.0);
    sum += sign * (4.0 / kPi) * term;
    sign = -sign;
    if (term < 1e-16) break;
  }
  return sum;
}

double folded_sin_mean(double s2) {
  if (s2 < 0.0) throw std::invalid_argument("folded_sin_mean: negative variance");
  if (s2 < 1e-7) return 2.0 * std::sqrt(2.0 * kPi * s2);  // E|2 pi Y| = 2 sqrt(2 pi s2)
  double sum = 2.0 / kPi;
  for (int k = 1; k <= 5000; ++k) {
    const double term = std::exp(-8.0 * kPi * kPi * s2 * k * k) / (4.0 * k * k - 1.0);
    sum -= (4.0 / kPi) * term;
    if (term < 1e-16) break;
  }
  return sum;
}

TargetFunction gaussian_target(int dim, double amplitude, double sigma) {
  require_dim(dim);
  require_positive(amplitude, "amplitude");
  require_positive(sigma, "sigma");
  const double var = 1.0 / (2.0 * kPi * sigma * sigma);  // per-coordinate variance of |Fhat|
  TargetFunction t;
  t.name = "gaussian";
  t.dim = dim;
  t.value = [amplitude, sigma](const std::vector<double>& u) {
    return amplitude * std::exp(-kPi * sq_norm(u) / (sigma * sigma));
  };
  t.grad = [amplitude, sigma](const std::vector<double>& u) {
    const double f = amplitude * std::exp(-kPi * sq_norm(u) / (sigma * sigma));
    std::vector<double> g(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
      g[k] = -2.0 * kPi * u[k] / (sigma * sigma) * f;
    return g;
  };
  t.fhat_l1 = amplitude;
  t.mass_re = amplitude;
  t.mass_im = 0.0;
  t.coord_m2.assign(dim, amplitude * var);
  t.i2 = amplitude * dim * var;
  t.i4 = amplitude * dim * (dim + 2.0) * var * var;
  t.sample_re = [dim, var](Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(var));
    std::vector<double> xi(dim);
    for (double& c : xi) c = normal(rng);
    return xi;
  };
  t.sign_re = [](const std::vector<double>&) { return 1; };
  t.sign_im = [](const std::vector<double>&) { return 0; };
  t.fhat_re = [amplitude, sigma, dim](const std::vector<double>& xi) {
    return amplitude * std::pow(sigma, dim) * std::exp(-kPi * sigma * sigma * sq_norm(xi));
  };
  t.fhat_im = [](const std::vector<double>&) { return 0.0; };
  return t;
}

TargetFunction shifted_gaussian_target(int dim, double amplitude, double sigma,
                                       const std::vector<double>& shift) {
  require_dim(dim);
  require_positive(amplitude, "amplitude");
  require_positive(sigma, "sigma");
  if (static_cast<int>(shift.size()) != dim)
    throw std::invalid_argument("shift length != dim");
  const double var = 1.0 / (2.0 * kPi * sigma * sigma);
  const double s2 = var * sq_norm(shift);  // variance of shift.xi under |Fhat|
  TargetFunction t;
  t.name = "shifted-gaussian";
  t.dim = dim;
  t.value = [amplitude, sigma, shift](const std::vector<double>& u) {
    double q = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const double w = u[k] - shift[k];
      q += w * w;
    }
    return amplitude * std::exp(-kPi * q / (sigma * sigma));
  };
  t.grad = [amplitude, sigma, shift](const std::vector<double>& u) {
    double q = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
      const double w = u[k] - shift[k];
      q += w * w;
    }
    const double f = amplitude * std::exp(-kPi * q / (sigma * sigma));
    std::vector<double> g(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
      g[k] = -2.0 * kPi * (u[k] - shift[k]) / (sigma * sigma) * f;
    return g;
  };
  t.fhat_l1 = amplitude;  // |Fhat| is the centered modulus; the phase drops out
  t.mass_re = amplitude * folded_cos_mean(s2);
  t.mass_im = amplitude * folded_sin_mean(s2);
  t.coord_m2.assign(dim, amplitude * var);
  t.i2 = amplitude * dim * var;
  t.i4 = amplitude * dim * (dim + 2.0) * var * var;
  // Exact rejection samplers: propose from |Fhat| (a Gaussian), accept with
  // probability |cos| resp. |sin| of the phase.
  t.sample_re = [dim, var, shift](Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(var));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
      std::vector<double> xi(dim);
      for (double& c : xi) c = normal(rng);
      if (unif(rng) <= std::abs(std::cos(2.0 * kPi * dot_v(shift, xi)))) return xi;
    }
    throw SamplingFailure("shifted-gaussian real-branch rejection stalled");
  };
  t.sample_im = [dim, var, shift](Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(var));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
      std::vector<double> xi(dim);
      for (double& c : xi) c = normal(rng);
      if (unif(rng) <= std::abs(std::sin(2.0 * kPi * dot_v(shift, xi)))) return xi;
    }
    throw SamplingFailure("shifted-gaussian imaginary-branch rejection stalled");
  };
  t.sign_re = [shift](const std::vector<double>& xi) {
    const double c = std::cos(2.0 * kPi * dot_v(shift, xi));
    return c > 0.0 ? 1 : (c < 0.0 ? -1 : 0);
  };
  t.sign_im = [shift](const std::vector<double>& xi) {
    // Im Fhat = -|Fhat|-profile * sin(2 pi shift.xi)
    const double s = -std::sin(2.0 * kPi * dot_v(shift, xi));
    return s > 0.0 ? 1 : (s < 0.0 ? -1 : 0);
  };
  t.fhat_re = [amplitude, sigma, dim, shift](const std::vector<double>& xi) {
    return amplitude * std::pow(sigma, dim) * std::exp(-kPi * sigma * sigma * sq_norm(xi)) *
           std::cos(2.0 * kPi * dot_v(shift, xi));
  };
  t.fhat_im = [amplitude, sigma, dim, shift](const std::vector<double>& xi) {
    return -amplitude * std::pow(sigma, dim) * std::exp(-kPi * sigma * sigma * sq_norm(xi)) *
           std::sin(2.0 * kPi * dot_v(shift, xi));
  };
  return t;
}

TargetFunction cosine_gaussian_target(int dim, double amplitude, double sigma,
                                      const std::vector<double>& freq) {
  require_dim(dim);
  require_positive(amplitude, "amplitude");
  require_positive(sigma, "sigma");
  if (static_cast<int>(freq.size()) != dim)
    throw std::invalid_argument("frequency length != dim");
  const double var = 1.0 / (2.0 * kPi * sigma * sigma);
  const double w2 = sq_norm(freq);
  TargetFunction t;
  t.name = "cosine-gaussian";
  t.dim = dim;
  t.value = [amplitude, sigma, freq](const std::vector<double>& u) {
    return amplitude * std::exp(-kPi * sq_norm(u) / (sigma * sigma)) *
           std::cos(2.0 * kPi * dot_v(freq, u));
  };
  t.grad = [amplitude, sigma, freq](const std::vector<double>& u) {
    const double env = amplitude * std::exp(-kPi * sq_norm(u) / (sigma * sigma));
    const double phase = 2.0 * kPi * dot_v(freq, u);
    std::vector<double> g(u.size());
    for (std::size_t k = 0; k < u.size(); ++k)
      g[k] = env * (-2.0 * kPi * u[k] / (sigma * sigma) * std::cos(phase) -
                    2.0 * kPi * freq[k] * std::sin(phase));
    return g;
  };
  t.fhat_l1 = amplitude;
  t.mass_re = amplitude;
  t.mass_im = 0.0;
  t.coord_m2.resize(dim);
  for (int k = 0; k < dim; ++k) t.coord_m2[k] = amplitude * (freq[k] * freq[k] + var);
  t.i2 = amplitude * (w2 + dim * var);
  const double mean_sq = w2 + dim * var;
  t.i4 = amplitude * (mean_sq * mean_sq + 4.0 * var * w2 + 2.0 * dim * var * var);
  t.sample_re = [dim, var, freq](Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(var));
    std::bernoulli_distribution branch(0.5);
    const double s = branch(rng) ? 1.0 : -1.0;
    std::vector<double> xi(dim);
    for (int k = 0; k < dim; ++k) xi[k] = s * freq[k] + normal(rng);
    return xi;
  };
  t.sign_re = [](const std::vector<double>&) { return 1; };
  t.sign_im = [](const std::vector<double>&) { return 0; };
  t.fhat_re = [amplitude, sigma, dim, freq](const std::vector<double>& xi) {
    double qm = 0.0, qp = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double dm = xi[static_cast<std::size_t>(k)] - freq[static_cast<std::size_t>(k)];
      const double dp = xi[static_cast<std::size_t>(k)] + freq[static_cast<std::size_t>(k)];
      qm += dm * dm;
      qp += dp * dp;
    }
    const double s2 = sigma * sigma;
    return 0.5 * amplitude * std::pow(sigma, dim) *
           (std::exp(-kPi * s2 * qm) + std::exp(-kPi * s2 * qp));
  };
  t.fhat_im = [](const std::vector<double>&) { return 0.0; };
  return t;
}

double barron_l2_constant(const TargetFunction& target) {
  double m2_sum = 0.0;
  for (double m : target.coord_m2) m2_sum += m;
  return target.fhat_l1 * target.fhat_l1 + 4.0 * kPi * kPi * target.fhat_l1 * m2_sum;
}

double barron_l2_constant_randomized(const TargetFunction& target) {
  return 3.0 * barron_l2_constant(target);
}

double barron_sup_constant(const TargetFunction& target, double box_halfwidth) {
  require_positive(box_halfwidth, "box half-width");
  const double w = target.fhat_l1;
  const double dim = static_cast<double>(target.dim);
  return 2.0 * (kPi + 1.0) * w +
         (8.0 * kPi * box_halfwidth + 4.0 * kPi * kPi) * std::sqrt(dim) *
             std::sqrt(w * target.i2) +
         16.0 * box_halfwidth * kPi * kPi * dim * std::sqrt(w * target.i4);
}

}  // namespace rqnn

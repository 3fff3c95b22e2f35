#include "rqnn/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rqnn/errors.hpp"
#include "rqnn/linalg.hpp"
#include "rqnn/rng.hpp"

namespace rqnn {

namespace {

constexpr double kPi = std::numbers::pi;

CircuitParams draw_units(const TargetFunction& target, int n, double R, Rng& rng) {
  const double mass_total = target.mass_re + target.mass_im;
  std::bernoulli_distribution branch(target.p_real());
  CircuitParams circ;
  circ.R = R;
  circ.units.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const bool real_branch = branch(rng);
    std::vector<double> xi;
    int sign = 0;
    if (real_branch) {
      if (!target.sample_re)
        throw UnsupportedMethod("target '" + target.name + "' lacks a real-branch sampler");
      xi = target.sample_re(rng);
      sign = target.sign_re ? target.sign_re(xi) : 1;
    } else {
      if (!target.sample_im)
        throw UnsupportedMethod("target '" + target.name + "' lacks an imaginary-branch sampler");
      xi = target.sample_im(rng);
      sign = target.sign_im ? target.sign_im(xi) : 1;
    }
    UnitParams unit;
    unit.a.resize(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) unit.a[k] = 2.0 * kPi * xi[k];
    unit.b = real_branch ? 0.0 : 0.5 * kPi;
    const double w = mass_total * static_cast<double>(sign);
    // |w| <= R by precondition; the clamp only absorbs division roundoff.
    unit.gamma = std::acos(std::clamp(w / R, -1.0, 1.0));
    circ.units.push_back(std::move(unit));
  }
  return circ;
}

void check_draw_args(const TargetFunction& target, int n, double R) {
  if (n < 1) throw std::invalid_argument("sample_theta: n must be >= 1");
  if (target.dim < 1) throw std::invalid_argument("sample_theta: target.dim must be >= 1");
  const double mass_total = target.mass_re + target.mass_im;
  if (!(mass_total > 0.0)) throw std::invalid_argument("sample_theta: zero Fourier mass");
  if (R < mass_total)
    throw std::invalid_argument("sample_theta: R = " + std::to_string(R) +
                                " < required branch mass " + std::to_string(mass_total));
}

}  // namespace

CircuitParams sample_theta(const TargetFunction& target, int n, double R,
                           std::uint64_t seed) {
  check_draw_args(target, n, R);
  Rng rng(seed);
  return draw_units(target, n, R, rng);
}

double weight_norm_bound(const TargetFunction& target, int n, int q) {
  if (q != 2 && q != 4)
    throw std::invalid_argument("weight_norm_bound: q must be 2 or 4 (declared moments)");
  if (!(target.fhat_l1 > 0.0))
    throw std::invalid_argument("weight_norm_bound: fhat_l1 must be positive");
  return 2.0 * kPi *
         std::pow(3.0 * static_cast<double>(n) * target.moment(q) / target.fhat_l1,
                  1.0 / static_cast<double>(q));
}

SampledTheta sample_theta_bounded(const TargetFunction& target, int n, int q,
                                  double R, std::uint64_t seed) {
  check_draw_args(target, n, R);
  const double bound = weight_norm_bound(target, n, q);
  Rng rng(seed);
  constexpr int kMaxAttempts = 10000;
  std::vector<double> observed_max;  // max ||a|| per rejected set, for diagnostics
  for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    CircuitParams circ = draw_units(target, n, R, rng);
    double worst = 0.0;
    for (const UnitParams& unit : circ.units) worst = std::max(worst, norm2(unit.a));
    if (worst <= bound) return SampledTheta{std::move(circ), attempt};
    observed_max.push_back(worst);
  }
  std::sort(observed_max.begin(), observed_max.end());
  const auto quantile = [&](double p) {
    return observed_max[static_cast<std::size_t>(p * (observed_max.size() - 1))];
  };
  throw SamplingFailure("sample_theta_bounded: no set within bound " + std::to_string(bound) +
                        " after 10^4 draws; max ||a|| quantiles p50/p90/p100 = " +
                        std::to_string(quantile(0.5)) + "/" + std::to_string(quantile(0.9)) +
                        "/" + std::to_string(observed_max.back()));
}

}  // namespace rqnn

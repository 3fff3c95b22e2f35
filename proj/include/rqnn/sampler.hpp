#pragma once

#include <cstdint>

#include "rqnn/params.hpp"
#include "rqnn/targets.hpp"

namespace rqnn {

// Independent per-unit parameter draw targeting `target`:
//   Z ~ Bernoulli(p_real); U from the matching branch density;
//   a = 2 pi U, b = (pi/2)(1 - Z),
//   W = (mass_re + mass_im) * sign of the branch's Fourier part at U
//   (0 where that part vanishes); gamma = arccos(W / R).
// The single-unit estimator W cos(b + a.u) is unbiased for target(u); the
// normalizer mass_re + mass_im equals ||Fhat||_1 whenever Re Fhat and
// Im Fhat have disjoint supports (in particular for real Fhat).
// Requires R >= mass_re + mass_im so the arccos is defined.
CircuitParams sample_theta(const TargetFunction& target, int n, double R,
                           std::uint64_t seed);

struct SampledTheta {
  CircuitParams circ;
  int attempts = 1;  // whole-set draws consumed, accepted one included
};

// Same draw conditioned on the weight bound
//   ||a^i||_2 <= 2 pi (3 n I_q / ||Fhat||_1)^{1/q},  q in {2, 4}.
// Whole parameter sets are redrawn until every unit passes; the accepted
// set's draw path is identical to sample_theta's, so with no rejection the
// output equals sample_theta(target, n, R, seed). Throws SamplingFailure
// after 10^4 redraws, reporting the bound and observed ||a|| quantiles.
SampledTheta sample_theta_bounded(const TargetFunction& target, int n, int q,
                                  double R, std::uint64_t seed);

// The weight-norm bound itself: 2 pi (3 n I_q / ||Fhat||_1)^{1/q}.
double weight_norm_bound(const TargetFunction& target, int n, int q);

}  // namespace rqnn

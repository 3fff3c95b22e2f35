#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rqnn/params.hpp"
#include "rqnn/reservoir.hpp"

namespace rqnn {

// Finite-shot measurement settings. shots == 0 is the exact-mode sentinel:
// every estimator collapses to its noiseless value.
struct ShotConfig {
  long long shots = 0;
  std::uint64_t seed = 0;
  bool resample_each_step = true;  // fresh draws per time step
};

// Multinomial draw: counts over probs.size() outcomes summing to S, via
// chained conditional binomials (deterministic per seed). probs must be
// nonnegative and sum to 1 within 1e-9, else std::invalid_argument.
std::vector<long long> sample_counts(const std::vector<double>& probs, long long S,
                                     std::uint64_t seed);

// Shot-estimated outcome-class probabilities of one circuit evaluation,
// from the closed-form 4-class distribution.
std::array<double, 4> estimate_class_probs(const CircuitParams& circ,
                                           const std::vector<double>& x,
                                           const std::vector<double>& z,
                                           long long S, std::uint64_t seed);

enum class ShotPath {
  marginal,   // sample the 4 outcome classes directly (closed form)
  full_dense  // sample every register index from the dense state, then fold
};

// Shot-noisy QNN component: R (1 - 2 (P1_hat + P2_hat)). Unbiased for the
// exact output; equal to it when cfg.shots == 0. The full_dense path is the
// reference oracle and inherits the dense-simulation size limit.
double eval_qnn_shots(const CircuitParams& circ, const std::vector<double>& x,
                      const std::vector<double>& z, const ShotConfig& cfg,
                      ShotPath path = ShotPath::marginal);

// Recurrent trajectory where every component evaluation at every step uses
// its own shot draws on the child stream labelled (time step, component).
// With resample_each_step = false the per-component stream is reused each
// step. cfg.shots == 0 reproduces run() exactly.
std::vector<std::vector<double>> run_shots(const ReservoirSystem& sys,
                                           const std::vector<std::vector<double>>& z_seq,
                                           const std::vector<double>& x0,
                                           const ShotConfig& cfg);

}  // namespace rqnn

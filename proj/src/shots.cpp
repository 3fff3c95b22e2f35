#include "rqnn/shots.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rqnn/circuit.hpp"
#include "rqnn/qnn.hpp"
#include "rqnn/rng.hpp"

namespace rqnn {

std::vector<long long> sample_counts(const std::vector<double>& probs, long long S,
                                     std::uint64_t seed) {
  if (probs.empty()) throw std::invalid_argument("sample_counts: empty distribution");
  if (S < 1) throw std::invalid_argument("sample_counts: S must be >= 1");
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= -1e-12) || !std::isfinite(p)) {
      throw std::invalid_argument("sample_counts: negative or non-finite probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("sample_counts: probabilities must sum to 1");
  }

  // Chained conditionals: outcome k is binomial in the remaining shots with
  // success probability p_k / (mass not yet assigned).
  Rng rng(seed);
  std::vector<long long> counts(probs.size(), 0);
  long long remaining = S;
  double mass_left = 1.0;
  for (std::size_t k = 0; k + 1 < probs.size() && remaining > 0; ++k) {
    const double p = std::clamp(probs[k] / std::max(mass_left, 1e-300), 0.0, 1.0);
    std::binomial_distribution<long long> bin(remaining, p);
    const long long c = bin(rng);
    counts[k] = c;
    remaining -= c;
    mass_left -= probs[k];
  }
  counts.back() += remaining;
  return counts;
}

std::array<double, 4> estimate_class_probs(const CircuitParams& circ,
                                           const std::vector<double>& x,
                                           const std::vector<double>& z,
                                           long long S, std::uint64_t seed) {
  const std::array<double, 4> exact = class_probs_closed_form(circ, x, z);
  if (S == 0) return exact;
  const auto counts =
      sample_counts({exact[0], exact[1], exact[2], exact[3]}, S, seed);
  std::array<double, 4> est;
  for (int m = 0; m < 4; ++m) {
    est[m] = static_cast<double>(counts[m]) / static_cast<double>(S);
  }
  return est;
}

double eval_qnn_shots(const CircuitParams& circ, const std::vector<double>& x,
                      const std::vector<double>& z, const ShotConfig& cfg,
                      ShotPath path) {
  if (cfg.shots < 0) throw std::invalid_argument("eval_qnn_shots: negative shots");
  if (cfg.shots == 0) return eval_component(circ, x, z);

  double p12;
  if (path == ShotPath::marginal) {
    const auto est = estimate_class_probs(circ, x, z, cfg.shots, cfg.seed);
    p12 = est[1] + est[2];
  } else {
    // Reference path: sample the full register distribution from the dense
    // state, then fold indices mod 4 into the outcome classes.
    const StateVector state = [&] {
      StateVector s = prepared_state(circ, PrepMethod::reflection);
      build_block_unitary(circ, x, z).apply(s);
      return s;
    }();
    std::vector<double> probs(state.amps.size());
    for (std::size_t k = 0; k < probs.size(); ++k) probs[k] = std::norm(state.amps[k]);
    const auto counts = sample_counts(probs, cfg.shots, cfg.seed);
    long long c12 = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const std::size_t m = k % 4;
      if (m == 1 || m == 2) c12 += counts[k];
    }
    p12 = static_cast<double>(c12) / static_cast<double>(cfg.shots);
  }
  return circ.R * (1.0 - 2.0 * p12);
}

std::vector<std::vector<double>> run_shots(const ReservoirSystem& sys,
                                           const std::vector<std::vector<double>>& z_seq,
                                           const std::vector<double>& x0,
                                           const ShotConfig& cfg) {
  sys.validate();
  if (cfg.shots == 0) return run(sys, z_seq, x0);
  if (x0.size() != static_cast<std::size_t>(sys.state_dim())) {
    throw std::invalid_argument("run_shots: initial state dimension mismatch");
  }

  const int n = sys.state_dim();
  std::vector<std::vector<double>> traj;
  traj.reserve(z_seq.size());
  std::vector<double> x = x0;
  for (std::size_t t = 0; t < z_seq.size(); ++t) {
    std::vector<double> next(n);
    for (int j = 0; j < n; ++j) {
      ShotConfig local = cfg;
      local.seed = derive_seed(cfg.seed, cfg.resample_each_step ? t : 0,
                               static_cast<std::uint64_t>(j) + 1);
      if (sys.mode == ReservoirMode::modified) {
        const std::vector<double> px = matvec(sys.preprocessors[j], x);
        next[j] = eval_qnn_shots(sys.theta.circuits[j], px, z_seq[t], local);
      } else {
        next[j] = eval_qnn_shots(sys.theta.circuits[j], x, z_seq[t], local);
      }
    }
    x = next;
    traj.push_back(x);
  }
  return traj;
}

}  // namespace rqnn

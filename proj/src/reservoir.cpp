#include "rqnn/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rqnn/qnn.hpp"
#include "rqnn/rng.hpp"

namespace rqnn {

void ReservoirSystem::validate() const {
  theta.validate();
  if (mode == ReservoirMode::modified) {
    const std::size_t n = static_cast<std::size_t>(theta.state_dim);
    if (preprocessors.size() != n) {
      throw std::invalid_argument("reservoir: modified mode needs one preprocessor per component");
    }
    for (const Matrix& p : preprocessors) {
      if (p.rows != n || p.cols != n) {
        throw std::invalid_argument("reservoir: preprocessor must be N x N");
      }
    }
  }
}

namespace {

std::vector<double> step(const ReservoirSystem& sys, const std::vector<double>& x,
                         const std::vector<double>& z) {
  const int n = sys.state_dim();
  std::vector<double> next(n);
  for (int j = 0; j < n; ++j) {
    if (sys.mode == ReservoirMode::modified) {
      const std::vector<double> px = matvec(sys.preprocessors[j], x);
      next[j] = eval_component(sys.theta.circuits[j], px, z);
    } else {
      next[j] = eval_component(sys.theta.circuits[j], x, z);
    }
  }
  return next;
}

}  // namespace

std::vector<std::vector<double>> run(const ReservoirSystem& sys,
                                     const std::vector<std::vector<double>>& z_seq,
                                     const std::vector<double>& x0) {
  sys.validate();
  if (x0.size() != static_cast<std::size_t>(sys.state_dim())) {
    throw std::invalid_argument("run: initial state dimension mismatch");
  }
  for (double v : x0) {
    if (!std::isfinite(v)) throw std::invalid_argument("run: non-finite initial state");
  }
  for (const auto& z : z_seq) {
    if (z.size() != static_cast<std::size_t>(sys.input_dim())) {
      throw std::invalid_argument("run: input dimension mismatch");
    }
    for (double v : z) {
      if (!std::isfinite(v)) throw std::invalid_argument("run: non-finite input");
    }
  }

  std::vector<std::vector<double>> traj;
  traj.reserve(z_seq.size());
  std::vector<double> x = x0;
  for (const auto& z : z_seq) {
    x = step(sys, x, z);
    traj.push_back(x);
  }
  return traj;
}

EspReport check_esp(const ReservoirSystem& sys,
                    const std::vector<std::vector<double>>& z_seq,
                    int num_initial_states, std::uint64_t seed) {
  sys.validate();
  if (num_initial_states < 2) {
    throw std::invalid_argument("check_esp: need at least 2 initial states");
  }
  const int n = sys.state_dim();
  const double r = sys.amplitude();

  Rng rng(seed);
  std::uniform_real_distribution<double> ux(-r, r);
  std::vector<std::vector<double>> states(num_initial_states, std::vector<double>(n));
  for (auto& s : states)
    for (double& v : s) v = ux(rng);

  EspReport rep;
  rep.spread.reserve(z_seq.size());
  for (const auto& z : z_seq) {
    for (auto& s : states) s = step(sys, s, z);
    double spread = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (std::size_t j = i + 1; j < states.size(); ++j) {
        double d2 = 0.0;
        for (int k = 0; k < n; ++k) {
          const double d = states[i][k] - states[j][k];
          d2 += d * d;
        }
        spread = std::max(spread, std::sqrt(d2));
      }
    }
    rep.spread.push_back(spread);
    if (rep.collapse_step < 0 && spread <= 1e-8) {
      rep.collapse_step = static_cast<int>(rep.spread.size());
    }
  }

  rep.final_spread = rep.spread.empty() ? 0.0 : rep.spread.back();
  rep.converged = !rep.spread.empty() && rep.final_spread <= 1e-8;

  // Geometric-mean per-step decay above the noise floor.
  double log_sum = 0.0;
  int log_count = 0;
  for (std::size_t t = 1; t < rep.spread.size(); ++t) {
    if (rep.spread[t - 1] > 1e-13 && rep.spread[t] > 0.0) {
      log_sum += std::log(rep.spread[t] / rep.spread[t - 1]);
      log_count += 1;
    }
  }
  rep.rate = log_count > 0 ? std::exp(log_sum / log_count) : 0.0;
  return rep;
}

ShiftStructure build_shift_preprocessors(int K, int d, int m) {
  if (K < 1 || d < 1 || m < 1) {
    throw std::invalid_argument("build_shift_preprocessors: K, d, m must be >= 1");
  }
  const int n = (K - 1) * d + m;
  ShiftStructure out;
  out.state_dim = n;
  out.preprocessors.assign(n, Matrix(n, n));

  // Rows of the shifted view: coordinates of delay blocks k0..K-1 packed
  // from the top, zeros below.
  const auto fill_shift = [&](Matrix& p, int k0) {
    int row = 0;
    for (int k = k0; k <= K - 1; ++k) {
      const int col0 = m + (k - 1) * d;
      for (int c = 0; c < d; ++c) p(row++, col0 + c) = 1.0;
    }
  };

  for (int j = 0; j < m; ++j) fill_shift(out.preprocessors[j], 1);
  for (int k = 1; k <= K - 1; ++k) {
    for (int c = 0; c < d; ++c) {
      fill_shift(out.preprocessors[m + (k - 1) * d + c], k + 1);
    }
  }
  return out;
}

double min_units(double c_inf_max, double lambda, int N) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw std::invalid_argument("min_units: lambda must lie in (0, 1)");
  }
  if (N < 1 || !(c_inf_max > 0.0)) {
    throw std::invalid_argument("min_units: bad constants");
  }
  const double ratio = c_inf_max / (1.0 - lambda);
  return static_cast<double>(N) * static_cast<double>(N) * ratio * ratio;
}

double theoretical_bound(double c_inf_max, double lambda, int N, long long n) {
  const double n0 = min_units(c_inf_max, lambda, N);
  if (static_cast<double>(n) <= n0) {
    throw std::invalid_argument("theoretical_bound: n must exceed n0");
  }
  return std::sqrt(static_cast<double>(N)) * c_inf_max /
         ((1.0 - lambda) * std::sqrt(static_cast<double>(n)));
}

Matrix state_jacobian(const ReservoirSystem& sys, const std::vector<double>& x,
                      const std::vector<double>& z) {
  const int n = sys.state_dim();
  Matrix j(n, n);
  for (int row = 0; row < n; ++row) {
    std::vector<double> grad;
    if (sys.mode == ReservoirMode::modified) {
      const std::vector<double> px = matvec(sys.preprocessors[row], x);
      grad = eval_gradient(sys.theta.circuits[row], px, z);
      // Chain rule through the preprocessor: d/dx_k = sum_i g_i P(i, k).
      for (int col = 0; col < n; ++col) {
        double v = 0.0;
        for (int i = 0; i < n; ++i) v += grad[i] * sys.preprocessors[row](i, col);
        j(row, col) = v;
      }
    } else {
      grad = eval_gradient(sys.theta.circuits[row], x, z);
      for (int col = 0; col < n; ++col) j(row, col) = grad[col];
    }
  }
  return j;
}

double estimate_lambda(const ReservoirSystem& sys, const LambdaOptions& opt) {
  sys.validate();
  opt.box.validate();
  const int n_state = sys.state_dim();
  const int n_in = sys.input_dim();
  const std::size_t dim = opt.box.dim();
  if (dim != static_cast<std::size_t>(n_state + n_in)) {
    throw std::invalid_argument("estimate_lambda: box dim must be N + d");
  }

  // Full tensor grid when it fits the cap; otherwise the per-axis count is
  // reduced to fit and the missing budget is filled with seeded uniform
  // draws. Either way the point set is deterministic per seed.
  const bool capped = std::pow(static_cast<double>(opt.grid_per_axis),
                               static_cast<double>(dim)) >
                      static_cast<double>(opt.max_points);
  std::size_t per_axis = opt.grid_per_axis;
  while (per_axis > 2 && std::pow(static_cast<double>(per_axis),
                                  static_cast<double>(dim)) >
                             static_cast<double>(opt.max_points)) {
    per_axis -= 1;
  }

  std::vector<std::vector<double>> pts;
  const double grid_total =
      std::pow(static_cast<double>(per_axis), static_cast<double>(dim));
  if (grid_total <= static_cast<double>(opt.max_points)) {
    const std::size_t count = static_cast<std::size_t>(grid_total);
    pts.reserve(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
      std::vector<double> u(dim);
      std::size_t rem = flat;
      for (std::size_t k = 0; k < dim; ++k) {
        const std::size_t ik = rem % per_axis;
        rem /= per_axis;
        const double t = static_cast<double>(ik) / static_cast<double>(per_axis - 1);
        u[k] = opt.box.lo[k] + (opt.box.hi[k] - opt.box.lo[k]) * t;
      }
      pts.push_back(std::move(u));
    }
  }
  if (capped) {
    Rng rng(derive_seed(opt.seed, 0x6c616d62, 0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (pts.size() < opt.max_points) {
      std::vector<double> u(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        u[k] = opt.box.lo[k] + (opt.box.hi[k] - opt.box.lo[k]) * unit(rng);
      }
      pts.push_back(std::move(u));
    }
  }

  return max_indexed(pts.size(), opt.mode, [&](std::size_t i) {
    std::vector<double> x(pts[i].begin(), pts[i].begin() + n_state);
    std::vector<double> z(pts[i].begin() + n_state, pts[i].end());
    return spectral_norm(state_jacobian(sys, x, z)).value;
  });
}

void FilterTask::validate() const {
  input_box.validate();
  if (sequence_length <= 0 || washout < 0 || washout >= sequence_length) {
    throw std::invalid_argument("filter task: need 0 <= washout < sequence_length");
  }
  if (!target_filter) throw std::invalid_argument("filter task: missing target");
}

FilterErrorReport filter_error(const ReservoirSystem& sys, const Matrix* readout,
                               const FilterTask& task, int num_sequences,
                               std::uint64_t seed) {
  sys.validate();
  task.validate();
  if (num_sequences <= 0) {
    throw std::invalid_argument("filter_error: num_sequences must be positive");
  }

  const int d = sys.input_dim();
  if (task.input_box.dim() != static_cast<std::size_t>(d)) {
    throw std::invalid_argument("filter_error: task input dim mismatch");
  }
  const std::vector<double> x0(sys.state_dim(), 0.0);

  FilterErrorReport rep;
  rep.per_sequence_sup.resize(num_sequences);
  double total = 0.0;
  std::size_t count = 0;

  for (int s = 0; s < num_sequences; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s), 3));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::vector<double>> z_seq(task.sequence_length,
                                           std::vector<double>(d));
    for (auto& z : z_seq) {
      for (int k = 0; k < d; ++k) {
        z[k] = task.input_box.lo[k] +
               (task.input_box.hi[k] - task.input_box.lo[k]) * unit(rng);
      }
    }

    const auto traj = run(sys, z_seq, x0);
    const auto target = task.target_filter(z_seq);
    if (target.size() != traj.size()) {
      throw std::invalid_argument("filter_error: target length mismatch");
    }

    double seq_sup = 0.0;
    for (std::size_t t = static_cast<std::size_t>(task.washout); t < traj.size(); ++t) {
      std::vector<double> out =
          readout != nullptr ? matvec(*readout, traj[t]) : traj[t];
      if (out.size() != target[t].size()) {
        throw std::invalid_argument("filter_error: output dim mismatch");
      }
      double d2 = 0.0;
      for (std::size_t k = 0; k < out.size(); ++k) {
        const double diff = out[k] - target[t][k];
        d2 += diff * diff;
      }
      const double err = std::sqrt(d2);
      seq_sup = std::max(seq_sup, err);
      total += err;
      count += 1;
    }
    rep.per_sequence_sup[s] = seq_sup;
    rep.sup_error = std::max(rep.sup_error, seq_sup);
  }
  rep.mean_error = count > 0 ? total / static_cast<double>(count) : 0.0;
  return rep;
}

}  // namespace rqnn

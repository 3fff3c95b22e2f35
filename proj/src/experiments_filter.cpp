#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rqnn/csv.hpp"
#include "rqnn/experiments.hpp"
#include "rqnn/linalg.hpp"
#include "rqnn/metrics.hpp"
#include "rqnn/qnn.hpp"
#include "rqnn/regression.hpp"
#include "rqnn/reservoir.hpp"
#include "rqnn/rng.hpp"
#include "rqnn/sampler.hpp"
#include "rqnn/targets.hpp"

namespace rqnn {

using detail::make_claim;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

ExecMode mode_from(const KeyValues& cfg) {
  const std::string m = cfg.get_string("mode", "parallel");
  if (m == "serial") return ExecMode::serial;
  if (m == "parallel") return ExecMode::parallel;
  throw std::invalid_argument("mode must be serial or parallel");
}

// The contractive scalar state map used by the worst-case-bound and
// state-forgetting experiments: a low-amplitude Gaussian bump in (x, z).
TargetFunction contractive_target(const KeyValues& cfg) {
  return gaussian_target(2, cfg.get_double("target_amplitude", 0.1),
                         cfg.get_double("target_sigma", 1.0));
}

ReservoirSystem sampled_system(const TargetFunction& target, int n,
                               std::uint64_t seed) {
  ReservoirSystem sys;
  sys.theta.state_dim = 1;
  sys.theta.input_dim = 1;
  sys.theta.circuits.push_back(sample_theta(target, n, target.fhat_l1, seed));
  return sys;
}

// Grid estimate of the target map's own contraction factor sup |dF/dx|.
double target_lambda(const TargetFunction& target, double halfwidth) {
  const int per_axis = 33;
  double best = 0.0;
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      const double x = -halfwidth + 2.0 * halfwidth * i / (per_axis - 1);
      const double z = -halfwidth + 2.0 * halfwidth * j / (per_axis - 1);
      best = std::max(best, std::abs(target.grad({x, z})[0]));
    }
  }
  return best;
}

std::vector<std::vector<double>> random_sequence(int steps, double halfwidth,
                                                 Rng& rng) {
  std::uniform_real_distribution<double> u(-halfwidth, halfwidth);
  std::vector<std::vector<double>> z(steps, std::vector<double>(1));
  for (auto& zt : z) zt[0] = u(rng);
  return z;
}

// Sine ladder embedded on one coordinate of the 4-dimensional joint input.
std::vector<CosineFeature> sin_ladder(int coord, int freqs, double w0) {
  std::vector<CosineFeature> f(freqs);
  for (int k = 1; k <= freqs; ++k) {
    f[k - 1].a.assign(4, 0.0);
    f[k - 1].a[coord] = k * w0;
    f[k - 1].b = -0.5 * kPi;
  }
  return f;
}

// Two-coordinate ladder cos(j w0 u_c1 +- k w0 u_c2); spans the products
// sin(j w0 u_c1) sin(k w0 u_c2) needed for a product target.
std::vector<CosineFeature> pair_ladder(int c1, int c2, int freqs, double w0) {
  std::vector<CosineFeature> f;
  f.reserve(2 * freqs * freqs);
  for (int j = 1; j <= freqs; ++j) {
    for (int k = 1; k <= freqs; ++k) {
      for (int sign = -1; sign <= 1; sign += 2) {
        CosineFeature c;
        c.a.assign(4, 0.0);
        c.a[c1] = j * w0;
        c.a[c2] = sign * k * w0;
        c.b = 0.0;
        f.push_back(c);
      }
    }
  }
  return f;
}

Matrix design_matrix(const std::vector<CosineFeature>& features,
                     const std::vector<std::vector<double>>& points) {
  Matrix x(points.size(), features.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < features.size(); ++c) {
      double phase = features[c].b;
      for (std::size_t k = 0; k < points[r].size(); ++k) {
        phase += features[c].a[k] * points[r][k];
      }
      x(r, c) = std::cos(phase);
    }
  }
  return x;
}

// Pilot ridge fit on the raw feature set, then replication so every unit
// respects the per-unit amplitude cap, then the encoded refit.
AmplitudeFit fit_block(const std::vector<CosineFeature>& features,
                       const std::vector<std::vector<double>>& points,
                       const std::vector<double>& values, int n_units, double R) {
  const Matrix x = design_matrix(features, points);
  const std::vector<double> pilot = ridge_solve(x, values, 1e-8);
  const auto expanded = replicate_features(features, pilot, n_units, R);
  return fit_amplitudes(expanded, points, values, R, 1e-9);
}

struct MemoryBuild {
  ReservoirSystem sys;
  double rmse_g = 0.0;
  double rmse_id = 0.0;
  double rmse_z = 0.0;
};

// Fitted three-step finite-memory system (input and output width 1). State
// layout: (output, delay-1, delay-2). The output block approximates
// half the product of the current input with either the oldest visible
// input (oldest_product) or the previous one (recent_product).
enum class GKind { oldest_product, recent_product };

MemoryBuild build_k3_system(GKind kind, const KeyValues& cfg) {
  const int n_units = static_cast<int>(cfg.get_int("fit_units", 768));
  const double R = cfg.get_double("fit_R", 8.0);
  const int id_freqs = static_cast<int>(cfg.get_int("id_freqs", 28));
  const int g_freqs = static_cast<int>(cfg.get_int("g_freqs", 12));
  const double w0 = kPi / cfg.get_double("fit_period", 1.6);
  const double lv = 1.1;   // reachable state-coordinate range
  const double lz = 1.05;  // input range with margin

  // 1-D identity fits: delay-1 copies the first preprocessed coordinate,
  // delay-2 reads the current input (coordinate 3).
  const auto fit_identity = [&](int coord) {
    const int m = 241;
    std::vector<std::vector<double>> pts(m, std::vector<double>(4, 0.0));
    std::vector<double> vals(m);
    for (int i = 0; i < m; ++i) {
      const double s = -lv + 2.0 * lv * i / (m - 1);
      pts[i][coord] = s;
      vals[i] = s;
    }
    return fit_block(sin_ladder(coord, id_freqs, w0), pts, vals, n_units, R);
  };

  const int gc = kind == GKind::oldest_product ? 0 : 1;
  const auto fit_product = [&] {
    const int m = 61;
    std::vector<std::vector<double>> pts;
    std::vector<double> vals;
    pts.reserve(m * m);
    vals.reserve(m * m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const double s = -lv + 2.0 * lv * i / (m - 1);
        const double t = -lz + 2.0 * lz * j / (m - 1);
        std::vector<double> p(4, 0.0);
        p[gc] = s;
        p[3] = t;
        pts.push_back(std::move(p));
        vals.push_back(0.5 * s * t);
      }
    }
    return fit_block(pair_ladder(gc, 3, g_freqs, w0), pts, vals, n_units, R);
  };

  const AmplitudeFit g_fit = fit_product();
  const AmplitudeFit id_fit = fit_identity(0);
  const AmplitudeFit z_fit = fit_identity(3);

  MemoryBuild out;
  out.rmse_g = g_fit.rmse;
  out.rmse_id = id_fit.rmse;
  out.rmse_z = z_fit.rmse;

  const ShiftStructure shift = build_shift_preprocessors(3, 1, 1);
  out.sys.mode = ReservoirMode::modified;
  out.sys.preprocessors = shift.preprocessors;
  out.sys.theta.state_dim = shift.state_dim;
  out.sys.theta.input_dim = 1;
  out.sys.theta.circuits = {g_fit.params, id_fit.params, z_fit.params};
  out.sys.validate();
  return out;
}

}  // namespace

ExperimentRecord run_esp_check(const KeyValues& cfg) {
  const Timer timer;
  const std::uint64_t seed = cfg.get_u64("seed", 20260816);
  const TargetFunction target = contractive_target(cfg);
  const ReservoirSystem sys = sampled_system(
      target, static_cast<int>(cfg.get_int("n", 1024)), derive_seed(seed, 1));

  LambdaOptions lopt;
  lopt.box = centered_box(2, 1.0);
  lopt.seed = derive_seed(seed, 2);
  lopt.mode = mode_from(cfg);
  const double lambda_hat = estimate_lambda(sys, lopt);

  Rng rng(derive_seed(seed, 7));
  const auto z_seq =
      random_sequence(static_cast<int>(cfg.get_int("steps", 240)), 1.0, rng);
  const EspReport rep =
      check_esp(sys, z_seq, static_cast<int>(cfg.get_int("initial_states", 8)),
                derive_seed(seed, 8));

  // Fraction of steps obeying the one-step contraction inequality.
  int ok = 0, total = 0;
  for (std::size_t t = 1; t < rep.spread.size(); ++t) {
    total += 1;
    if (rep.spread[t] <= lambda_hat * rep.spread[t - 1] + 1e-12) ok += 1;
  }
  const double contraction_fraction =
      total > 0 ? static_cast<double>(ok) / total : 1.0;

  ExperimentRecord rec;
  rec.experiment = "esp-check";
  rec.claims.push_back(make_claim(
      "collapse-within-60",
      rep.collapse_step < 0 ? 1e9 : static_cast<double>(rep.collapse_step), "<=",
      60.0));
  rec.claims.push_back(make_claim("final-spread", rep.final_spread, "<=", 1e-8));
  rec.claims.push_back(make_claim("rate-under-lambda", rep.rate, "<=",
                                  lambda_hat + 0.05));
  if (lambda_hat < 0.95) {
    rec.claims.push_back(
        make_claim("stepwise-contraction", contraction_fraction, ">=", 0.95));
  } else {
    rec.claims.push_back(
        make_claim("stepwise-contraction", contraction_fraction, "report", 0.0));
  }
  rec.claims.push_back(make_claim("lambda-hat", lambda_hat, "report", 0.0));

  std::vector<std::vector<std::string>> rows;
  rows.reserve(rep.spread.size());
  for (std::size_t t = 0; t < rep.spread.size(); ++t) {
    rows.push_back({std::to_string(t + 1), fmt_double(rep.spread[t])});
  }
  rec.csv_path = detail::maybe_write_csv(
      cfg, rec.experiment, seed,
      {{"lambda_hat", fmt_double(lambda_hat)}, {"rate", fmt_double(rep.rate)}},
      {"t", "spread"}, rows);
  rec.seconds = timer.seconds();
  return rec;
}

ExperimentRecord run_theorem1_filter(const KeyValues& cfg) {
  const Timer timer;
  const std::uint64_t seed = cfg.get_u64("seed", 20260816);
  const TargetFunction target = contractive_target(cfg);
  const int n = static_cast<int>(cfg.get_int("n", 1024));
  const int num_seq = static_cast<int>(cfg.get_int("sequences", 100));
  const int steps = static_cast<int>(cfg.get_int("steps", 300));

  const double lambda_hat = target_lambda(target, 1.0);
  const double c_inf = barron_sup_constant(target, 1.0);
  const double n0 = min_units(c_inf, lambda_hat, 1);

  FilterTask task;
  task.input_box = centered_box(1, 1.0);
  task.sequence_length = steps;
  task.washout = 0;
  task.target_filter = [&target](const std::vector<std::vector<double>>& z_seq) {
    std::vector<std::vector<double>> out;
    out.reserve(z_seq.size());
    double x = 0.0;
    for (const auto& z : z_seq) {
      x = target.value({x, z[0]});
      out.push_back({x});
    }
    return out;
  };

  const auto run_at = [&](int units) {
    const ReservoirSystem sys = sampled_system(target, units, derive_seed(seed, 1));
    return filter_error(sys, nullptr, task, num_seq, derive_seed(seed, 3));
  };
  const FilterErrorReport rep_n = run_at(n);
  const FilterErrorReport rep_4n = run_at(4 * n);

  ExperimentRecord rec;
  rec.experiment = "theorem1-filter";
  rec.claims.push_back(make_claim("lambda-under-half", lambda_hat, "<=", 0.5));
  rec.claims.push_back(make_claim("n0-under-1e3", n0, "<=", 1000.0));
  rec.claims.push_back(make_claim("sup-under-bound-n", rep_n.sup_error, "<=",
                                  theoretical_bound(c_inf, lambda_hat, 1, n)));
  rec.claims.push_back(make_claim("sup-under-bound-4n", rep_4n.sup_error, "<=",
                                  theoretical_bound(c_inf, lambda_hat, 1, 4 * n)));
  rec.claims.push_back(
      make_claim("error-decreases", rep_4n.sup_error, "<", rep_n.sup_error));

  std::vector<std::vector<std::string>> rows;
  rows.reserve(num_seq);
  for (int s = 0; s < num_seq; ++s) {
    rows.push_back({std::to_string(s), fmt_double(rep_n.per_sequence_sup[s]),
                    fmt_double(rep_4n.per_sequence_sup[s])});
  }
  rec.csv_path = detail::maybe_write_csv(
      cfg, rec.experiment, seed,
      {{"lambda_hat", fmt_double(lambda_hat)},
       {"c_inf", fmt_double(c_inf)},
       {"n0", fmt_double(n0)},
       {"n", std::to_string(n)}},
      {"seq", "sup_err_n", "sup_err_4n"}, rows);
  rec.seconds = timer.seconds();
  return rec;
}

ExperimentRecord run_lemma1_memory(const KeyValues& cfg) {
  const Timer timer;
  const std::uint64_t seed = cfg.get_u64("seed", 20260816);
  const MemoryBuild build = build_k3_system(GKind::oldest_product, cfg);
  const int steps = static_cast<int>(cfg.get_int("steps", 12));
  const int trials = static_cast<int>(cfg.get_int("trials", 20));
  const int last = steps - 1;

  double max_old = 0.0;      // response to a change K steps back: must be 0
  double max_recent = 0.0;   // response to a change K-1 steps back
  std::vector<std::vector<std::string>> rows;
  rows.reserve(trials);

  const std::vector<double> x0(3, 0.0);
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t, 30));
    const auto z_base = random_sequence(steps, 1.0, rng);
    const auto base = run(build.sys, z_base, x0);

    auto z_old = z_base;
    z_old[last - 3][0] += 0.3;
    const auto traj_old = run(build.sys, z_old, x0);
    double d_old = 0.0;
    for (int k = 0; k < 3; ++k) {
      d_old = std::max(d_old, std::abs(traj_old[last][k] - base[last][k]));
    }

    auto z_recent = z_base;
    z_recent[last - 2][0] += 0.3;
    const auto traj_recent = run(build.sys, z_recent, x0);
    double d_recent = 0.0;
    for (int k = 0; k < 3; ++k) {
      d_recent = std::max(d_recent, std::abs(traj_recent[last][k] - base[last][k]));
    }

    max_old = std::max(max_old, d_old);
    max_recent = std::max(max_recent, d_recent);
    rows.push_back({std::to_string(t), fmt_double(d_old), fmt_double(d_recent)});
  }

  // Initial-state influence must vanish exactly after K = 3 steps.
  Rng rng(derive_seed(seed, 99));
  const auto z_seq = random_sequence(steps, 1.0, rng);
  const EspReport esp = check_esp(build.sys, z_seq, 8, derive_seed(seed, 98));
  const double spread_pre = esp.spread.size() > 1 ? esp.spread[1] : 0.0;
  const double spread_k = esp.spread.size() > 2 ? esp.spread[2] : 1.0;

  ExperimentRecord rec;
  rec.experiment = "lemma1-memory";
  rec.claims.push_back(make_claim("old-input-inert", max_old, "==", 0.0));
  rec.claims.push_back(make_claim("recent-input-active", max_recent, ">", 1e-9));
  rec.claims.push_back(make_claim("collapse-at-k", spread_k, "==", 0.0));
  rec.claims.push_back(make_claim("pre-collapse-spread", spread_pre, ">", 0.0));

  rec.csv_path = detail::maybe_write_csv(
      cfg, rec.experiment, seed,
      {{"rmse_g", fmt_double(build.rmse_g)},
       {"rmse_id", fmt_double(build.rmse_id)},
       {"rmse_z", fmt_double(build.rmse_z)}},
      {"trial", "delta_old", "delta_recent"}, rows);
  rec.seconds = timer.seconds();
  return rec;
}

ExperimentRecord run_theorem2_filter(const KeyValues& cfg) {
  const Timer timer;
  const std::uint64_t seed = cfg.get_u64("seed", 20260816);
  const MemoryBuild build = build_k3_system(GKind::recent_product, cfg);

  // Target filter: half the product of the two most recent inputs.
  const auto target_filter = [](const std::vector<std::vector<double>>& z_seq) {
    std::vector<std::vector<double>> out;
    out.reserve(z_seq.size());
    double prev = 0.0;
    for (const auto& z : z_seq) {
      out.push_back({0.5 * prev * z[0]});
      prev = z[0];
    }
    return out;
  };

  // Ridge readout trained on one long washed-out run.
  const int train_steps = static_cast<int>(cfg.get_int("train_steps", 1200));
  const int washout = static_cast<int>(cfg.get_int("washout", 50));
  Rng rng(derive_seed(seed, 5));
  const auto z_train = random_sequence(train_steps, 1.0, rng);
  const auto states = run(build.sys, z_train, std::vector<double>(3, 0.0));
  const auto targets = target_filter(z_train);
  const std::vector<std::vector<double>> xs(states.begin() + washout, states.end());
  const std::vector<std::vector<double>> ys(targets.begin() + washout,
                                            targets.end());
  const ReadoutFit readout = train_readout(xs, ys, cfg.get_double("ridge", 1e-8));

  FilterTask task;
  task.input_box = centered_box(1, 1.0);
  task.sequence_length = static_cast<int>(cfg.get_int("steps", 60));
  task.washout = static_cast<int>(cfg.get_int("test_washout", 5));
  task.target_filter = target_filter;

  const FilterErrorReport rep =
      filter_error(build.sys, &readout.w, task,
                   static_cast<int>(cfg.get_int("sequences", 100)),
                   derive_seed(seed, 9));

  ExperimentRecord rec;
  rec.experiment = "theorem2-filter";
  rec.claims.push_back(make_claim("sup-under-tolerance", rep.sup_error, "<=",
                                  cfg.get_double("tolerance", 0.1)));
  rec.claims.push_back(make_claim("block-rmse-g", build.rmse_g, "report", 0.0));
  rec.claims.push_back(make_claim("block-rmse-identity", build.rmse_id, "report", 0.0));
  rec.claims.push_back(make_claim("block-rmse-input", build.rmse_z, "report", 0.0));
  rec.claims.push_back(make_claim("readout-rmse", readout.rmse, "report", 0.0));

  std::vector<std::vector<std::string>> rows;
  rows.reserve(rep.per_sequence_sup.size());
  for (std::size_t s = 0; s < rep.per_sequence_sup.size(); ++s) {
    rows.push_back({std::to_string(s), fmt_double(rep.per_sequence_sup[s])});
  }
  rec.csv_path = detail::maybe_write_csv(
      cfg, rec.experiment, seed,
      {{"rmse_g", fmt_double(build.rmse_g)},
       {"rmse_id", fmt_double(build.rmse_id)},
       {"rmse_z", fmt_double(build.rmse_z)},
       {"readout_rmse", fmt_double(readout.rmse)}},
      {"seq", "sup_err"}, rows);
  rec.seconds = timer.seconds();
  return rec;
}

}  // namespace rqnn

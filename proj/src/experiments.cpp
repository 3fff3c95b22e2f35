#include "rqnn/experiments.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rqnn/circuit.hpp"
#include "rqnn/csv.hpp"
#include "rqnn/linalg.hpp"
#include "rqnn/qnn.hpp"
#include "rqnn/rates.hpp"
#include "rqnn/rng.hpp"
#include "rqnn/sampler.hpp"
#include "rqnn/shots.hpp"
#include "rqnn/targets.hpp"

namespace rqnn {

bool ExperimentRecord::all_pass() const {
  for (const auto& c : claims) {
    if (!c.pass) return false;
  }
  return true;
}

const ClaimResult& ExperimentRecord::claim(const std::string& id) const {
  for (const auto& c : claims) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("no claim named " + id);
}

std::string ExperimentRecord::summary() const {
  std::ostringstream out;
  for (const auto& c : claims) {
    char line[256];
    if (c.relation == "report") {
      std::snprintf(line, sizeof(line), "claim %-28s measured=%-13.6g (report)\n",
                    c.id.c_str(), c.measured);
    } else {
      std::snprintf(line, sizeof(line), "claim %-28s measured=%-13.6g %s %-13.6g %s\n",
                    c.id.c_str(), c.measured, c.relation.c_str(), c.bound,
                    c.pass ? "PASS" : "FAIL");
    }
    out << line;
  }
  return out.str();
}

std::vector<std::string> experiment_names() {
  return {"prop1-check",   "rate-sweep",      "esp-check",  "theorem1-filter",
          "lemma1-memory", "theorem2-filter", "shots-sweep"};
}

namespace detail {

ClaimResult make_claim(const std::string& id, double measured,
                       const std::string& relation, double bound) {
  ClaimResult c;
  c.id = id;
  c.measured = measured;
  c.bound = bound;
  c.relation = relation;
  if (relation == "<=") {
    c.pass = measured <= bound;
  } else if (relation == "<") {
    c.pass = measured < bound;
  } else if (relation == ">=") {
    c.pass = measured >= bound;
  } else if (relation == ">") {
    c.pass = measured > bound;
  } else if (relation == "==") {
    c.pass = measured == bound;
  } else if (relation == "report") {
    c.pass = true;
  } else {
    throw std::invalid_argument("unknown claim relation " + relation);
  }
  return c;
}

std::string maybe_write_csv(
    const KeyValues& cfg, const std::string& experiment, std::uint64_t seed,
    const std::vector<std::pair<std::string, std::string>>& extra_meta,
    const std::vector<std::string>& header,
    const std::vector<std::vector<std::string>>& rows) {
  const std::string path = cfg.get_string("out", "");
  if (path.empty()) return "";
  std::vector<std::pair<std::string, std::string>> meta;
  meta.emplace_back("experiment", "\"" + experiment + "\"");
  meta.emplace_back("seed", std::to_string(seed));
  meta.emplace_back("timestamp", "\"" + now_iso8601() + "\"");
  for (const auto& kv : extra_meta) meta.push_back(kv);
  write_text_file(path, json_meta_line(meta) + csv_body(header, rows));
  return path;
}

namespace {

ExecMode mode_from(const KeyValues& cfg) {
  const std::string m = cfg.get_string("mode", "parallel");
  if (m == "serial") return ExecMode::serial;
  if (m == "parallel") return ExecMode::parallel;
  throw std::invalid_argument("mode must be serial or parallel");
}

TargetFunction target_from(const KeyValues& cfg) {
  const std::string name = cfg.get_string("target", "gaussian");
  const int dim = static_cast<int>(cfg.get_int("target_dim", 2));
  const double amplitude = cfg.get_double("target_amplitude", 1.0);
  const double sigma = cfg.get_double("target_sigma", 1.0);
  if (name == "gaussian") return gaussian_target(dim, amplitude, sigma);
  if (name == "shifted") {
    std::vector<double> shift(dim, cfg.get_double("target_shift", 0.25));
    return shifted_gaussian_target(dim, amplitude, sigma, shift);
  }
  if (name == "cosine") {
    std::vector<double> freq(dim, cfg.get_double("target_freq", 0.5));
    return cosine_gaussian_target(dim, amplitude, sigma, freq);
  }
  throw std::invalid_argument("unknown target " + name);
}

}  // namespace
}  // namespace detail

using detail::make_claim;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

// Random circuit over weight dimension `dim` with moderate parameters.
CircuitParams random_circuit(int n, int dim, Rng& rng) {
  std::uniform_real_distribution<double> ua(-2.0, 2.0);
  std::uniform_real_distribution<double> ub(-3.141592653589793, 3.141592653589793);
  std::uniform_real_distribution<double> ug(0.0, 2.0 * 3.141592653589793);
  std::uniform_real_distribution<double> ur(0.5, 3.0);
  CircuitParams circ;
  circ.R = ur(rng);
  circ.units.resize(n);
  for (auto& unit : circ.units) {
    unit.a.resize(dim);
    for (double& v : unit.a) v = ua(rng);
    unit.b = ub(rng);
    unit.gamma = ug(rng);
  }
  return circ;
}

std::vector<double> random_point(int dim, double halfwidth, Rng& rng) {
  std::uniform_real_distribution<double> u(-halfwidth, halfwidth);
  std::vector<double> p(dim);
  for (double& v : p) v = u(rng);
  return p;
}

}  // namespace

ExperimentRecord run_prop1_check(const KeyValues& cfg) {
  const Timer timer;
  const std::uint64_t seed = cfg.get_u64("seed", 20260816);
  const int configs = static_cast<int>(cfg.get_int("configs", 200));
  const int p02_grid = static_cast<int>(cfg.get_int("p02_grid", 100));

  double max_diff = 0.0;
  double max_unitarity = 0.0;
  double max_prob_sum = 0.0;
  double max_p02 = 0.0;
  double max_prep = 0.0;
  double max_grad = 0.0;

  std::vector<std::vector<std::string>> rows;
  rows.reserve(configs);

  for (int i = 0; i < configs; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    std::uniform_int_distribution<int> un(1, 8);
    std::uniform_int_distribution<int> un_state(1, 5);
    const int n = un(rng);
    const int n_state = un_state(rng);
    std::uniform_int_distribution<int> un_input(1, 6 - n_state);
    const int d = un_input(rng);
    const CircuitParams circ = random_circuit(n, n_state + d, rng);
    const std::vector<double> x = random_point(n_state, 1.0, rng);
    const std::vector<double> z = random_point(d, 1.0, rng);

    // Closed form vs dense reference.
    const double closed = eval_component(circ, x, z, EvalPath::closed_form);
    const double dense = eval_component(circ, x, z, EvalPath::dense);
    const double diff = std::abs(closed - dense);

    // Unitarity of the state update and of both preparation methods.
    const auto block = build_block_unitary(circ, x, z);
    double u_defect = unitarity_defect(block.dense(), block.dim);
    double v_defect =
        unitarity_defect(build_state_prep(circ, PrepMethod::reflection), block.dim);
    if (padding_blocks(n) == 0) {
      v_defect = std::max(
          v_defect,
          unitarity_defect(build_state_prep(circ, PrepMethod::hadamard), block.dim));
    }

    // Probabilities sum to one on both paths.
    const auto probs_fast = class_probs_closed_form(circ, x, z);
    const auto probs_dense = class_probs_dense(circ, x, z);
    double prob_sum_err =
        std::abs(probs_fast[0] + probs_fast[1] + probs_fast[2] + probs_fast[3] - 1.0);
    prob_sum_err = std::max(
        prob_sum_err, std::abs(probs_dense[0] + probs_dense[1] + probs_dense[2] +
                               probs_dense[3] - 1.0));

    // The even-class mass is input independent.
    const double p02_ref = probs_fast[0] + probs_fast[2];
    double p02_var = 0.0;
    for (int g = 0; g < p02_grid; ++g) {
      const auto xg = random_point(n_state, 1.0, rng);
      const auto zg = random_point(d, 1.0, rng);
      const auto pg = class_probs_closed_form(circ, xg, zg);
      p02_var = std::max(p02_var, std::abs(pg[0] + pg[2] - p02_ref));
    }

    // Prepared superposition amplitudes: 1/sqrt(n) on every 4th index.
    const StateVector prep = prepared_state(circ, PrepMethod::reflection);
    double prep_err = 0.0;
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < prep.amps.size(); ++k) {
      const bool on = (k % 4 == 0) && (k / 4 < static_cast<std::size_t>(n));
      const double want = on ? inv_sqrt_n : 0.0;
      prep_err = std::max(prep_err, std::abs(prep.amps[k] - cdouble(want, 0.0)));
    }

    // Analytic gradient vs central finite differences, relative error.
    const std::vector<double> grad = eval_gradient(circ, x, z);
    const double h = 1e-5;
    double num = 0.0, den = 0.0;
    std::vector<double> xz(x);
    xz.insert(xz.end(), z.begin(), z.end());
    for (std::size_t k = 0; k < xz.size(); ++k) {
      std::vector<double> up = xz, dn = xz;
      up[k] += h;
      dn[k] -= h;
      const std::vector<double> xu(up.begin(), up.begin() + n_state);
      const std::vector<double> zu(up.begin() + n_state, up.end());
      const std::vector<double> xd(dn.begin(), dn.begin() + n_state);
      const std::vector<double> zd(dn.begin() + n_state, dn.end());
      const double fd =
          (eval_component(circ, xu, zu) - eval_component(circ, xd, zd)) / (2.0 * h);
      num += (fd - grad[k]) * (fd - grad[k]);
      den += grad[k] * grad[k];
    }
    const double grad_rel = std::sqrt(num) / std::max(std::sqrt(den), 1e-9);

    max_diff = std::max(max_diff, diff);
    max_unitarity = std::max(max_unitarity, std::max(u_defect, v_defect));
    max_prob_sum = std::max(max_prob_sum, prob_sum_err);
    max_p02 = std::max(max_p02, p02_var);
    max_prep = std::max(max_prep, prep_err);
    max_grad = std::max(max_grad, grad_rel);

    rows.push_back({std::to_string(i), std::to_string(n), std::to_string(n_state),
                    std::to_string(d), fmt_double(diff), fmt_double(u_defect),
                    fmt_double(v_defect), fmt_double(prob_sum_err),
                    fmt_double(p02_var), fmt_double(prep_err), fmt_double(grad_rel)});
  }

  ExperimentRecord rec;
  rec.experiment = "prop1-check";
  rec.claims.push_back(make_claim("closed-form-agrees", max_diff, "<=", 1e-10));
  rec.claims.push_back(make_claim("unitarity", max_unitarity, "<=", 1e-12));
  rec.claims.push_back(make_claim("prob-sum", max_prob_sum, "<=", 1e-12));
  rec.claims.push_back(make_claim("p02-invariant", max_p02, "<=", 1e-12));
  rec.claims.push_back(make_claim("prep-amplitudes", max_prep, "<=", 1e-12));
  rec.claims.push_back(make_claim("gradient-fd", max_grad, "<=", 1e-6));
  rec.csv_path = detail::maybe_write_csv(
      cfg, rec.experiment, seed, {},
      {"idx", "n", "N", "d", "diff", "u_defect", "v_defect", "prob_sum_err",
       "p02_var", "prep_err", "grad_rel_err"},
      rows);
  rec.seconds = timer.seconds();
  return rec;
}

ExperimentRecord run_rate_sweep_experiment(const KeyValues& cfg) {
  const Timer timer;
  const std::uint64_t seed = cfg.get_u64("seed");
  const TargetFunction target = detail::target_from(cfg);

  RateOptions opt;
  opt.n_list.clear();
  for (long long n : cfg.get_int_list("n_list", {8, 16, 32, 64, 128, 256})) {
    opt.n_list.push_back(static_cast<int>(n));
  }
  opt.trials = static_cast<int>(cfg.get_int("trials", 50));
  opt.R = cfg.get_double("R", std::max(1.0, target.fhat_l1));
  opt.seed = seed;
  opt.box_halfwidth = cfg.get_double("box", 1.0);
  opt.mc_points = static_cast<std::size_t>(cfg.get_int("mc_points", 4096));
  opt.sup_grid = static_cast<std::size_t>(cfg.get_int("sup_grid", 257));
  opt.mode = detail::mode_from(cfg);

  const RateReport report = rate_sweep(target, opt);

  // Worst ratios of measured means against the declared-constant bounds.
  double worst_joint_ratio = 0.0;
  double worst_sup_ratio = 0.0;
  for (std::size_t ni = 0; ni < report.n_values.size(); ++ni) {
    const double n = static_cast<double>(report.n_values[ni]);
    worst_joint_ratio =
        std::max(worst_joint_ratio, report.mean_joint[ni] * n / report.c_l2);
    worst_sup_ratio = std::max(
        worst_sup_ratio, report.mean_sup[ni] * std::sqrt(n) / report.c_sup);
  }

  // Weight-bounded draws: the norm bound must hold on every returned set
  // and whole-set acceptance must happen with positive frequency.
  const int bounded_trials = static_cast<int>(cfg.get_int("bounded_trials", 100));
  const int bounded_n = static_cast<int>(cfg.get_int("bounded_n", 64));
  const int q = static_cast<int>(cfg.get_int("q", 2));
  const double bound = weight_norm_bound(target, bounded_n, q);
  double worst_norm_ratio = 0.0;
  int first_try = 0;
  for (int t = 0; t < bounded_trials; ++t) {
    const auto draw = sample_theta_bounded(target, bounded_n, q, opt.R,
                                           derive_seed(seed, t, 40));
    if (draw.attempts == 1) first_try += 1;
    for (const auto& unit : draw.circ.units) {
      worst_norm_ratio = std::max(worst_norm_ratio, norm2(unit.a) / bound);
    }
  }

  ExperimentRecord rec;
  rec.experiment = "rate-sweep";
  rec.claims.push_back(make_claim("slope-upper", report.slope_joint, "<=", -0.7));
  rec.claims.push_back(make_claim("slope-lower", report.slope_joint, ">=", -1.3));
  rec.claims.push_back(
      make_claim("joint-mean-under-constant", worst_joint_ratio, "<=", 2.0));
  rec.claims.push_back(
      make_claim("sup-mean-under-constant", worst_sup_ratio, "<=", 2.0));
  rec.claims.push_back(make_claim("weight-bound-holds", worst_norm_ratio, "<=", 1.0));
  rec.claims.push_back(make_claim(
      "weight-bound-acceptance",
      static_cast<double>(first_try) / static_cast<double>(bounded_trials), ">",
      0.0));

  std::vector<std::vector<std::string>> rows;
  rows.reserve(report.rows.size());
  for (const RateRow& r : report.rows) {
    rows.push_back({std::to_string(r.n), std::to_string(r.trial),
                    fmt_double(r.sq_l2), fmt_double(r.joint), fmt_double(r.sup)});
  }
  rec.csv_path = detail::maybe_write_csv(
      cfg, rec.experiment, seed,
      {{"c_l2", fmt_double(report.c_l2)},
       {"c_l2_randomized", fmt_double(report.c_l2_randomized)},
       {"c_sup", fmt_double(report.c_sup)},
       {"slope_joint", fmt_double(report.slope_joint)},
       {"weight_bound", fmt_double(bound)}},
      {"n", "trial", "sq_l2", "joint", "sup"}, rows);
  rec.seconds = timer.seconds();
  return rec;
}

ExperimentRecord run_shots_sweep(const KeyValues& cfg) {
  const Timer timer;
  const std::uint64_t seed = cfg.get_u64("seed");
  const int reps = static_cast<int>(cfg.get_int("trials", 600));
  std::vector<long long> s_list;
  for (long long s : cfg.get_int_list("s_list", {100, 1000, 10000, 100000})) {
    s_list.push_back(s);
  }

  // Fixed evaluation point of a fixed sampled circuit.
  const TargetFunction target = gaussian_target(2, 1.0, 1.0);
  const CircuitParams circ =
      sample_theta(target, static_cast<int>(cfg.get_int("n", 64)), 1.0,
                   derive_seed(seed, 11));
  const std::vector<double> x = {0.3};
  const std::vector<double> z = {-0.4};
  const auto exact_probs = class_probs_closed_form(circ, x, z);
  const double exact_value = eval_component(circ, x, z);

  // Contractive reservoir for the noisy-trajectory law.
  const TargetFunction traj_target = gaussian_target(2, 0.1, 1.0);
  ReservoirSystem sys;
  sys.theta.state_dim = 1;
  sys.theta.input_dim = 1;
  sys.theta.circuits.push_back(
      sample_theta(traj_target, static_cast<int>(cfg.get_int("traj_n", 256)),
                   traj_target.fhat_l1, derive_seed(seed, 12)));
  LambdaOptions lopt;
  lopt.box = centered_box(2, 1.0);
  lopt.seed = derive_seed(seed, 13);
  lopt.mode = detail::mode_from(cfg);
  const double lambda_hat = estimate_lambda(sys, lopt);

  const int traj_steps = static_cast<int>(cfg.get_int("traj_steps", 20));
  Rng zrng(derive_seed(seed, 14));
  std::vector<std::vector<double>> z_seq(traj_steps, std::vector<double>(1));
  for (auto& zt : z_seq) zt[0] = std::uniform_real_distribution<double>(-1, 1)(zrng);
  const std::vector<double> x0 = {0.0};
  const auto exact_traj = run(sys, z_seq, x0);

  const double r_sys = sys.amplitude();
  std::vector<double> rmse_prob_by_s, rmse_qnn_by_s, mean_dev_by_s;
  std::vector<std::vector<std::string>> rows;
  rows.reserve(s_list.size() * static_cast<std::size_t>(reps));

  for (std::size_t si = 0; si < s_list.size(); ++si) {
    const long long S = s_list[si];
    double sq_prob[4] = {0, 0, 0, 0};
    double sq_qnn = 0.0;
    double dev_sum = 0.0;
    for (int t = 0; t < reps; ++t) {
      const std::uint64_t rep_seed = derive_seed(seed, si * 1000003ULL + t, 20);
      const auto est = estimate_class_probs(circ, x, z, S, rep_seed);
      double max_prob_err = 0.0;
      for (int m = 0; m < 4; ++m) {
        const double e = est[m] - exact_probs[m];
        sq_prob[m] += e * e;
        max_prob_err = std::max(max_prob_err, std::abs(e));
      }
      const double value = circ.R * (1.0 - 2.0 * (est[1] + est[2]));
      sq_qnn += (value - exact_value) * (value - exact_value);

      ShotConfig scfg;
      scfg.shots = S;
      scfg.seed = derive_seed(seed, si * 1000003ULL + t, 21);
      const auto noisy = run_shots(sys, z_seq, x0, scfg);
      double dev = 0.0;
      for (std::size_t k = 0; k < noisy.back().size(); ++k) {
        const double d = noisy.back()[k] - exact_traj.back()[k];
        dev += d * d;
      }
      dev = std::sqrt(dev);
      dev_sum += dev;

      rows.push_back({std::to_string(S), std::to_string(t), fmt_double(max_prob_err),
                      fmt_double(std::abs(value - exact_value)), fmt_double(dev)});
    }
    double worst_rmse_prob = 0.0;
    for (double s4 : sq_prob) {
      worst_rmse_prob = std::max(worst_rmse_prob, std::sqrt(s4 / reps));
    }
    rmse_prob_by_s.push_back(worst_rmse_prob);
    rmse_qnn_by_s.push_back(std::sqrt(sq_qnn / reps));
    mean_dev_by_s.push_back(dev_sum / reps);
  }

  // Error laws: rmse_prob <= 1.1 / (2 sqrt S); rmse_qnn <= 4R / sqrt S;
  // trajectory deviation <= sqrt(N) 4R / ((1 - lambda) sqrt S).
  double worst_prob_ratio = 0.0, worst_qnn_ratio = 0.0, worst_traj_ratio = 0.0;
  for (std::size_t si = 0; si < s_list.size(); ++si) {
    const double rs = std::sqrt(static_cast<double>(s_list[si]));
    worst_prob_ratio = std::max(worst_prob_ratio, rmse_prob_by_s[si] * 2.0 * rs);
    worst_qnn_ratio =
        std::max(worst_qnn_ratio, rmse_qnn_by_s[si] * rs / (4.0 * circ.R));
    const double traj_bound = 4.0 * r_sys / ((1.0 - lambda_hat) * rs);
    worst_traj_ratio = std::max(worst_traj_ratio, mean_dev_by_s[si] / traj_bound);
  }

  std::vector<double> log_s, log_rmse;
  for (std::size_t si = 0; si < s_list.size(); ++si) {
    log_s.push_back(std::log(static_cast<double>(s_list[si])));
    log_rmse.push_back(std::log(rmse_qnn_by_s[si]));
  }
  const double slope = fit_slope(log_s, log_rmse);

  // Paired quadrupling: mean trajectory deviation should roughly halve.
  double halving_ratio = 0.0;
  {
    const long long s_small = cfg.get_int("halving_s", 2500);
    double dev_small = 0.0, dev_big = 0.0;
    for (int t = 0; t < reps; ++t) {
      ShotConfig scfg;
      scfg.seed = derive_seed(seed, 777 + t, 22);
      scfg.shots = s_small;
      const auto a = run_shots(sys, z_seq, x0, scfg);
      scfg.shots = 4 * s_small;
      const auto b = run_shots(sys, z_seq, x0, scfg);
      dev_small += std::abs(a.back()[0] - exact_traj.back()[0]);
      dev_big += std::abs(b.back()[0] - exact_traj.back()[0]);
    }
    halving_ratio = dev_big / std::max(dev_small, 1e-300);
  }

  ExperimentRecord rec;
  rec.experiment = "shots-sweep";
  rec.claims.push_back(make_claim("prob-rmse-law", worst_prob_ratio, "<=", 1.1));
  rec.claims.push_back(make_claim("qnn-rmse-law", worst_qnn_ratio, "<=", 1.0));
  rec.claims.push_back(make_claim("rmse-slope-upper", slope, "<=", -0.4));
  rec.claims.push_back(make_claim("rmse-slope-lower", slope, ">=", -0.6));
  rec.claims.push_back(make_claim("trajectory-bound", worst_traj_ratio, "<=", 1.0));
  rec.claims.push_back(make_claim("halving-upper", halving_ratio, "<=", 0.65));
  rec.claims.push_back(make_claim("halving-lower", halving_ratio, ">=", 0.35));

  rec.csv_path = detail::maybe_write_csv(
      cfg, rec.experiment, seed,
      {{"lambda_hat", fmt_double(lambda_hat)},
       {"qnn_slope", fmt_double(slope)},
       {"exact_value", fmt_double(exact_value)}},
      {"S", "trial", "err_prob", "err_qnn", "traj_err"}, rows);
  rec.seconds = timer.seconds();
  return rec;
}

ExperimentRecord run_experiment(const KeyValues& cfg) {
  const std::string name = cfg.get_string("experiment");
  if (name == "prop1-check") return run_prop1_check(cfg);
  if (name == "rate-sweep") return run_rate_sweep_experiment(cfg);
  if (name == "esp-check") return run_esp_check(cfg);
  if (name == "theorem1-filter") return run_theorem1_filter(cfg);
  if (name == "lemma1-memory") return run_lemma1_memory(cfg);
  if (name == "theorem2-filter") return run_theorem2_filter(cfg);
  if (name == "shots-sweep") return run_shots_sweep(cfg);
  throw std::invalid_argument("unknown experiment " + name);
}

}  // namespace rqnn

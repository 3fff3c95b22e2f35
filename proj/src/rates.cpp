#include "rqnn/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "rqnn/linalg.hpp"
#include "rqnn/qnn.hpp"
#include "rqnn/rng.hpp"
#include "rqnn/sampler.hpp"

namespace rqnn {

RateReport rate_sweep(const TargetFunction& target, const RateOptions& opt) {
  if (opt.n_list.empty() || opt.trials <= 0) {
    throw std::invalid_argument("rate_sweep: empty n_list or trials");
  }
  for (std::size_t i = 1; i < opt.n_list.size(); ++i) {
    if (opt.n_list[i] <= opt.n_list[i - 1]) {
      throw std::invalid_argument("rate_sweep: n_list must increase");
    }
  }

  const Box box = centered_box(target.dim, opt.box_halfwidth);
  const std::size_t total = opt.n_list.size() * static_cast<std::size_t>(opt.trials);

  RateReport report;
  report.rows = map_indexed<RateRow>(total, opt.mode, [&](std::size_t idx) {
    const std::size_t ni = idx / static_cast<std::size_t>(opt.trials);
    const int trial = static_cast<int>(idx % static_cast<std::size_t>(opt.trials));
    const int n = opt.n_list[ni];

    const std::uint64_t draw_seed = derive_seed(opt.seed, idx, 1);
    CircuitParams circ =
        opt.bounded ? sample_theta_bounded(target, n, opt.q, opt.R, draw_seed).circ
                    : sample_theta(target, n, opt.R, draw_seed);

    const ScalarField approx = [&](const std::vector<double>& u) {
      return eval_component(circ, u, {});
    };
    const GradientField approx_grad = [&](const std::vector<double>& u,
                                          std::vector<double>& g) {
      g = eval_gradient(circ, u, {});
    };
    const ScalarField exact = [&](const std::vector<double>& u) {
      return target.value(u);
    };
    const GradientField exact_grad = [&](const std::vector<double>& u,
                                         std::vector<double>& g) {
      g = target.grad(u);
    };

    MetricOptions m;
    m.mc_points = opt.mc_points;
    m.sup_grid = opt.sup_grid;
    m.seed = derive_seed(opt.seed, idx, 2);
    m.mode = ExecMode::serial;  // trials already occupy the worker pool

    RateRow row;
    row.n = n;
    row.trial = trial;
    row.sq_l2 = error_l2(approx, exact, box, m);
    row.joint = error_joint(approx, approx_grad, exact, exact_grad, box, m);
    row.sup = error_sup(approx, exact, box, m);
    return row;
  });

  const std::size_t trials = static_cast<std::size_t>(opt.trials);
  for (std::size_t ni = 0; ni < opt.n_list.size(); ++ni) {
    double s_l2 = 0.0, s_joint = 0.0, s_sup = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
      const RateRow& row = report.rows[ni * trials + t];
      s_l2 += row.sq_l2;
      s_joint += row.joint;
      s_sup += row.sup;
    }
    report.n_values.push_back(opt.n_list[ni]);
    report.mean_sq_l2.push_back(s_l2 / trials);
    report.mean_joint.push_back(s_joint / trials);
    report.mean_sup.push_back(s_sup / trials);
  }

  std::vector<double> log_n, log_l2, log_joint, log_sup;
  for (std::size_t ni = 0; ni < report.n_values.size(); ++ni) {
    log_n.push_back(std::log(static_cast<double>(report.n_values[ni])));
    log_l2.push_back(std::log(report.mean_sq_l2[ni]));
    log_joint.push_back(std::log(report.mean_joint[ni]));
    log_sup.push_back(std::log(report.mean_sup[ni]));
  }
  report.slope_sq_l2 = fit_slope(log_n, log_l2);
  report.slope_joint = fit_slope(log_n, log_joint);
  report.slope_sup = fit_slope(log_n, log_sup);

  report.c_l2 = barron_l2_constant(target);
  report.c_l2_randomized = barron_l2_constant_randomized(target);
  report.c_sup = barron_sup_constant(target, opt.box_halfwidth);

  report.l2_within_constant = true;
  report.sup_within_constant = true;
  for (std::size_t ni = 0; ni < report.n_values.size(); ++ni) {
    const double n = static_cast<double>(report.n_values[ni]);
    const double c = opt.bounded ? report.c_l2_randomized : report.c_l2;
    if (report.mean_joint[ni] > 2.0 * c / n) report.l2_within_constant = false;
    if (report.mean_sup[ni] > 2.0 * report.c_sup / std::sqrt(n)) {
      report.sup_within_constant = false;
    }
  }
  return report;
}

}  // namespace rqnn

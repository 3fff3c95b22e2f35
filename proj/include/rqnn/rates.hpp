#pragma once

#include <cstdint>
#include <vector>

#include "rqnn/metrics.hpp"
#include "rqnn/targets.hpp"

namespace rqnn {

struct RateRow {
  int n = 0;
  int trial = 0;
  double sq_l2 = 0.0;  // squared L2(mu) error of the function values
  double joint = 0.0;  // squared L2 error of function plus all partials
  double sup = 0.0;    // grid sup of |difference|
};

struct RateOptions {
  std::vector<int> n_list;
  int trials = 10;
  double R = 1.0;             // amplitude scale handed to the sampler
  std::uint64_t seed = 1;
  double box_halfwidth = 1.0; // error domain [-M, M]^dim
  std::size_t mc_points = 4096;
  std::size_t sup_grid = 257;
  bool bounded = false;       // draw through the weight-bounded sampler
  int q = 2;                  // moment order for the bounded draw
  ExecMode mode = ExecMode::parallel;
};

struct RateReport {
  std::vector<RateRow> rows;           // ordered by (n index, trial)
  std::vector<int> n_values;
  std::vector<double> mean_sq_l2;
  std::vector<double> mean_joint;
  std::vector<double> mean_sup;
  double slope_sq_l2 = 0.0;            // log-log slope of mean vs n
  double slope_joint = 0.0;
  double slope_sup = 0.0;
  double c_l2 = 0.0;                   // squared-error constant: mean <= c_l2 / n
  double c_l2_randomized = 0.0;        // 3x variant for the bounded draw
  double c_sup = 0.0;                  // sup constant: mean <= c_sup / sqrt(n)
  bool l2_within_constant = false;     // every mean_joint <= 2 c / n
  bool sup_within_constant = false;    // every mean_sup <= 2 c_sup / sqrt(n)
};

// For each n in n_list runs `trials` independent parameter draws, measures
// squared L2, joint, and sup errors against the target on the centered box,
// and fits log-log slopes of the trial means. Trials are independent
// (parallelized over (n, trial) with derived seeds); rows come back in
// deterministic (n, trial) order regardless of thread count.
RateReport rate_sweep(const TargetFunction& target, const RateOptions& opt);

}  // namespace rqnn

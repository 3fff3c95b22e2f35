#pragma once

#include <vector>

#include "rqnn/linalg.hpp"
#include "rqnn/params.hpp"

namespace rqnn {

// One fixed cosine feature u -> cos(b + a.u) over the joint input.
struct CosineFeature {
  std::vector<double> a;
  double b = 0.0;
};

// Minimizes ||X w - y||^2 + ridge ||w||^2 through the normal equations
// (LDLT). ridge = 0 is allowed when X has full column rank; ridge > 0 makes
// the solution unique even with duplicated columns.
std::vector<double> ridge_solve(const Matrix& x, const std::vector<double>& y,
                                double ridge);

struct AmplitudeFit {
  CircuitParams params;
  std::vector<double> weights;  // fitted w_i, one per feature
  double rmse = 0.0;            // training RMSE
};

// Fits w in sum_i w_i cos(b^i + a^i . u) to (points, values) by ridge
// regression, then encodes the weights as unit parameters via
// gamma^i = arccos(n w_i / R) where n = feature count. A weight with
// |n w_i| > R throws AmplitudeOutOfRange; raise R or replicate the heavy
// features over more units (replicate_features below).
AmplitudeFit fit_amplitudes(const std::vector<CosineFeature>& features,
                            const std::vector<std::vector<double>>& points,
                            const std::vector<double>& values, double R,
                            double ridge);

// Expands a feature list to exactly n_total entries by replicating each
// feature proportionally to |weight| (at least once), so that after a refit
// every per-unit amplitude fits under the R/n_total encoding cap. Ridge
// splits a replicated feature's weight equally among its copies. Throws
// std::invalid_argument when n_total < feature count or when the weights
// cannot fit even with replication (sum |w| too close to R).
std::vector<CosineFeature> replicate_features(
    const std::vector<CosineFeature>& features,
    const std::vector<double>& weights, int n_total, double R);

struct ReadoutFit {
  Matrix w;           // m x N
  double rmse = 0.0;  // over all outputs and rows
  bool degenerate = false;  // near-singular state covariance
  double condition = 0.0;   // eigenvalue ratio of the normal matrix
};

// Ridge least squares y_t ~= W x_t (no intercept), shared factorization
// across output coordinates. states and targets are row-per-time.
ReadoutFit train_readout(const std::vector<std::vector<double>>& states,
                         const std::vector<std::vector<double>>& targets,
                         double ridge);

}  // namespace rqnn

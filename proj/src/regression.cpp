#include "rqnn/regression.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rqnn/errors.hpp"

namespace rqnn {

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace

std::vector<double> ridge_solve(const Matrix& x, const std::vector<double>& y,
                                double ridge) {
  if (x.rows != y.size() || x.rows == 0 || x.cols == 0) {
    throw std::invalid_argument("ridge_solve: shape mismatch");
  }
  if (!(ridge >= 0.0)) throw std::invalid_argument("ridge_solve: ridge < 0");
  const Eigen::MatrixXd a = to_eigen(x);
  Eigen::VectorXd b(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) b(i) = y[i];
  Eigen::MatrixXd normal = a.transpose() * a;
  normal.diagonal().array() += ridge;
  const Eigen::VectorXd w = normal.ldlt().solve(a.transpose() * b);
  return std::vector<double>(w.data(), w.data() + w.size());
}

AmplitudeFit fit_amplitudes(const std::vector<CosineFeature>& features,
                            const std::vector<std::vector<double>>& points,
                            const std::vector<double>& values, double R,
                            double ridge) {
  if (features.empty()) throw std::invalid_argument("fit_amplitudes: no features");
  if (points.size() != values.size() || points.empty()) {
    throw std::invalid_argument("fit_amplitudes: data shape mismatch");
  }
  if (!(R > 0.0)) throw std::invalid_argument("fit_amplitudes: R <= 0");
  const std::size_t dim = features[0].a.size();
  for (const auto& f : features) {
    if (f.a.size() != dim) {
      throw std::invalid_argument("fit_amplitudes: inconsistent feature dims");
    }
  }
  for (const auto& p : points) {
    if (p.size() != dim) {
      throw std::invalid_argument("fit_amplitudes: point dim mismatch");
    }
  }

  Matrix x(points.size(), features.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < features.size(); ++c) {
      double phase = features[c].b;
      for (std::size_t k = 0; k < dim; ++k) phase += features[c].a[k] * points[r][k];
      x(r, c) = std::cos(phase);
    }
  }

  AmplitudeFit fit;
  fit.weights = ridge_solve(x, values, ridge);

  double sq = 0.0;
  for (std::size_t r = 0; r < points.size(); ++r) {
    double pred = 0.0;
    for (std::size_t c = 0; c < features.size(); ++c) pred += x(r, c) * fit.weights[c];
    const double d = pred - values[r];
    sq += d * d;
  }
  fit.rmse = std::sqrt(sq / static_cast<double>(points.size()));

  const double n = static_cast<double>(features.size());
  fit.params.R = R;
  fit.params.units.resize(features.size());
  for (std::size_t c = 0; c < features.size(); ++c) {
    const double cosg = n * fit.weights[c] / R;
    if (std::abs(cosg) > 1.0) {
      throw AmplitudeOutOfRange(
          "fit_amplitudes: |n w| = " + std::to_string(std::abs(n * fit.weights[c])) +
          " exceeds R = " + std::to_string(R) +
          "; raise R or replicate heavy features over more units");
    }
    fit.params.units[c].a = features[c].a;
    fit.params.units[c].b = features[c].b;
    fit.params.units[c].gamma = std::acos(cosg);
  }
  fit.params.validate();
  return fit;
}

std::vector<CosineFeature> replicate_features(
    const std::vector<CosineFeature>& features,
    const std::vector<double>& weights, int n_total, double R) {
  if (features.size() != weights.size() || features.empty()) {
    throw std::invalid_argument("replicate_features: shape mismatch");
  }
  if (n_total < static_cast<int>(features.size())) {
    throw std::invalid_argument("replicate_features: n_total below feature count");
  }
  if (!(R > 0.0)) throw std::invalid_argument("replicate_features: R <= 0");

  // Copies needed so each replica's share stays under the per-unit cap R/n,
  // with 25% headroom for refit wiggle.
  const double cap = R / static_cast<double>(n_total);
  std::vector<int> copies(features.size());
  long long used = 0;
  for (std::size_t i = 0; i < features.size(); ++i) {
    copies[i] = std::max(1, static_cast<int>(std::ceil(1.25 * std::abs(weights[i]) / cap)));
    used += copies[i];
  }
  if (used > n_total) {
    throw std::invalid_argument(
        "replicate_features: total |weight| too large for n_total at this R");
  }
  // Spare slots go to the heaviest per-replica shares first.
  long long spare = n_total - used;
  while (spare > 0) {
    std::size_t pick = 0;
    double worst = -1.0;
    for (std::size_t i = 0; i < features.size(); ++i) {
      const double share = std::abs(weights[i]) / copies[i];
      if (share > worst) {
        worst = share;
        pick = i;
      }
    }
    copies[pick] += 1;
    spare -= 1;
  }

  std::vector<CosineFeature> out;
  out.reserve(n_total);
  for (std::size_t i = 0; i < features.size(); ++i) {
    for (int c = 0; c < copies[i]; ++c) out.push_back(features[i]);
  }
  return out;
}

ReadoutFit train_readout(const std::vector<std::vector<double>>& states,
                         const std::vector<std::vector<double>>& targets,
                         double ridge) {
  if (states.size() != targets.size() || states.empty()) {
    throw std::invalid_argument("train_readout: length mismatch");
  }
  if (!(ridge > 0.0)) throw std::invalid_argument("train_readout: ridge must be > 0");
  const std::size_t n_state = states[0].size();
  const std::size_t n_out = targets[0].size();
  const std::size_t rows = states.size();

  Eigen::MatrixXd x(rows, n_state), y(rows, n_out);
  for (std::size_t t = 0; t < rows; ++t) {
    if (states[t].size() != n_state || targets[t].size() != n_out) {
      throw std::invalid_argument("train_readout: ragged rows");
    }
    for (std::size_t k = 0; k < n_state; ++k) x(t, k) = states[t][k];
    for (std::size_t k = 0; k < n_out; ++k) y(t, k) = targets[t][k];
  }

  Eigen::MatrixXd normal = x.transpose() * x;
  ReadoutFit fit;
  {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(normal);
    const double ev_min = es.eigenvalues().minCoeff();
    const double ev_max = es.eigenvalues().maxCoeff();
    fit.condition = ev_max > 0.0 ? ev_max / std::max(ev_min, 0.0) : 0.0;
    fit.degenerate = !(ev_min > 1e-12 * std::max(ev_max, 1.0));
  }
  normal.diagonal().array() += ridge;
  const Eigen::MatrixXd wt = normal.ldlt().solve(x.transpose() * y);  // N x m

  fit.w = Matrix(n_out, n_state);
  for (std::size_t r = 0; r < n_out; ++r)
    for (std::size_t c = 0; c < n_state; ++c) fit.w(r, c) = wt(c, r);

  const Eigen::MatrixXd resid = x * wt - y;
  fit.rmse = std::sqrt(resid.squaredNorm() / static_cast<double>(rows * n_out));
  return fit;
}

}  // namespace rqnn

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rqnn/errors.hpp"
#include "rqnn/qnn.hpp"
#include "rqnn/regression.hpp"
#include "rqnn/rng.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

double feature_value(const rqnn::CosineFeature& f, const std::vector<double>& u) {
  double phase = f.b;
  for (std::size_t k = 0; k < u.size(); ++k) phase += f.a[k] * u[k];
  return std::cos(phase);
}

}  // namespace

TEST_CASE("ridge solve recovers an exactly determined system") {
  rqnn::Matrix x(3, 2);
  x(0, 0) = 1.0;
  x(1, 1) = 1.0;
  x(2, 0) = 1.0;
  x(2, 1) = 1.0;
  const std::vector<double> y{2.0, -1.0, 1.0};  // consistent with w = (2, -1)
  const auto w = rqnn::ridge_solve(x, y, 0.0);
  REQUIRE(w.size() == 2);
  CHECK(w[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("amplitude fit recovers planted cosine weights") {
  rqnn::Rng rng(515);
  std::uniform_real_distribution<double> ua(-2.0, 2.0);
  std::uniform_real_distribution<double> ub(-1.5, 1.5);
  std::uniform_real_distribution<double> uw(-0.05, 0.05);
  const int nf = 12;
  std::vector<rqnn::CosineFeature> features(nf);
  std::vector<double> truth(nf);
  for (int i = 0; i < nf; ++i) {
    features[i].a = {ua(rng), ua(rng)};
    features[i].b = ub(rng);
    truth[i] = uw(rng);
  }
  std::vector<std::vector<double>> points;
  std::vector<double> values;
  std::uniform_real_distribution<double> up(-1.0, 1.0);
  for (int p = 0; p < 400; ++p) {
    std::vector<double> u{up(rng), up(rng)};
    double v = 0.0;
    for (int i = 0; i < nf; ++i) v += truth[i] * feature_value(features[i], u);
    points.push_back(u);
    values.push_back(v);
  }
  const auto fit = rqnn::fit_amplitudes(features, points, values, 1.0, 1e-10);
  CHECK(fit.rmse <= 1e-8);
  REQUIRE(fit.weights.size() == static_cast<std::size_t>(nf));
  for (int i = 0; i < nf; ++i) {
    CHECK(fit.weights[i] == doctest::Approx(truth[i]).epsilon(1e-7));
  }
  // The encoded circuit reproduces the fitted combination.
  for (int p = 0; p < 10; ++p) {
    const double got = rqnn::eval_component(fit.params, points[p], {});
    CHECK(got == doctest::Approx(values[p]).epsilon(1e-7));
  }
}

TEST_CASE("constant feature fits a constant exactly") {
  std::vector<rqnn::CosineFeature> features(1);
  features[0].a = {0.0};
  features[0].b = 0.0;
  const std::vector<std::vector<double>> points{{-0.5}, {0.0}, {0.7}};
  const std::vector<double> values{0.3, 0.3, 0.3};
  const auto fit = rqnn::fit_amplitudes(features, points, values, 1.0, 0.0);
  CHECK(fit.weights[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(fit.rmse <= 1e-12);
}

TEST_CASE("per-unit amplitude overflow is rejected with guidance") {
  std::vector<rqnn::CosineFeature> features(2);
  features[0].a = {1.0};
  features[1].a = {2.5};
  const std::vector<std::vector<double>> points{{-0.8}, {-0.3}, {0.2}, {0.6}, {0.9}};
  const std::vector<double> values{2.0, 2.0, 2.0, 2.0, 2.0};  // needs |2 w| > R = 1
  CHECK_THROWS_AS(rqnn::fit_amplitudes(features, points, values, 1.0, 1e-10),
                  rqnn::AmplitudeOutOfRange);
}

TEST_CASE("replication splits heavy weights under the per-unit cap") {
  std::vector<rqnn::CosineFeature> features(2);
  features[0].a = {1.3};
  features[0].b = -0.2;
  features[1].a = {0.4};
  features[1].b = 0.9;
  const std::vector<double> weights{0.3, 0.1};
  const auto expanded = rqnn::replicate_features(features, weights, 10, 1.0);
  CHECK(expanded.size() == 10);

  // Refit through the expanded list: every per-unit weight obeys the cap.
  rqnn::Rng rng(8);
  std::uniform_real_distribution<double> up(-1.0, 1.0);
  std::vector<std::vector<double>> points;
  std::vector<double> values;
  for (int p = 0; p < 200; ++p) {
    std::vector<double> u{up(rng)};
    points.push_back(u);
    values.push_back(0.3 * feature_value(features[0], u) +
                     0.1 * feature_value(features[1], u));
  }
  const auto fit = rqnn::fit_amplitudes(expanded, points, values, 1.0, 1e-9);
  CHECK(fit.rmse <= 1e-6);
  for (const double w : fit.weights) {
    CHECK(std::abs(10.0 * w) <= 1.0 + 1e-9);
  }

  // Capacity shortfall: total weight too close to R for 10 units.
  CHECK_THROWS_AS(rqnn::replicate_features(features, {0.9, 0.1}, 10, 1.0),
                  std::invalid_argument);
  // Fewer slots than features.
  CHECK_THROWS_AS(rqnn::replicate_features(features, weights, 1, 1.0),
                  std::invalid_argument);
}

TEST_CASE("identity map fits to 1e-2 through 512 capped units") {
  // Pilot fit on a sine ladder, replicate under the cap, refit.
  const int freqs = 24;
  const double w0 = kPi / 1.6;
  std::vector<rqnn::CosineFeature> features(freqs);
  for (int k = 1; k <= freqs; ++k) {
    features[k - 1].a = {k * w0};
    features[k - 1].b = -0.5 * kPi;
  }
  std::vector<std::vector<double>> points;
  std::vector<double> values;
  const int m = 201;
  for (int i = 0; i < m; ++i) {
    const double s = -1.1 + 2.2 * i / (m - 1);
    points.push_back({s});
    values.push_back(s);
  }
  rqnn::Matrix x(points.size(), features.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    for (std::size_t c = 0; c < features.size(); ++c) {
      x(r, c) = feature_value(features[c], points[r]);
    }
  }
  const auto pilot = rqnn::ridge_solve(x, values, 1e-8);
  const auto expanded = rqnn::replicate_features(features, pilot, 512, 5.0);
  CHECK(expanded.size() == 512);
  const auto fit = rqnn::fit_amplitudes(expanded, points, values, 5.0, 1e-9);
  CHECK(fit.rmse <= 1e-2);
  CHECK(fit.params.n() == 512);
  // Spot check the encoded circuit against the identity.
  for (const double s : {-0.9, -0.25, 0.0, 0.4, 1.0}) {
    CHECK(rqnn::eval_component(fit.params, {s}, {}) == doctest::Approx(s).epsilon(2e-2));
  }
}

TEST_CASE("readout projects onto a state coordinate exactly") {
  rqnn::Rng rng(21);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> states;
  std::vector<std::vector<double>> targets;
  for (int t = 0; t < 100; ++t) {
    states.push_back({u(rng), u(rng), u(rng)});
    targets.push_back({states.back()[1]});
  }
  const auto fit = rqnn::train_readout(states, targets, 1e-12);
  REQUIRE(fit.w.rows == 1);
  REQUIRE(fit.w.cols == 3);
  CHECK(fit.rmse <= 1e-10);
  CHECK(fit.w(0, 0) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(fit.w(0, 1) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(fit.w(0, 2) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK_FALSE(fit.degenerate);
}

TEST_CASE("readout recovers a planted weight matrix") {
  rqnn::Rng rng(22);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::vector<std::vector<double>> w0{{0.5, -1.2, 0.3}, {0.0, 0.8, -0.4}};
  std::vector<std::vector<double>> states;
  std::vector<std::vector<double>> targets;
  for (int t = 0; t < 300; ++t) {
    const std::vector<double> x{u(rng), u(rng), u(rng)};
    std::vector<double> y(2, 0.0);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 3; ++c) y[r] += w0[r][c] * x[c];
    }
    states.push_back(x);
    targets.push_back(y);
  }
  const auto fit = rqnn::train_readout(states, targets, 1e-10);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 3; ++c) {
      CHECK(fit.w(r, c) == doctest::Approx(w0[r][c]).epsilon(1e-8));
    }
  }
  CHECK(fit.rmse <= 1e-8);
}

TEST_CASE("degenerate states are flagged through the condition number") {
  std::vector<std::vector<double>> states;
  std::vector<std::vector<double>> targets;
  for (int t = 0; t < 50; ++t) {
    const double s = 0.01 * t;
    states.push_back({s, 2.0 * s});  // rank-1 state cloud
    targets.push_back({s});
  }
  const auto fit = rqnn::train_readout(states, targets, 1e-10);
  CHECK(fit.degenerate);
  CHECK(fit.condition > 1e10);
}

TEST_CASE("readout requires a positive ridge") {
  const std::vector<std::vector<double>> states{{1.0}, {2.0}};
  const std::vector<std::vector<double>> targets{{1.0}, {2.0}};
  CHECK_THROWS_AS(rqnn::train_readout(states, targets, 0.0), std::invalid_argument);
}

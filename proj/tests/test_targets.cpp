#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "rqnn/rng.hpp"
#include "rqnn/targets.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

// Trapezoid quadrature over [-8, 8], fine enough for Gaussian-decay
// integrands to ~1e-10.
template <typename F>
double quad1d(F f) {
  const int m = 200001;
  const double lo = -8.0, hi = 8.0;
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    const double x = lo + (hi - lo) * i / (m - 1);
    const double w = (i == 0 || i == m - 1) ? 0.5 : 1.0;
    acc += w * f(x);
  }
  return acc * (hi - lo) / (m - 1);
}

}  // namespace

TEST_CASE("unit gaussian declares its Fourier moments correctly") {
  const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
  CHECK(t.fhat_l1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.mass_re == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.mass_im == doctest::Approx(0.0).epsilon(1e-12));
  REQUIRE(t.coord_m2.size() == 1);

  const auto fhat = [&](double xi) { return t.fhat_re({xi}); };
  CHECK(quad1d(fhat) == doctest::Approx(t.fhat_l1).epsilon(1e-8));
  CHECK(quad1d([&](double xi) { return xi * xi * fhat(xi); }) ==
        doctest::Approx(t.coord_m2[0]).epsilon(1e-8));
  CHECK(quad1d([&](double xi) { return xi * xi * fhat(xi); }) ==
        doctest::Approx(t.i2).epsilon(1e-8));
  CHECK(quad1d([&](double xi) { return xi * xi * xi * xi * fhat(xi); }) ==
        doctest::Approx(t.i4).epsilon(1e-8));
  CHECK(t.i2 == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-12));
  CHECK(t.i4 == doctest::Approx(3.0 / (4.0 * kPi * kPi)).epsilon(1e-12));

  CHECK(t.value({0.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(t.value({0.3}) == doctest::Approx(0.7537132119564671).epsilon(1e-12));
}

TEST_CASE("two-dimensional gaussian moments scale with dimension") {
  const auto t = rqnn::gaussian_target(2, 0.1, 1.0);
  CHECK(t.fhat_l1 == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(t.i2 == doctest::Approx(0.1 / kPi).epsilon(1e-12));
  CHECK(t.i4 == doctest::Approx(0.2 / (kPi * kPi)).epsilon(1e-12));
  REQUIRE(t.coord_m2.size() == 2);
  CHECK(t.coord_m2[0] == doctest::Approx(0.05 / kPi).epsilon(1e-12));
  CHECK(t.coord_m2[1] == doctest::Approx(0.05 / kPi).epsilon(1e-12));
}

TEST_CASE("target gradients match finite differences") {
  const auto targets = {
      rqnn::gaussian_target(2, 0.7, 1.3),
      rqnn::shifted_gaussian_target(2, 0.5, 0.9, {0.25, -0.1}),
      rqnn::cosine_gaussian_target(2, 0.4, 1.1, {0.5, 0.2}),
  };
  const double h = 1e-6;
  for (const auto& t : targets) {
    const std::vector<double> u{0.3, -0.4};
    const auto grad = t.grad(u);
    REQUIRE(grad.size() == 2);
    for (int k = 0; k < 2; ++k) {
      auto up = u, um = u;
      up[k] += h;
      um[k] -= h;
      const double fd = (t.value(up) - t.value(um)) / (2.0 * h);
      CHECK(grad[k] == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("folded trigonometric means match direct quadrature") {
  // E|cos(2 pi Y)|, E|sin(2 pi Y)| for Y ~ N(0, s2); frozen quadrature values.
  CHECK(rqnn::folded_cos_mean(0.01) == doctest::Approx(0.8257429819223593).epsilon(1e-9));
  CHECK(rqnn::folded_sin_mean(0.01) == doctest::Approx(0.4402815670689916).epsilon(1e-9));
  CHECK(rqnn::folded_cos_mean(0.1) == doctest::Approx(0.6367778014736177).epsilon(1e-9));
  CHECK(rqnn::folded_sin_mean(0.1) == doctest::Approx(0.6364617432488147).epsilon(1e-9));
  // Large variance: both approach 2/pi.
  CHECK(rqnn::folded_cos_mean(1.0) == doctest::Approx(2.0 / kPi).epsilon(1e-9));
  CHECK(rqnn::folded_sin_mean(1.0) == doctest::Approx(2.0 / kPi).epsilon(1e-9));
}

TEST_CASE("shifted gaussian splits Fourier mass across both branches") {
  const auto t = rqnn::shifted_gaussian_target(1, 1.0, 1.0, {0.25});
  CHECK(t.mass_re == doctest::Approx(0.8264887158260082).epsilon(1e-8));
  CHECK(t.mass_im == doctest::Approx(0.4394144646231221).epsilon(1e-8));
  // |Re| + |Im| >= |Fhat| pointwise, so the split masses dominate the L1 mass.
  CHECK(t.mass_re + t.mass_im >= t.fhat_l1 - 1e-12);
  CHECK(t.p_real() == doctest::Approx(t.mass_re / (t.mass_re + t.mass_im)).epsilon(1e-12));
  CHECK(t.fhat_l1 == doctest::Approx(1.0).epsilon(1e-12));

  // Pointwise Fourier data: Fhat(xi) = e^{-pi xi^2} (cos - i sin)(2 pi c xi).
  const double xi = 0.37;
  const double env = std::exp(-kPi * xi * xi);
  CHECK(t.fhat_re({xi}) == doctest::Approx(env * std::cos(2.0 * kPi * 0.25 * xi)).epsilon(1e-12));
  CHECK(t.fhat_im({xi}) == doctest::Approx(-env * std::sin(2.0 * kPi * 0.25 * xi)).epsilon(1e-12));
  CHECK(t.sign_re({xi}) == 1);
  CHECK(t.sign_im({xi}) == -1);

  // Branch samplers exist and land in dimension 1.
  rqnn::Rng rng(42);
  CHECK(t.sample_re(rng).size() == 1);
  CHECK(t.sample_im(rng).size() == 1);
}

TEST_CASE("cosine gaussian keeps a real nonnegative transform") {
  const auto t = rqnn::cosine_gaussian_target(1, 0.8, 1.0, {0.5});
  CHECK(t.fhat_l1 == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(t.mass_re == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(t.mass_im == doctest::Approx(0.0).epsilon(1e-12));
  for (const double xi : {-1.2, -0.4, 0.0, 0.3, 0.9}) {
    CHECK(t.fhat_re({xi}) >= 0.0);
    CHECK(t.sign_re({xi}) >= 0);
  }
  // Mixture of displaced Gaussians at +-0.5.
  const double peak0 = t.fhat_re({0.5});
  const double peak1 = t.fhat_re({-0.5});
  CHECK(peak0 == doctest::Approx(peak1).epsilon(1e-12));
  CHECK(t.value({0.2}) ==
        doctest::Approx(0.8 * std::exp(-kPi * 0.04) * std::cos(2.0 * kPi * 0.5 * 0.2))
            .epsilon(1e-12));
}

TEST_CASE("squared-error constants from declared moments") {
  const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
  CHECK(rqnn::barron_l2_constant(t) == doctest::Approx(1.0 + 2.0 * kPi).epsilon(1e-10));
  CHECK(rqnn::barron_l2_constant_randomized(t) ==
        doctest::Approx(3.0 * (1.0 + 2.0 * kPi)).epsilon(1e-10));
}

TEST_CASE("sup-error constant from quadrature moments") {
  const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
  // Independent reconstruction: quadrature moments plugged into the formula.
  const auto fhat = [&](double xi) { return t.fhat_re({xi}); };
  const double w = quad1d(fhat);
  const double i2 = quad1d([&](double xi) { return xi * xi * fhat(xi); });
  const double i4 = quad1d([&](double xi) { return xi * xi * xi * xi * fhat(xi); });
  const double m = 1.0;
  const double want = 2.0 * (kPi + 1.0) * w +
                      (8.0 * kPi * m + 4.0 * kPi * kPi) * std::sqrt(1.0) * std::sqrt(w * i2) +
                      16.0 * m * kPi * kPi * 1.0 * std::sqrt(w * i4);
  CHECK(rqnn::barron_sup_constant(t, m) == doctest::Approx(want).epsilon(1e-8));
  CHECK(rqnn::barron_sup_constant(t, m) == doctest::Approx(77.59049309304723).epsilon(1e-8));
}

TEST_CASE("moment accessor covers exactly the declared orders") {
  const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
  CHECK(t.moment(2) == doctest::Approx(t.i2).epsilon(1e-15));
  CHECK(t.moment(4) == doctest::Approx(t.i4).epsilon(1e-15));
  CHECK_THROWS_AS(t.moment(3), std::invalid_argument);
}

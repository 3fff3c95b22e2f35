#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "rqnn/errors.hpp"
#include "rqnn/linalg.hpp"
#include "rqnn/qnn.hpp"
#include "rqnn/sampler.hpp"
#include "rqnn/targets.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("real-transform target uses only the cosine branch") {
  const auto t = rqnn::gaussian_target(2, 1.0, 1.0);
  const double R = 1.5;
  const auto circ = rqnn::sample_theta(t, 64, R, 99);
  REQUIRE(circ.n() == 64);
  circ.validate();
  const double gamma_want = std::acos(1.0 / R);  // W = fhat_l1 = 1 for every unit
  for (const auto& unit : circ.units) {
    CHECK(unit.b == 0.0);
    CHECK(unit.gamma == doctest::Approx(gamma_want).epsilon(1e-14));
    REQUIRE(unit.a.size() == 2);
  }
}

TEST_CASE("same seed reproduces the draw, different seed changes it") {
  const auto t = rqnn::shifted_gaussian_target(1, 1.0, 1.0, {0.25});
  const auto c1 = rqnn::sample_theta(t, 16, 1.5, 7);
  const auto c2 = rqnn::sample_theta(t, 16, 1.5, 7);
  const auto c3 = rqnn::sample_theta(t, 16, 1.5, 8);
  REQUIRE(c1.n() == c2.n());
  bool identical = true, differs = false;
  for (int i = 0; i < c1.n(); ++i) {
    if (c1.units[i].a != c2.units[i].a || c1.units[i].b != c2.units[i].b ||
        c1.units[i].gamma != c2.units[i].gamma) {
      identical = false;
    }
    if (c1.units[i].a != c3.units[i].a) differs = true;
  }
  CHECK(identical);
  CHECK(differs);
}

TEST_CASE("shifted target populates both phase branches") {
  const auto t = rqnn::shifted_gaussian_target(1, 1.0, 1.0, {0.25});
  const auto circ = rqnn::sample_theta(t, 200, 1.5, 31);
  int re_units = 0, im_units = 0;
  for (const auto& unit : circ.units) {
    if (unit.b == 0.0) re_units += 1;
    if (unit.b == 0.5 * kPi) im_units += 1;
  }
  CHECK(re_units + im_units == 200);
  CHECK(re_units > 30);
  CHECK(im_units > 30);
}

TEST_CASE("single-unit estimator is unbiased for the target value") {
  // Mean of R cos(gamma) cos(b + a.u) over many independent single-unit
  // draws approaches target(u); standard error at 20000 draws is ~0.01.
  const std::vector<double> u{0.3};
  const double want_gauss = 0.7537132119564671;
  {
    const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
    double acc = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
      const auto circ = rqnn::sample_theta(t, 1, 1.2, 1000 + i);
      acc += rqnn::eval_component(circ, u, {});
    }
    CHECK(acc / draws == doctest::Approx(want_gauss).epsilon(0.05));
  }
  {
    const auto t = rqnn::shifted_gaussian_target(1, 1.0, 1.0, {0.25});
    const double want = t.value(u);
    double acc = 0.0;
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) {
      const auto circ = rqnn::sample_theta(t, 1, 1.5, 500000 + i);
      acc += rqnn::eval_component(circ, u, {});
    }
    CHECK(acc / draws == doctest::Approx(want).epsilon(0.05));
  }
}

TEST_CASE("amplitude scale below the Fourier mass is rejected") {
  const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
  CHECK_THROWS_AS(rqnn::sample_theta(t, 4, 0.5, 1), std::invalid_argument);
  const auto shifted = rqnn::shifted_gaussian_target(1, 1.0, 1.0, {0.25});
  // mass_re + mass_im ~= 1.266 exceeds fhat_l1 = 1; R must cover the sum.
  CHECK_THROWS_AS(rqnn::sample_theta(shifted, 4, 1.1, 1), std::invalid_argument);
  CHECK_NOTHROW(rqnn::sample_theta(shifted, 4, 1.27, 1));
}

TEST_CASE("weight norm bound evaluates the declared formula") {
  const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
  CHECK(rqnn::weight_norm_bound(t, 3, 2) == doctest::Approx(7.519884823893).epsilon(1e-10));
  CHECK(rqnn::weight_norm_bound(t, 3, 4) == doctest::Approx(5.713876841183744).epsilon(1e-10));
  CHECK_THROWS_AS(rqnn::weight_norm_bound(t, 3, 3), std::invalid_argument);
}

TEST_CASE("bounded draw accepts only sets under the weight bound") {
  const auto t = rqnn::gaussian_target(2, 1.0, 1.0);
  const double bound = rqnn::weight_norm_bound(t, 32, 2);
  const auto res = rqnn::sample_theta_bounded(t, 32, 2, 1.5, 2026);
  CHECK(res.attempts >= 1);
  for (const auto& unit : res.circ.units) {
    CHECK(rqnn::norm2(unit.a) <= bound + 1e-12);
  }
}

TEST_CASE("bounded draw with no rejection reproduces the plain draw") {
  // At large n the bound is far above typical norms, so the first set is
  // accepted and the draw path coincides with sample_theta.
  const auto t = rqnn::gaussian_target(1, 1.0, 1.0);
  const auto bounded = rqnn::sample_theta_bounded(t, 64, 2, 1.5, 404);
  CHECK(bounded.attempts == 1);
  const auto plain = rqnn::sample_theta(t, 64, 1.5, 404);
  for (int i = 0; i < 64; ++i) {
    CHECK(bounded.circ.units[i].a == plain.units[i].a);
    CHECK(bounded.circ.units[i].b == plain.units[i].b);
    CHECK(bounded.circ.units[i].gamma == plain.units[i].gamma);
  }
}

#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rqnn/circuit.hpp"
#include "rqnn/errors.hpp"
#include "rqnn/rng.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

rqnn::CircuitParams random_circuit(int n, int dim, rqnn::Rng& rng) {
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  std::uniform_real_distribution<double> offset(-kPi, kPi);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  rqnn::CircuitParams circ;
  circ.R = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
  circ.units.resize(n);
  for (auto& unit : circ.units) {
    unit.a.resize(dim);
    for (auto& w : unit.a) w = weight(rng);
    unit.b = offset(rng);
    unit.gamma = angle(rng);
  }
  return circ;
}

std::vector<double> random_point(int dim, rqnn::Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> p(dim);
  for (auto& v : p) v = u(rng);
  return p;
}

}  // namespace

TEST_CASE("register padding bookkeeping") {
  CHECK(rqnn::padded_dim(1) == 4);
  CHECK(rqnn::padded_dim(2) == 8);
  CHECK(rqnn::padded_dim(3) == 16);
  CHECK(rqnn::padded_dim(4) == 16);
  CHECK(rqnn::padded_dim(5) == 32);
  CHECK(rqnn::padded_dim(64) == 256);
  CHECK(rqnn::padding_blocks(3) == 1);
  CHECK(rqnn::padding_blocks(4) == 0);
  CHECK(rqnn::padding_blocks(5) == 3);
  CHECK(rqnn::register_qubits(1) == 2);
  CHECK(rqnn::register_qubits(3) == 4);
  CHECK(rqnn::register_qubits(64) == 8);
}

TEST_CASE("block unitary is unitary and apply matches dense") {
  rqnn::Rng rng(321);
  for (const int n : {1, 2, 3, 5}) {
    const auto circ = random_circuit(n, 3, rng);
    const auto x = random_point(2, rng);
    const auto z = random_point(1, rng);
    const auto u = rqnn::build_block_unitary(circ, x, z);
    REQUIRE(u.dim == rqnn::padded_dim(n));
    CHECK(rqnn::unitarity_defect(u.dense(), u.dim) < 1e-12);

    rqnn::StateVector state;
    state.amps.resize(u.dim);
    rqnn::Rng srng(99);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    double norm = 0.0;
    for (auto& a : state.amps) {
      a = {amp(srng), amp(srng)};
      norm += std::norm(a);
    }
    for (auto& a : state.amps) a /= std::sqrt(norm);

    auto applied = state;
    u.apply(applied);
    const auto dense = u.dense();
    for (std::size_t r = 0; r < u.dim; ++r) {
      rqnn::cdouble acc = 0.0;
      for (std::size_t c = 0; c < u.dim; ++c) acc += dense[r * u.dim + c] * state.amps[c];
      CHECK(std::abs(acc - applied.amps[r]) < 1e-13);
    }
  }
}

TEST_CASE("prepared superposition puts 1/sqrt(n) on every block base index") {
  rqnn::Rng rng(7);
  for (const int n : {1, 2, 3, 4, 6}) {
    const auto circ = random_circuit(n, 2, rng);
    const auto state = rqnn::prepared_state(circ, rqnn::PrepMethod::reflection);
    REQUIRE(state.amps.size() == rqnn::padded_dim(n));
    const double want = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t k = 0; k < state.amps.size(); ++k) {
      const bool on_block = k % 4 == 0 && k / 4 < static_cast<std::size_t>(n);
      const double target = on_block ? want : 0.0;
      CHECK(std::abs(state.amps[k] - rqnn::cdouble(target, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("hadamard preparation works exactly when no padding is needed") {
  rqnn::Rng rng(11);
  const auto circ = random_circuit(4, 2, rng);
  const auto refl = rqnn::prepared_state(circ, rqnn::PrepMethod::reflection);
  const auto had = rqnn::prepared_state(circ, rqnn::PrepMethod::hadamard);
  REQUIRE(refl.amps.size() == had.amps.size());
  for (std::size_t k = 0; k < refl.amps.size(); ++k) {
    CHECK(std::abs(refl.amps[k] - had.amps[k]) < 1e-12);
  }

  const auto padded = random_circuit(3, 2, rng);
  CHECK_THROWS_AS(rqnn::prepared_state(padded, rqnn::PrepMethod::hadamard),
                  rqnn::UnsupportedMethod);
}

TEST_CASE("preparation matrices are unitary") {
  rqnn::Rng rng(13);
  for (const int n : {1, 2, 3, 4}) {
    const auto circ = random_circuit(n, 2, rng);
    const auto v = rqnn::build_state_prep(circ, rqnn::PrepMethod::reflection);
    CHECK(rqnn::unitarity_defect(v, rqnn::padded_dim(n)) < 1e-12);
    if (rqnn::padding_blocks(n) == 0) {
      const auto h = rqnn::build_state_prep(circ, rqnn::PrepMethod::hadamard);
      CHECK(rqnn::unitarity_defect(h, rqnn::padded_dim(n)) < 1e-12);
    }
  }
}

TEST_CASE("closed-form class probabilities match dense simulation") {
  rqnn::Rng rng(2024);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int nx = 1 + static_cast<int>(rng() % 3);
    const int nz = 1 + static_cast<int>(rng() % 3);
    const auto circ = random_circuit(n, nx + nz, rng);
    const auto x = random_point(nx, rng);
    const auto z = random_point(nz, rng);
    const auto dense = rqnn::class_probs_dense(circ, x, z);
    const auto closed = rqnn::class_probs_closed_form(circ, x, z);
    double sum_dense = 0.0, sum_closed = 0.0;
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(dense[k] - closed[k]) < 1e-12);
      sum_dense += dense[k];
      sum_closed += closed[k];
    }
    CHECK(std::abs(sum_dense - 1.0) < 1e-12);
    CHECK(std::abs(sum_closed - 1.0) < 1e-12);
  }
}

TEST_CASE("P0 + P2 does not depend on the input") {
  rqnn::Rng rng(5);
  const auto circ = random_circuit(4, 3, rng);
  double expected = 0.5;
  for (const auto& unit : circ.units) {
    expected += 0.5 * std::cos(unit.gamma) / circ.n();
  }
  for (int rep = 0; rep < 25; ++rep) {
    const auto x = random_point(2, rng);
    const auto z = random_point(1, rng);
    const auto p = rqnn::class_probs_closed_form(circ, x, z);
    CHECK(std::abs(p[0] + p[2] - expected) < 1e-12);
  }
}

TEST_CASE("single unit class probabilities in closed form by hand") {
  rqnn::CircuitParams circ;
  circ.R = 1.0;
  circ.units.resize(1);
  circ.units[0].a = {1.0};
  circ.units[0].b = 0.25;
  circ.units[0].gamma = 2.0 * kPi / 3.0;  // cos^2(g/2) = 1/4
  const std::vector<double> x{0.5};
  const double u = 0.25 + 0.5;
  const double c2 = std::cos(0.5 * u) * std::cos(0.5 * u);
  const auto p = rqnn::class_probs_closed_form(circ, x, {});
  CHECK(p[0] == doctest::Approx(0.25 * c2).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(0.75 * c2).epsilon(1e-14));
  CHECK(p[2] == doctest::Approx(0.25 * (1.0 - c2)).epsilon(1e-14));
  CHECK(p[3] == doctest::Approx(0.75 * (1.0 - c2)).epsilon(1e-14));
}

TEST_CASE("dense oracle rejects oversized registers") {
  rqnn::Rng rng(17);
  const auto circ = random_circuit(65, 2, rng);
  CHECK_THROWS_AS(rqnn::build_block_unitary(circ, {0.1}, {0.2}), std::invalid_argument);
}

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "rqnn/parallel.hpp"
#include "rqnn/qnn.hpp"
#include "rqnn/reservoir.hpp"
#include "rqnn/rng.hpp"
#include "rqnn/sampler.hpp"
#include "rqnn/targets.hpp"

namespace {

rqnn::CircuitParams bench_circuit(int n) {
  const auto target = rqnn::gaussian_target(2, 1.0, 1.0);
  return rqnn::sample_theta(target, n, 1.25, 42);
}

std::vector<std::vector<double>> bench_points(std::size_t count) {
  rqnn::Rng rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> pts(count, std::vector<double>(2));
  for (auto& p : pts) {
    p[0] = u(rng);
    p[1] = u(rng);
  }
  return pts;
}

void eval_closed_form(benchmark::State& state) {
  const auto circ = bench_circuit(static_cast<int>(state.range(0)));
  const std::vector<double> x{0.3, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqnn::eval_component(circ, x, {}));
  }
}
BENCHMARK(eval_closed_form)->Arg(16)->Arg(64)->Arg(256);

void eval_dense_reference(benchmark::State& state) {
  const auto circ = bench_circuit(static_cast<int>(state.range(0)));
  const std::vector<double> x{0.3, -0.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rqnn::eval_component(circ, x, {}, rqnn::EvalPath::dense));
  }
}
BENCHMARK(eval_dense_reference)->Arg(16)->Arg(64);

void batch_eval(benchmark::State& state, rqnn::ExecMode mode) {
  const auto circ = bench_circuit(128);
  const auto pts = bench_points(4096);
  for (auto _ : state) {
    const double total = rqnn::sum_indexed(pts.size(), mode, [&](std::size_t i) {
      return rqnn::eval_component(circ, pts[i], {});
    });
    benchmark::DoNotOptimize(total);
  }
}
void batch_eval_serial(benchmark::State& state) {
  batch_eval(state, rqnn::ExecMode::serial);
}
void batch_eval_parallel(benchmark::State& state) {
  batch_eval(state, rqnn::ExecMode::parallel);
}
BENCHMARK(batch_eval_serial);
BENCHMARK(batch_eval_parallel);

void reservoir_run(benchmark::State& state) {
  const auto target = rqnn::gaussian_target(2, 0.1, 1.0);
  rqnn::ReservoirSystem sys;
  sys.theta.state_dim = 1;
  sys.theta.input_dim = 1;
  sys.theta.circuits.push_back(
      rqnn::sample_theta(target, static_cast<int>(state.range(0)), 0.1, 11));
  rqnn::Rng rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<std::vector<double>> z(64, std::vector<double>(1));
  for (auto& zt : z) zt[0] = u(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rqnn::run(sys, z, {0.0}));
  }
}
BENCHMARK(reservoir_run)->Arg(64)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rqnn/parallel.hpp"

namespace rqnn {

// Axis-aligned integration domain; the uniform measure on it is the one all
// L2-style errors below are taken against.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dim() const { return lo.size(); }
  double volume() const;
  void validate() const;
};

Box centered_box(std::size_t dim, double half_width);

using ScalarField = std::function<double(const std::vector<double>&)>;
// Gradient field: writes df/du_k into grad[k]; grad is pre-sized to box dim.
using GradientField =
    std::function<void(const std::vector<double>&, std::vector<double>&)>;

struct MetricOptions {
  std::size_t mc_points = 4096;
  std::uint64_t seed = 1;
  std::size_t sup_grid = 257;     // per-axis resolution for dim <= 2
  std::size_t sup_points = 100000;  // low-discrepancy budget for dim > 2
  ExecMode mode = ExecMode::parallel;
};

// Monte Carlo estimate of E_mu[(f-g)^2], mu uniform on the box. Points are
// drawn serially from one stream, evaluated in parallel, reduced in index
// order, so the result is identical across thread counts.
double error_l2(const ScalarField& f, const ScalarField& g, const Box& box,
                const MetricOptions& opt);

// error_l2 plus the same estimate for every partial derivative pair.
double error_joint(const ScalarField& f, const GradientField& fg,
                   const ScalarField& g, const GradientField& gg,
                   const Box& box, const MetricOptions& opt);

// Sup of |f-g| over a deterministic point set: a full tensor grid for
// dim <= 2, a Halton set (plus box corners) for higher dimensions.
double error_sup(const ScalarField& f, const ScalarField& g, const Box& box,
                 const MetricOptions& opt);

// Deterministic low-discrepancy sequence used by error_sup; exposed for
// tests. Index i starts at 0; bases are the first dim primes.
std::vector<double> halton_point(std::size_t index, std::size_t dim);

}  // namespace rqnn

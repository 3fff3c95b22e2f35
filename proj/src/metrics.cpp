#include "rqnn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rqnn/rng.hpp"

namespace rqnn {

double Box::volume() const {
  double v = 1.0;
  for (std::size_t k = 0; k < lo.size(); ++k) v *= hi[k] - lo[k];
  return v;
}

void Box::validate() const {
  if (lo.empty() || lo.size() != hi.size()) {
    throw std::invalid_argument("box: empty or mismatched bounds");
  }
  for (std::size_t k = 0; k < lo.size(); ++k) {
    if (!(lo[k] < hi[k])) {
      throw std::invalid_argument("box: lo must be strictly below hi");
    }
  }
}

Box centered_box(std::size_t dim, double half_width) {
  Box box;
  box.lo.assign(dim, -half_width);
  box.hi.assign(dim, half_width);
  box.validate();
  return box;
}

namespace {

// All MC points come from one serial stream so estimates are reproducible
// and independent of the execution mode used for evaluation.
std::vector<std::vector<double>> draw_points(const Box& box, std::size_t count,
                                             std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> pts(count);
  const std::size_t dim = box.dim();
  for (std::size_t i = 0; i < count; ++i) {
    pts[i].resize(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      pts[i][k] = box.lo[k] + (box.hi[k] - box.lo[k]) * unit(rng);
    }
  }
  return pts;
}

}  // namespace

double error_l2(const ScalarField& f, const ScalarField& g, const Box& box,
                const MetricOptions& opt) {
  box.validate();
  if (opt.mc_points == 0) throw std::invalid_argument("error_l2: mc_points == 0");
  const auto pts = draw_points(box, opt.mc_points, opt.seed);
  const double sum = sum_indexed(pts.size(), opt.mode, [&](std::size_t i) {
    const double d = f(pts[i]) - g(pts[i]);
    return d * d;
  });
  return sum / static_cast<double>(pts.size());
}

double error_joint(const ScalarField& f, const GradientField& fg,
                   const ScalarField& g, const GradientField& gg,
                   const Box& box, const MetricOptions& opt) {
  box.validate();
  if (opt.mc_points == 0) {
    throw std::invalid_argument("error_joint: mc_points == 0");
  }
  const auto pts = draw_points(box, opt.mc_points, opt.seed);
  const std::size_t dim = box.dim();
  const double sum = sum_indexed(pts.size(), opt.mode, [&](std::size_t i) {
    const double d = f(pts[i]) - g(pts[i]);
    double acc = d * d;
    std::vector<double> gf(dim), gg_(dim);
    fg(pts[i], gf);
    gg(pts[i], gg_);
    for (std::size_t k = 0; k < dim; ++k) {
      const double dk = gf[k] - gg_[k];
      acc += dk * dk;
    }
    return acc;
  });
  return sum / static_cast<double>(pts.size());
}

std::vector<double> halton_point(std::size_t index, std::size_t dim) {
  static const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                               23, 29, 31, 37, 41, 43, 47, 53};
  if (dim == 0 || dim > sizeof(primes) / sizeof(primes[0])) {
    throw std::invalid_argument("halton_point: unsupported dimension");
  }
  std::vector<double> u(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const int base = primes[k];
    double value = 0.0;
    double scale = 1.0 / base;
    std::size_t i = index + 1;  // skip the all-zero point
    while (i > 0) {
      value += static_cast<double>(i % base) * scale;
      i /= base;
      scale /= base;
    }
    u[k] = value;
  }
  return u;
}

double error_sup(const ScalarField& f, const ScalarField& g, const Box& box,
                 const MetricOptions& opt) {
  box.validate();
  const std::size_t dim = box.dim();

  std::vector<std::vector<double>> pts;
  if (dim <= 2) {
    const std::size_t res = std::max<std::size_t>(opt.sup_grid, 2);
    if (dim == 1) {
      pts.reserve(res);
      for (std::size_t i = 0; i < res; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(res - 1);
        pts.push_back({box.lo[0] + (box.hi[0] - box.lo[0]) * t});
      }
    } else {
      pts.reserve(res * res);
      for (std::size_t i = 0; i < res; ++i) {
        const double ti = static_cast<double>(i) / static_cast<double>(res - 1);
        for (std::size_t j = 0; j < res; ++j) {
          const double tj =
              static_cast<double>(j) / static_cast<double>(res - 1);
          pts.push_back({box.lo[0] + (box.hi[0] - box.lo[0]) * ti,
                         box.lo[1] + (box.hi[1] - box.lo[1]) * tj});
        }
      }
    }
  } else {
    const std::size_t budget = std::max<std::size_t>(opt.sup_points, 1);
    pts.reserve(budget + (1u << std::min<std::size_t>(dim, 16)));
    for (std::size_t i = 0; i < budget; ++i) {
      auto u = halton_point(i, dim);
      for (std::size_t k = 0; k < dim; ++k) {
        u[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * u[k];
      }
      pts.push_back(std::move(u));
    }
    // Corners pick up the extremes low-discrepancy interiors can miss.
    for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
      std::vector<double> corner(dim);
      for (std::size_t k = 0; k < dim; ++k) {
        corner[k] = ((mask >> k) & 1u) ? box.hi[k] : box.lo[k];
      }
      pts.push_back(std::move(corner));
    }
  }

  return max_indexed(pts.size(), opt.mode, [&](std::size_t i) {
    return std::abs(f(pts[i]) - g(pts[i]));
  });
}

}  // namespace rqnn

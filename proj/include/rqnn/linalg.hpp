#pragma once

#include <cstddef>
#include <vector>

namespace rqnn {

// Dense real matrix, row major. Small sizes only (Jacobians, readouts,
// state preprocessors); heavy solves go through Eigen in regression.cpp.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix identity(std::size_t n);
};

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v);
Matrix matmul(const Matrix& lhs, const Matrix& rhs);
Matrix transpose(const Matrix& m);

double norm2(const std::vector<double>& v);
double dot(const std::vector<double>& u, const std::vector<double>& v);

// Least-squares slope of y against x (used for log-log rate fits).
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rqnn

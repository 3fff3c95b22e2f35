#include "rqnn/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace rqnn {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> matvec(const Matrix& m, const std::vector<double>& v) {
  if (v.size() != m.cols) throw std::invalid_argument("matvec: size mismatch");
  std::vector<double> out(m.rows, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double s = 0.0;
    for (std::size_t c = 0; c < m.cols; ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.cols != rhs.rows) throw std::invalid_argument("matmul: size mismatch");
  Matrix out(lhs.rows, rhs.cols);
  for (std::size_t r = 0; r < lhs.rows; ++r)
    for (std::size_t k = 0; k < lhs.cols; ++k) {
      const double l = lhs(r, k);
      for (std::size_t c = 0; c < rhs.cols; ++c) out(r, c) += l * rhs(k, c);
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols, m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out(c, r) = m(r, c);
  return out;
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dot(const std::vector<double>& u, const std::vector<double>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_slope: need >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

}  // namespace rqnn

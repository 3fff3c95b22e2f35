#pragma once

#include <array>
#include <complex>
#include <vector>

namespace rqnn {

using cdouble = std::complex<double>;

enum class Axis { x, y, z };

// 2x2 complex matrix, row major.
struct Gate2 {
  std::array<cdouble, 4> m{};

  cdouble& operator()(int r, int c) { return m[2 * r + c]; }
  const cdouble& operator()(int r, int c) const { return m[2 * r + c]; }
};

Gate2 operator*(const Gate2& lhs, const Gate2& rhs);

// Single-qubit rotation by `angle` about `axis`:
//   x: [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
//   y: [[cos(t/2), -sin(t/2)],   [sin(t/2),     cos(t/2)]]
//   z: diag(exp(-i t/2), exp(i t/2))
// Throws std::invalid_argument if angle is not finite.
Gate2 make_rotation(Axis axis, double angle);

Gate2 hadamard();

// Input-encoding rotation of one recurrent unit: the x rotation by
//   delta = -b - dot(a, concat(x, z)),
// which equals the sandwich H Rz(-b) Rz(-a_{N+d} z_d) ... Rz(-a_1 x_1) H.
// Requires a.size() == x.size() + z.size() and finite entries everywhere.
Gate2 encoding_rotation(const std::vector<double>& a, double b,
                        const std::vector<double>& x,
                        const std::vector<double>& z);

// Encoding angle delta of the same rotation.
double encoding_angle(const std::vector<double>& a, double b,
                      const std::vector<double>& x,
                      const std::vector<double>& z);

// 4x4 complex matrix, row major.
using Gate4 = std::array<cdouble, 16>;

// Kronecker product: out[(2i+k)(2j+l)] = p(i,j) q(k,l). The first factor
// addresses the high bit of the 2-bit index.
Gate4 kron(const Gate2& p, const Gate2& q);

}  // namespace rqnn

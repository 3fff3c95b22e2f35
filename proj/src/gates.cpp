#include "rqnn/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace rqnn {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " is not finite");
}

}  // namespace

Gate2 operator*(const Gate2& lhs, const Gate2& rhs) {
  Gate2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
  return out;
}

Gate2 make_rotation(Axis axis, double angle) {
  require_finite(angle, "rotation angle");
  const double ch = std::cos(0.5 * angle);
  const double sh = std::sin(0.5 * angle);
  Gate2 g;
  switch (axis) {
    case Axis::x:
      g(0, 0) = ch;
      g(0, 1) = cdouble(0.0, -sh);
      g(1, 0) = cdouble(0.0, -sh);
      g(1, 1) = ch;
      break;
    case Axis::y:
      g(0, 0) = ch;
      g(0, 1) = -sh;
      g(1, 0) = sh;
      g(1, 1) = ch;
      break;
    case Axis::z:
      g(0, 0) = cdouble(ch, -sh);
      g(0, 1) = 0.0;
      g(1, 0) = 0.0;
      g(1, 1) = cdouble(ch, sh);
      break;
  }
  return g;
}

Gate2 hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Gate2 g;
  g(0, 0) = s;
  g(0, 1) = s;
  g(1, 0) = s;
  g(1, 1) = -s;
  return g;
}

double encoding_angle(const std::vector<double>& a, double b,
                      const std::vector<double>& x,
                      const std::vector<double>& z) {
  if (a.size() != x.size() + z.size())
    throw std::invalid_argument("encoding_angle: weight length != state dim + input dim");
  require_finite(b, "offset b");
  double delta = -b;
  std::size_t k = 0;
  for (double v : x) {
    require_finite(v, "state entry");
    require_finite(a[k], "weight entry");
    delta -= a[k++] * v;
  }
  for (double v : z) {
    require_finite(v, "input entry");
    require_finite(a[k], "weight entry");
    delta -= a[k++] * v;
  }
  return delta;
}

Gate2 encoding_rotation(const std::vector<double>& a, double b,
                        const std::vector<double>& x,
                        const std::vector<double>& z) {
  return make_rotation(Axis::x, encoding_angle(a, b, x, z));
}

Gate4 kron(const Gate2& p, const Gate2& q) {
  Gate4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          out[static_cast<std::size_t>((2 * i + k) * 4 + (2 * j + l))] = p(i, j) * q(k, l);
  return out;
}

}  // namespace rqnn

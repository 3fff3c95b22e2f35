#include "rqnn/circuit.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rqnn/errors.hpp"

namespace rqnn {

namespace {

constexpr int kDenseMaxUnits = 64;

void require_dense_scale(const CircuitParams& circ) {
  if (circ.n() > kDenseMaxUnits)
    throw std::invalid_argument("dense path supports n <= " +
                                std::to_string(kDenseMaxUnits) + ", got n = " +
                                std::to_string(circ.n()));
}

void require_input_dims(const CircuitParams& circ, const std::vector<double>& x,
                        const std::vector<double>& z) {
  if (static_cast<std::size_t>(circ.dim()) != x.size() + z.size())
    throw std::invalid_argument("circuit weight length != state dim + input dim");
}

}  // namespace

void BlockUnitary::apply(StateVector& state) const {
  if (state.dim() != dim) throw std::invalid_argument("BlockUnitary::apply: dim mismatch");
  for (std::size_t blk = 0; blk < blocks.size(); ++blk) {
    const Gate4& g = blocks[blk];
    cdouble* seg = state.amps.data() + 4 * blk;
    cdouble out[4];
    for (int r = 0; r < 4; ++r) {
      cdouble s(0.0, 0.0);
      for (int c = 0; c < 4; ++c) s += g[static_cast<std::size_t>(4 * r + c)] * seg[c];
      out[r] = s;
    }
    for (int r = 0; r < 4; ++r) seg[r] = out[r];
  }
  // Remaining blocks are identity.
}

std::vector<cdouble> BlockUnitary::dense() const {
  std::vector<cdouble> m(dim * dim, cdouble(0.0, 0.0));
  for (std::size_t k = 0; k < dim; ++k) m[k * dim + k] = 1.0;
  for (std::size_t blk = 0; blk < blocks.size(); ++blk)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        m[(4 * blk + static_cast<std::size_t>(r)) * dim + 4 * blk + static_cast<std::size_t>(c)] =
            blocks[blk][static_cast<std::size_t>(4 * r + c)];
  return m;
}

BlockUnitary build_block_unitary(const CircuitParams& circ, const std::vector<double>& x,
                                 const std::vector<double>& z) {
  circ.validate();
  require_dense_scale(circ);
  require_input_dims(circ, x, z);
  BlockUnitary u;
  u.dim = padded_dim(circ.n());
  u.blocks.reserve(circ.units.size());
  for (const UnitParams& unit : circ.units)
    u.blocks.push_back(kron(encoding_rotation(unit.a, unit.b, x, z),
                            make_rotation(Axis::y, unit.gamma)));
  return u;
}

StateVector prepared_state(const CircuitParams& circ, PrepMethod method) {
  circ.validate();
  require_dense_scale(circ);
  const std::size_t dim = padded_dim(circ.n());
  const int n = circ.n();
  StateVector state;
  state.amps.assign(dim, cdouble(0.0, 0.0));
  if (method == PrepMethod::hadamard && padding_blocks(n) != 0)
    throw UnsupportedMethod("hadamard preparation needs padded_dim == 4n (n a power of two)");
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) state.amps[4 * static_cast<std::size_t>(i)] = amp;
  return state;
}

std::vector<cdouble> build_state_prep(const CircuitParams& circ, PrepMethod method) {
  circ.validate();
  require_dense_scale(circ);
  const std::size_t dim = padded_dim(circ.n());
  const int n = circ.n();
  std::vector<cdouble> v(dim * dim, cdouble(0.0, 0.0));
  if (method == PrepMethod::hadamard) {
    if (padding_blocks(n) != 0)
      throw UnsupportedMethod("hadamard preparation needs padded_dim == 4n (n a power of two)");
    // Hadamards on the address qubits, identity on the two block qubits:
    // entry ((4p + m), (4q + m')) = delta_{m m'} 2^{-(Q-2)/2} (-1)^{p.q}.
    const int addr_qubits = register_qubits(n) - 2;
    const double scale = std::pow(2.0, -0.5 * addr_qubits);
    const std::size_t n_addr = dim / 4;
    for (std::size_t p = 0; p < n_addr; ++p)
      for (std::size_t q = 0; q < n_addr; ++q) {
        const int parity = std::popcount(p & q) % 2;
        const double val = parity ? -scale : scale;
        for (std::size_t m = 0; m < 4; ++m) v[(4 * p + m) * dim + 4 * q + m] = val;
      }
    return v;
  }
  // Reflection 2|phi><phi| - I with phi = (e_0 + psi) / sqrt(2 (1 + <0|psi>)).
  std::vector<double> phi(dim, 0.0);
  const double overlap = 1.0 / std::sqrt(static_cast<double>(n));
  const double scale = 1.0 / std::sqrt(2.0 * (1.0 + overlap));
  phi[0] += scale;
  for (int i = 0; i < n; ++i) phi[4 * static_cast<std::size_t>(i)] += overlap * scale;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) v[r * dim + c] = 2.0 * phi[r] * phi[c];
    v[r * dim + r] -= 1.0;
  }
  return v;
}

std::array<double, 4> class_probs_dense(const CircuitParams& circ,
                                        const std::vector<double>& x,
                                        const std::vector<double>& z, PrepMethod method) {
  const std::vector<cdouble> v = build_state_prep(circ, method);
  const std::size_t dim = padded_dim(circ.n());
  StateVector state;
  state.amps.resize(dim);
  for (std::size_t r = 0; r < dim; ++r) state.amps[r] = v[r * dim];  // V e_0
  build_block_unitary(circ, x, z).apply(state);
  return measure_class_probs(state);
}

std::array<double, 4> class_probs_closed_form(const CircuitParams& circ,
                                              const std::vector<double>& x,
                                              const std::vector<double>& z) {
  circ.validate();
  require_input_dims(circ, x, z);
  std::array<double, 4> probs{0.0, 0.0, 0.0, 0.0};
  for (const UnitParams& unit : circ.units) {
    const double u = -encoding_angle(unit.a, unit.b, x, z);  // b + a.(x,z)
    const double cu = std::cos(0.5 * u), su = std::sin(0.5 * u);
    const double cg = std::cos(0.5 * unit.gamma), sg = std::sin(0.5 * unit.gamma);
    probs[0] += cg * cg * cu * cu;
    probs[1] += sg * sg * cu * cu;
    probs[2] += cg * cg * su * su;
    probs[3] += sg * sg * su * su;
  }
  const double inv_n = 1.0 / static_cast<double>(circ.n());
  for (double& p : probs) p *= inv_n;
  return probs;
}

double unitarity_defect(const std::vector<cdouble>& m, std::size_t dim) {
  if (m.size() != dim * dim) throw std::invalid_argument("unitarity_defect: size mismatch");
  double worst = 0.0;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      cdouble s(0.0, 0.0);
      for (std::size_t k = 0; k < dim; ++k) s += m[r * dim + k] * std::conj(m[c * dim + k]);
      if (r == c) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

}  // namespace rqnn

#pragma once

#include <array>
#include <vector>

#include "rqnn/gates.hpp"
#include "rqnn/params.hpp"
#include "rqnn/statevector.hpp"

namespace rqnn {

// Block-diagonal state-update unitary for one circuit at input (x, z):
// one 4x4 block per unit (encoding rotation (x) y rotation by gamma^i),
// then identity blocks padding the register to padded_dim(n).
struct BlockUnitary {
  std::vector<Gate4> blocks;  // data blocks only; padding blocks are identity
  std::size_t dim = 0;        // padded_dim(n)

  void apply(StateVector& state) const;  // O(16 n)
  std::vector<cdouble> dense() const;    // row-major dim x dim
};

// Dense constructions are reference oracles; they are limited to n <= 64
// (register dimension <= 256) and throw std::invalid_argument beyond that.
BlockUnitary build_block_unitary(const CircuitParams& circ,
                                 const std::vector<double>& x,
                                 const std::vector<double>& z);

enum class PrepMethod { reflection, hadamard };

// Preparation unitary V with V e_0 = (1/sqrt n) sum_i e_{4i}.
//  - reflection: V = 2|phi><phi| - I with phi proportional to e_0 + psi;
//    valid for every n (for n = 1, psi = e_0 and V fixes e_0).
//  - hadamard: Hadamards on the register's address qubits; only valid when
//    padded_dim(n) == 4n, otherwise throws UnsupportedMethod.
std::vector<cdouble> build_state_prep(const CircuitParams& circ, PrepMethod method);

// The prepared superposition V e_0 itself.
StateVector prepared_state(const CircuitParams& circ, PrepMethod method);

// Reference path: measurement probabilities via dense simulation of
// U(x, z) V e_0.
std::array<double, 4> class_probs_dense(const CircuitParams& circ,
                                        const std::vector<double>& x,
                                        const std::vector<double>& z,
                                        PrepMethod method = PrepMethod::reflection);

// Fast path: the same four probabilities in closed form, O(n (N+d)),
// no state vector. With u^i = b^i + dot(a^i, (x, z)):
//   P0 = (1/n) sum_i cos^2(gamma^i/2) cos^2(u^i/2)
//   P1 = (1/n) sum_i sin^2(gamma^i/2) cos^2(u^i/2)
//   P2 = (1/n) sum_i cos^2(gamma^i/2) sin^2(u^i/2)
//   P3 = (1/n) sum_i sin^2(gamma^i/2) sin^2(u^i/2)
// P0 + P2 = 1/2 + (1/2n) sum_i cos(gamma^i) is independent of (x, z).
std::array<double, 4> class_probs_closed_form(const CircuitParams& circ,
                                              const std::vector<double>& x,
                                              const std::vector<double>& z);

// max_{jk} |(M M^dag - I)_{jk}| for a row-major dim x dim matrix.
double unitarity_defect(const std::vector<cdouble>& m, std::size_t dim);

}  // namespace rqnn

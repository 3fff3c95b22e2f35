#pragma once

#include <cstddef>
#include <vector>

namespace rqnn {

// Parameters of one recurrent unit: weight vector a over the joint input
// (x, z), offset b, and amplitude angle gamma in [0, 2pi].
struct UnitParams {
  std::vector<double> a;
  double b = 0.0;
  double gamma = 0.0;
};

// Parameters of one QNN component: n units sharing the joint input
// dimension, plus the output scale R > 0.
struct CircuitParams {
  std::vector<UnitParams> units;
  double R = 1.0;

  int n() const { return static_cast<int>(units.size()); }
  int dim() const { return units.empty() ? 0 : static_cast<int>(units[0].a.size()); }

  // Throws std::invalid_argument on inconsistent weight lengths, a
  // non-positive or non-finite R, gamma outside [0, 2pi], or n == 0.
  void validate() const;
};

// Register bookkeeping. Each unit occupies a 4-dimensional block; the
// register is padded to the smallest power of two >= 4n, i.e. to
// 2 + ceil(log2 n) qubits.
std::size_t padded_dim(int n);                 // smallest power of two >= 4n
int padding_blocks(int n);                     // padded_dim/4 - n
int register_qubits(int n);                    // log2(padded_dim)

// N circuits evaluated side by side as one state map: component j comes
// from circuits[j]. All circuits share n, R, and weight length N + d.
struct ThetaBundle {
  std::vector<CircuitParams> circuits;
  int state_dim = 0;  // N
  int input_dim = 0;  // d

  void validate() const;
};

}  // namespace rqnn

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rqnn/linalg.hpp"
#include "rqnn/metrics.hpp"
#include "rqnn/params.hpp"

namespace rqnn {

enum class ReservoirMode { plain, modified };

// Recurrent state-space system x_t = F(x_{t-1}, z_t) driven by the QNN
// state map. In modified mode component j first applies its preprocessor:
// x_t[j] = F_j(P_j x_{t-1}, z_t).
struct ReservoirSystem {
  ThetaBundle theta;
  std::vector<Matrix> preprocessors;  // one N x N matrix per component
  ReservoirMode mode = ReservoirMode::plain;

  int state_dim() const { return theta.state_dim; }
  int input_dim() const { return theta.input_dim; }
  double amplitude() const {
    return theta.circuits.empty() ? 0.0 : theta.circuits[0].R;
  }
  // Throws std::invalid_argument on inconsistent members (modified mode
  // without N well-shaped preprocessors, bad bundle).
  void validate() const;
};

// States after each input: out[i] = state after consuming z_seq[0..i].
// Every component lies in [-R, R]. Dimension mismatch or non-finite input
// throws std::invalid_argument.
std::vector<std::vector<double>> run(const ReservoirSystem& sys,
                                     const std::vector<std::vector<double>>& z_seq,
                                     const std::vector<double>& x0);

struct EspReport {
  bool converged = false;   // final max pairwise distance <= 1e-8
  double rate = 0.0;        // fitted per-step contraction of the spread
  int collapse_step = -1;   // first step with spread <= 1e-8; -1 if never
  double final_spread = 0.0;
  std::vector<double> spread;  // max pairwise distance after each step
};

// Runs the system from num_initial_states random starts (uniform in
// [-R, R]^N) over the same input sequence and tracks the max pairwise
// distance. The rate is the geometric-mean per-step decay fitted on steps
// with spread above the 1e-13 noise floor. Non-convergence is reported,
// not thrown.
EspReport check_esp(const ReservoirSystem& sys,
                    const std::vector<std::vector<double>>& z_seq,
                    int num_initial_states, std::uint64_t seed);

struct ShiftStructure {
  int state_dim = 0;                  // (K-1) d + m
  std::vector<Matrix> preprocessors;  // one per state component
};

// Linear preprocessors giving a K-step finite-memory system for input
// dimension d and output block dimension m. State layout: output block
// (coordinates 0..m-1), then delay blocks 1..K-1 of width d. Component
// group -> preprocessed state:
//   output block:  (delay blocks 1..K-1, 0)
//   delay block k: (delay blocks k+1..K-1, 0, ..., 0)
// so delay block K-1 reads only the current input, block k copies block
// k+1's previous value, and the output block sees the last K-1 inputs plus
// the current one.
ShiftStructure build_shift_preprocessors(int K, int d, int m);

// Right side of the worst-case filter error bound for a contractive target
// with per-component sup constant c_inf_max:
//   (1 / (1 - lambda)) sqrt(N) c_inf_max / sqrt(n),   valid for n > n0.
// min_units returns that threshold n0 = N^2 c_inf_max^2 / (1 - lambda)^2.
// lambda outside (0, 1) or n <= n0 throws std::invalid_argument.
double theoretical_bound(double c_inf_max, double lambda, int N, long long n);
double min_units(double c_inf_max, double lambda, int N);

struct LambdaOptions {
  Box box;                        // joint (x, z) domain, dim N + d
  std::size_t grid_per_axis = 33;
  std::size_t max_points = 100000;  // grid cap; excess filled by MC draws
  std::uint64_t seed = 1;
  ExecMode mode = ExecMode::parallel;
};

// Grid estimate of sup ||d x_next / d x||_2 over the box (an
// under-estimate of the true supremum; reported as lambda-hat). Modified
// mode chains each component's gradient through its preprocessor.
double estimate_lambda(const ReservoirSystem& sys, const LambdaOptions& opt);

// Jacobian of the state update with respect to the previous state at one
// point, preprocessors included.
Matrix state_jacobian(const ReservoirSystem& sys, const std::vector<double>& x,
                      const std::vector<double>& z);

struct FilterTask {
  Box input_box;  // D_d; per-step inputs drawn uniformly from it
  // Maps a full input sequence to the target output sequence (row per step).
  std::function<std::vector<std::vector<double>>(
      const std::vector<std::vector<double>>&)>
      target_filter;
  int sequence_length = 0;
  int washout = 0;

  void validate() const;  // washout < sequence_length, box nonempty
};

struct FilterErrorReport {
  double sup_error = 0.0;   // max over sequences and post-washout steps
  double mean_error = 0.0;  // mean over the same set
  std::vector<double> per_sequence_sup;
};

// Runs num_sequences random input sequences from x0 = 0 and compares the
// system's output against the task target in the Euclidean norm. readout
// may be null: outputs are then the raw states (state-space comparison).
FilterErrorReport filter_error(const ReservoirSystem& sys, const Matrix* readout,
                               const FilterTask& task, int num_sequences,
                               std::uint64_t seed);

}  // namespace rqnn

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rqnn/config.hpp"

namespace rqnn {

// One checked claim: `measured <relation> bound`. relation "report" marks a
// value recorded for the log without a pass condition.
struct ClaimResult {
  std::string id;
  double measured = 0.0;
  double bound = 0.0;
  std::string relation = "<=";
  bool pass = false;
};

struct ExperimentRecord {
  std::string experiment;
  std::vector<ClaimResult> claims;
  std::string csv_path;  // empty when no output file was requested
  double seconds = 0.0;

  bool all_pass() const;
  const ClaimResult& claim(const std::string& id) const;  // throws if absent
  std::string summary() const;  // one line per claim
};

// prop1-check        closed form vs dense circuit, soundness, gradients
// rate-sweep         approximation-rate sweep plus the weight-bound draw
// esp-check          initial-state forgetting of the contractive system
// theorem1-filter    trajectory error of the sampled contractive state map
// lemma1-memory      exact finite-memory structure of the shift system
// theorem2-filter    fitted finite-memory filter with trained readout
// shots-sweep        finite-shot error laws and noisy trajectories
std::vector<std::string> experiment_names();

// Dispatch on cfg key "experiment". Every experiment is deterministic given
// its config; key "out" requests a CSV file; key "seed" feeds every stream.
// Unknown experiment name throws std::invalid_argument.
ExperimentRecord run_experiment(const KeyValues& cfg);

ExperimentRecord run_prop1_check(const KeyValues& cfg);
ExperimentRecord run_rate_sweep_experiment(const KeyValues& cfg);
ExperimentRecord run_esp_check(const KeyValues& cfg);
ExperimentRecord run_theorem1_filter(const KeyValues& cfg);
ExperimentRecord run_lemma1_memory(const KeyValues& cfg);
ExperimentRecord run_theorem2_filter(const KeyValues& cfg);
ExperimentRecord run_shots_sweep(const KeyValues& cfg);

// Shared helpers (used by several experiments and their tests).
namespace detail {

// Claim construction with the pass rule evaluated from the relation.
ClaimResult make_claim(const std::string& id, double measured,
                       const std::string& relation, double bound);

// Writes meta line + body to cfg key "out" when present; returns the path.
std::string maybe_write_csv(
    const KeyValues& cfg, const std::string& experiment, std::uint64_t seed,
    const std::vector<std::pair<std::string, std::string>>& extra_meta,
    const std::vector<std::string>& header,
    const std::vector<std::vector<std::string>>& rows);

}  // namespace detail

}  // namespace rqnn

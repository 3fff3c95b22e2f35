#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rqnn/config.hpp"
#include "rqnn/experiments.hpp"

namespace {

const char* describe(const std::string& name) {
  if (name == "prop1-check")
    return "closed-form vs dense circuit agreement, unitarity, gradients";
  if (name == "rate-sweep")
    return "approximation error vs circuit width with constant checks";
  if (name == "esp-check") return "state-forgetting (echo state) diagnostics";
  if (name == "theorem1-filter")
    return "worst-case trajectory error against the width-dependent bound";
  if (name == "lemma1-memory")
    return "exact finite-memory structure of the shift construction";
  if (name == "theorem2-filter")
    return "trained readout accuracy for a lagged-product filter";
  if (name == "shots-sweep")
    return "finite-shot estimator error laws over shot budgets";
  return "";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-feature quantum circuit reservoir bench"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::string mode;
  std::string seed_str;
  std::vector<std::string> overrides;

  for (const std::string& name : rqnn::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name, describe(name));
    sub->add_option("--config", config_path, "key=value config file");
    sub->add_option("--out", out_path, "CSV output path");
    sub->add_option("--seed", seed_str, "master seed (u64)");
    sub->add_option("--mode", mode, "serial or parallel");
    sub->add_option("--set", overrides, "extra key=value override (repeatable)");
  }

  CLI11_PARSE(app, argc, argv);

  try {
    rqnn::KeyValues cfg;
    if (!config_path.empty()) cfg = rqnn::parse_config_file(config_path);
    std::string override_text;
    for (const auto& kv : overrides) override_text += kv + "\n";
    rqnn::merge_overrides(cfg, rqnn::parse_config_text(override_text));
    if (!seed_str.empty()) cfg.values["seed"] = seed_str;
    if (!out_path.empty()) cfg.values["out"] = out_path;
    if (!mode.empty()) cfg.values["mode"] = mode;
    cfg.values["experiment"] = app.get_subcommands().front()->get_name();

    const rqnn::ExperimentRecord rec = rqnn::run_experiment(cfg);
    std::fputs(rec.summary().c_str(), stdout);
    if (!rec.csv_path.empty()) std::printf("csv: %s\n", rec.csv_path.c_str());
    std::printf("elapsed: %.2fs\n", rec.seconds);
    std::printf("%s\n", rec.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
    return rec.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

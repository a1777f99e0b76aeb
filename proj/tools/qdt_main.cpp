// Copyright 2026 The qdt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qdt command line: seeded, config-driven experiment runs.
//
//   qdt search    identification race between selection strategies
//   qdt scaling   mean information per shot vs qubit count
//   qdt bias      mean information per shot vs candidate-set size
//   qdt classify  ground-state classification with class-gain selection
//   qdt gen-bank  solve and store ground-state banks
//
// A JSON config (--config) supplies any field; command line flags override
// it. Exit codes: 0 success, 1 validation/config/runtime error, 2 solver
// failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qdt/experiments.hpp"
#include "qdt/report.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  std::string out_dir;
  bool svg = false;

  // tri-state holders; only applied when the flag was passed
  std::int64_t qubits = -1;
  std::int64_t trials = -1;
  double noise_sigma = -1.0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::int64_t candidates = -1;
  std::int64_t observables = -1;
  std::int64_t max_shots = -1;
  double p_threshold = -1.0;
  double prob_floor = -1.0;
  std::int64_t range_min = -1;
  std::int64_t range_max = -1;
  std::int64_t train_per_class = -1;
  std::string strategies;
  std::string families;
  std::string bank_dir;
  bool no_hamiltonian_pool = false;
  bool no_random_pool = false;
};

void add_common_flags(CLI::App* cmd, CliOverrides& o) {
  cmd->add_option("--config", o.config_path,
                  "JSON config file; flags override its fields");
  cmd->add_option("--seed", o.seed, "master seed (64-bit)")
      ->each([&](const std::string&) { o.seed_set = true; });
  cmd->add_option("--qubits", o.qubits, "register size");
  cmd->add_option("--trials", o.trials, "trial count");
  cmd->add_option("--noise-sigma", o.noise_sigma,
                  "Gaussian noise on expectation values");
  cmd->add_option("--out", o.out_dir, "output directory (default .)");
  cmd->add_flag("--svg", o.svg, "also write SVG plots");
  cmd->add_option("--candidates", o.candidates, "candidate-state count");
  cmd->add_option("--observables", o.observables, "observable count");
  cmd->add_option("--max-shots", o.max_shots, "shot budget per run");
  cmd->add_option("--p-threshold", o.p_threshold,
                  "stopping confidence in (0.5, 1)");
  cmd->add_option("--prob-floor", o.prob_floor,
                  "probability floor applied after each update");
  cmd->add_option("--range-min", o.range_min,
                  "scaling: smallest qubit count / bias: smallest set size");
  cmd->add_option("--range-max", o.range_max,
                  "scaling: largest qubit count / bias: largest set size");
  cmd->add_option("--train-per-class", o.train_per_class,
                  "classify: training states per class (of 100)");
  cmd->add_option("--strategies", o.strategies,
                  "comma list: info-optimized,random,fixed-best");
  cmd->add_option("--families", o.families,
                  "comma list: heisenberg,spt,ising,xyz");
  cmd->add_option("--bank-dir", o.bank_dir,
                  "classify: read ground-state banks from this directory");
  cmd->add_flag("--no-hamiltonian-pool", o.no_hamiltonian_pool,
                "classify: skip the Hamiltonian-observable arm");
  cmd->add_flag("--no-random-pool", o.no_random_pool,
                "classify: skip the random-observable arm");
}

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::size_t end = comma == std::string::npos ? csv.size() : comma;
    if (end > start) out.push_back(csv.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

qdt::ExperimentConfig assemble(const std::string& experiment,
                               const CliOverrides& o) {
  qdt::ExperimentConfig cfg;
  if (!o.config_path.empty()) {
    cfg = qdt::config_from_json_file(o.config_path);
  }
  cfg.experiment = experiment;
  if (o.qubits >= 0) cfg.n_qubits = static_cast<int>(o.qubits);
  if (o.trials >= 0) cfg.n_trials = static_cast<int>(o.trials);
  if (o.noise_sigma >= 0.0) cfg.noise_sigma = o.noise_sigma;
  if (o.seed_set) cfg.master_seed = o.seed;
  if (o.candidates >= 0) {
    cfg.n_candidates = static_cast<std::size_t>(o.candidates);
  }
  if (o.observables >= 0) {
    cfg.n_observables = static_cast<std::size_t>(o.observables);
  }
  if (o.max_shots >= 0) cfg.max_shots = static_cast<int>(o.max_shots);
  if (o.p_threshold >= 0.0) cfg.p_threshold = o.p_threshold;
  if (o.prob_floor >= 0.0) cfg.prob_floor = o.prob_floor;
  if (o.range_min >= 0) cfg.range_min = static_cast<int>(o.range_min);
  if (o.range_max >= 0) cfg.range_max = static_cast<int>(o.range_max);
  if (o.train_per_class >= 0) {
    cfg.train_per_class = static_cast<int>(o.train_per_class);
  }
  if (!o.strategies.empty()) {
    cfg.strategies.clear();
    for (const auto& name : split_list(o.strategies)) {
      cfg.strategies.push_back(qdt::strategy_from_name(name));
    }
  }
  if (!o.families.empty()) {
    cfg.families.clear();
    for (const auto& name : split_list(o.families)) {
      cfg.families.push_back(qdt::family_from_name(name));
    }
  }
  if (!o.bank_dir.empty()) cfg.bank_dir = o.bank_dir;
  if (o.no_hamiltonian_pool) cfg.use_hamiltonian_pool = false;
  if (o.no_random_pool) cfg.use_random_pool = false;
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  if (o.svg) cfg.write_svg = true;
  return cfg;
}

qdt::EmitOptions emit_options(const qdt::ExperimentConfig& cfg) {
  qdt::EmitOptions opt;
  opt.out_dir = cfg.out_dir.empty() ? "." : cfg.out_dir;
  opt.svg = cfg.write_svg;
  return opt;
}

void print_written(const std::vector<std::filesystem::path>& files) {
  for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
}

int run(const std::string& experiment, const CliOverrides& o) {
  const qdt::ExperimentConfig cfg = assemble(experiment, o);
  if (experiment == "search") {
    const auto result = qdt::run_search_experiment(cfg);
    print_written(qdt::emit_report(result, emit_options(result.config)));
    for (const auto& s : result.strategies) {
      std::cout << qdt::strategy_name(s.strategy)
                << ": median shots-to-threshold " << s.median_shots << " ("
                << s.n_converged << "/" << s.traces.size()
                << " converged, accuracy " << s.accuracy << ")\n";
    }
  } else if (experiment == "scaling") {
    const auto result = qdt::run_scaling_experiment(cfg);
    print_written(qdt::emit_report(result, emit_options(result.config)));
    std::cout << "log2 slope of the mean gain: " << result.log2_slope
              << "\n";
  } else if (experiment == "bias") {
    const auto result = qdt::run_bias_experiment(cfg);
    print_written(qdt::emit_report(result, emit_options(result.config)));
    std::cout << "plateau gain: " << result.plateau_gain << " bits/shot\n";
  } else if (experiment == "classify") {
    const auto result = qdt::run_groundstate_experiment(cfg);
    print_written(qdt::emit_report(result, emit_options(result.config)));
    for (const auto& p : result.pools) {
      std::cout << p.pool_name << " pool (" << p.pool_size
                << " observables): median shots " << p.median_shots
                << ", accuracy " << p.accuracy << " over "
                << result.n_test_states << " test states\n";
    }
  } else if (experiment == "gen-bank") {
    print_written(qdt::run_gen_bank(cfg));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"information-optimized measurement selection for quantum "
               "state identification and classification"};
  app.require_subcommand(1);

  CliOverrides overrides;
  const char* names[5] = {"search", "scaling", "bias", "classify",
                          "gen-bank"};
  const char* blurbs[5] = {
      "identification race between selection strategies",
      "mean information per shot vs qubit count",
      "mean information per shot vs candidate-set size",
      "ground-state classification over four spin-chain families",
      "solve and store ground-state banks"};
  for (int k = 0; k < 5; ++k) {
    add_common_flags(app.add_subcommand(names[k], blurbs[k]), overrides);
  }

  CLI11_PARSE(app, argc, argv);

  const std::string chosen = app.get_subcommands().front()->get_name();
  try {
    return run(chosen, overrides);
  } catch (const qdt::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qdt/belief.hpp"
#include "qdt/hamiltonian.hpp"
#include "qdt/infogain.hpp"

namespace qdt {

inline constexpr std::uint64_t kDefaultMasterSeed = 42;

/// Non-convergence sentinel used in shots-to-threshold statistics: a trial
/// that never reaches p_threshold counts as max_shots + 1.
int non_convergence_sentinel(int max_shots);

/// One configuration drives every experiment; fields a given experiment
/// does not use are ignored. Zero / empty fields are replaced by the
/// experiment's defaults (see with_defaults).
struct ExperimentConfig {
  std::string experiment;  // search | scaling | bias | classify | gen-bank

  int n_qubits = 0;
  std::size_t n_candidates = 0;   // search N
  std::size_t n_observables = 0;  // search J; bias observable count
  int n_trials = 0;               // search trials; bias repetitions per N
  double p_threshold = 0.99;
  int max_shots = 300;
  std::vector<Strategy> strategies;  // search; empty = all three
  double noise_sigma = 0.0;
  double prob_floor = 0.0;
  std::uint64_t master_seed = kDefaultMasterSeed;

  int range_min = 0;  // scaling: qubit range; bias: candidate-count range
  int range_max = 0;
  std::size_t plateau_states = 0;  // bias: auxiliary Haar sample size

  int train_per_class = 0;            // classify
  bool use_hamiltonian_pool = true;   // classify arms
  bool use_random_pool = true;
  std::string bank_dir;               // classify: load banks instead of solving
  std::vector<Family> families;       // classify / gen-bank; empty = all four

  std::string out_dir;
  bool write_svg = false;

  /// Copy with zero / empty fields filled in for `experiment`.
  ExperimentConfig with_defaults() const;
  void validate() const;
};

/// Reads a config from a JSON object file; unknown keys are rejected.
/// Fields absent from the file keep their in-code defaults.
ExperimentConfig config_from_json_file(const std::filesystem::path& file);
std::string config_to_json(const ExperimentConfig& config);

/// Shot-indexed quantiles across trials; index 0 is the prior p-value,
/// index s the p-value after s shots, with converged trials carried
/// forward at their terminal value.
struct QuantileSeries {
  std::vector<double> q25, median, q75;
  std::size_t size() const { return median.size(); }
};

/// Linear-interpolation quantile of an unsorted sample.
double quantile(std::vector<double> values, double q);

/// Per-trial p-value series for one arm: padded matrix rows -> quantiles.
QuantileSeries pvalue_quantiles(const std::vector<std::vector<double>>& rows);

/// Pads a trace's p-value sequence to fixed length: index 0 = prior
/// p-value, then per-shot values, held at the terminal value through
/// max_shots.
std::vector<double> padded_pvalues(const RunTrace& trace, double prior_pvalue,
                                   int max_shots);

// ---------------------------------------------------------------------------
// search: identification race between selection strategies on Haar states
// ---------------------------------------------------------------------------

struct StrategyResult {
  Strategy strategy;
  std::vector<RunTrace> traces;         // per trial
  std::vector<int> shots_to_threshold;  // sentinel when not converged
  QuantileSeries pvalues;
  double median_shots;
  int n_converged;
  double accuracy;  // fraction of trials predicting the true candidate
};

struct SearchResult {
  ExperimentConfig config;
  std::vector<StrategyResult> strategies;
};

/// Per trial: fresh Haar candidates, fresh random Pauli observables, an
/// exact expectation table and a uniformly drawn true state; every strategy
/// runs on the identical table with its own role-tagged shot stream.
SearchResult run_search_experiment(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// scaling: mean exact gain per shot vs qubit count (uniform prior)
// ---------------------------------------------------------------------------

struct ScalingPoint {
  int n_qubits;
  double mean_gain;       // exact expected gain, averaged over observables
  double predicted_gain;  // closed-form prediction at this qubit count
};

struct ScalingResult {
  ExperimentConfig config;
  std::vector<ScalingPoint> points;
  double log2_slope;  // least-squares slope of log2(mean_gain) vs n
};

ScalingResult run_scaling_experiment(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// bias: mean exact gain vs candidate-set size at fixed qubit count
// ---------------------------------------------------------------------------

struct BiasPoint {
  std::size_t n_candidates;
  double mean_gain;
  double predicted_gain;  // plateau_gain * (1 - 1/N)
};

struct BiasResult {
  ExperimentConfig config;
  double plateau_gain;  // large-sample estimate of the N -> inf gain
  std::vector<BiasPoint> points;
};

BiasResult run_bias_experiment(const ExperimentConfig& config);

// ---------------------------------------------------------------------------
// classify: ground-state classification with class-gain selection
// ---------------------------------------------------------------------------

struct PoolResult {
  std::string pool_name;  // "hamiltonian" | "random"
  std::size_t pool_size;
  std::vector<RunTrace> traces;      // per test state
  std::vector<int> true_class;       // per test state
  std::vector<int> shots_to_threshold;
  QuantileSeries pvalues;
  double median_shots;
  int n_converged;
  double accuracy;
};

struct ClassifyResult {
  ExperimentConfig config;
  int n_test_states;
  std::vector<PoolResult> pools;
};

/// Four families x 100 grid points; per class the first train_per_class
/// states in grid order train the table, the rest are classified. Observable
/// arms: the deduplicated Hamiltonian pool and an equally sized random-word
/// pool. noise_sigma > 0 perturbs the table and each test state's
/// expectation vector (the shot source) once.
ClassifyResult run_groundstate_experiment(const ExperimentConfig& config);

/// Solves and writes one bank file per family into out_dir
/// (bank-<family>-n<qubits>.qdtbank); returns the written paths.
std::vector<std::filesystem::path> run_gen_bank(const ExperimentConfig& config);

}  // namespace qdt

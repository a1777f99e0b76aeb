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

#include "qdt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "parallel.hpp"

namespace qdt {

namespace {

constexpr double kTwoLn2 = 1.3862943611198906188;

std::vector<Strategy> all_strategies() {
  return {Strategy::info_optimized, Strategy::random_pick,
          Strategy::fixed_best};
}

std::vector<Family> all_families() {
  return {kAllFamilies.begin(), kAllFamilies.end()};
}

double median_of_counts(const std::vector<int>& counts) {
  std::vector<double> v(counts.begin(), counts.end());
  return quantile(std::move(v), 0.5);
}

}  // namespace

int non_convergence_sentinel(int max_shots) { return max_shots + 1; }

ExperimentConfig ExperimentConfig::with_defaults() const {
  ExperimentConfig c = *this;
  if (c.experiment == "search") {
    if (c.n_qubits == 0) c.n_qubits = 10;
    if (c.n_candidates == 0) c.n_candidates = 20;
    if (c.n_observables == 0) c.n_observables = 20;
    if (c.n_trials == 0) c.n_trials = 100;
    if (c.strategies.empty()) c.strategies = all_strategies();
  } else if (c.experiment == "scaling") {
    if (c.range_min == 0) c.range_min = 2;
    if (c.range_max == 0) c.range_max = 8;
    if (c.n_candidates == 0) c.n_candidates = 100;
    if (c.n_observables == 0) c.n_observables = 100;
  } else if (c.experiment == "bias") {
    if (c.n_qubits == 0) c.n_qubits = 5;
    if (c.n_observables == 0) c.n_observables = 200;
    if (c.range_min == 0) c.range_min = 2;
    if (c.range_max == 0) c.range_max = 40;
    if (c.n_trials == 0) c.n_trials = 20;
    if (c.plateau_states == 0) c.plateau_states = 2000;
  } else if (c.experiment == "classify" || c.experiment == "gen-bank") {
    if (c.n_qubits == 0) c.n_qubits = 8;
    if (c.train_per_class == 0) c.train_per_class = 75;
    if (c.families.empty()) c.families = all_families();
  } else {
    throw std::invalid_argument("unknown experiment '" + c.experiment + "'");
  }
  return c;
}

void ExperimentConfig::validate() const {
  if (!(noise_sigma >= 0.0)) {
    throw std::invalid_argument("config: noise_sigma must be >= 0");
  }
  if (!(p_threshold > 0.5 && p_threshold < 1.0)) {
    throw std::invalid_argument("config: p_threshold must be in (0.5, 1)");
  }
  if (max_shots < 1) {
    throw std::invalid_argument("config: max_shots must be >= 1");
  }
  if (experiment == "search") {
    if (n_qubits < 1 || n_qubits > kMaxKernelQubits) {
      throw std::invalid_argument("config: n_qubits outside kernel budget");
    }
    if (n_candidates < 1 || n_observables < 1 || n_trials < 1) {
      throw std::invalid_argument("config: counts must be >= 1");
    }
  } else if (experiment == "scaling") {
    if (range_min < 1 || range_min > range_max ||
        range_max > kMaxKernelQubits) {
      throw std::invalid_argument("config: bad qubit range");
    }
    if (n_candidates < 2 || n_observables < 1) {
      throw std::invalid_argument("config: counts must be >= 2 / >= 1");
    }
  } else if (experiment == "bias") {
    if (n_qubits < 1 || n_qubits > kMaxKernelQubits) {
      throw std::invalid_argument("config: n_qubits outside kernel budget");
    }
    if (range_min < 2 || range_min > range_max) {
      throw std::invalid_argument("config: bad candidate-count range");
    }
    if (n_observables < 1 || n_trials < 1 || plateau_states < 2) {
      throw std::invalid_argument("config: counts must be positive");
    }
  } else if (experiment == "classify" || experiment == "gen-bank") {
    if (n_qubits < 3 || n_qubits > kMaxKernelQubits) {
      throw std::invalid_argument(
          "config: classify needs n_qubits in [3, kernel budget]");
    }
    if (train_per_class < 1 || train_per_class > 99) {
      throw std::invalid_argument(
          "config: train_per_class must be in [1, 99]");
    }
    if (families.empty()) {
      throw std::invalid_argument("config: no Hamiltonian families");
    }
    if (experiment == "classify" && !use_hamiltonian_pool &&
        !use_random_pool) {
      throw std::invalid_argument("config: no observable pool selected");
    }
  } else {
    throw std::invalid_argument("unknown experiment '" + experiment + "'");
  }
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw std::invalid_argument("quantile of an empty sample");
  }
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return values[lo] * (1.0 - frac) + values[hi] * frac;
}

QuantileSeries pvalue_quantiles(const std::vector<std::vector<double>>& rows) {
  QuantileSeries out;
  if (rows.empty()) return out;
  const std::size_t len = rows.front().size();
  out.q25.resize(len);
  out.median.resize(len);
  out.q75.resize(len);
  std::vector<double> column(rows.size());
  for (std::size_t s = 0; s < len; ++s) {
    for (std::size_t t = 0; t < rows.size(); ++t) column[t] = rows[t][s];
    out.q25[s] = quantile(column, 0.25);
    out.median[s] = quantile(column, 0.5);
    out.q75[s] = quantile(column, 0.75);
  }
  return out;
}

std::vector<double> padded_pvalues(const RunTrace& trace, double prior_pvalue,
                                   int max_shots) {
  std::vector<double> series(static_cast<std::size_t>(max_shots) + 1);
  series[0] = prior_pvalue;
  double last = prior_pvalue;
  for (int s = 1; s <= max_shots; ++s) {
    if (s <= trace.shots_taken()) {
      last = trace.shots[static_cast<std::size_t>(s - 1)].p_value;
    }
    series[static_cast<std::size_t>(s)] = last;
  }
  return series;
}

SearchResult run_search_experiment(const ExperimentConfig& raw) {
  ExperimentConfig cfg = raw.with_defaults();
  cfg.experiment = "search";
  cfg.validate();

  const std::size_t n_strategies = cfg.strategies.size();
  const std::size_t n_trials = static_cast<std::size_t>(cfg.n_trials);
  std::vector<std::vector<RunTrace>> traces(
      n_strategies, std::vector<RunTrace>(n_trials));
  std::vector<std::vector<char>> correct_flags(
      n_strategies, std::vector<char>(n_trials, 0));

  internal::parallel_for(n_trials, [&](std::size_t trial) {
    Rng state_rng =
        make_rng(derive_seed(cfg.master_seed, trial, "search/states"));
    std::vector<Statevector> candidates;
    candidates.reserve(cfg.n_candidates);
    for (std::size_t i = 0; i < cfg.n_candidates; ++i) {
      candidates.push_back(haar_random_state(cfg.n_qubits, state_rng));
    }

    Rng obs_rng =
        make_rng(derive_seed(cfg.master_seed, trial, "search/observables"));
    std::vector<PauliString> observables;
    observables.reserve(cfg.n_observables);
    for (std::size_t j = 0; j < cfg.n_observables; ++j) {
      observables.push_back(random_pauli_string(cfg.n_qubits, obs_rng));
    }

    ObservableTable table =
        ObservableTable::from_states(candidates, std::move(observables));
    if (cfg.noise_sigma > 0.0) {
      Rng noise_rng = make_rng(
          derive_seed(cfg.master_seed, trial, "search/table-noise"));
      table = perturb_expectations(table, cfg.noise_sigma, noise_rng);
    }

    Rng pick_rng =
        make_rng(derive_seed(cfg.master_seed, trial, "search/true-index"));
    const std::size_t true_index = uniform_below(pick_rng, cfg.n_candidates);

    for (std::size_t s = 0; s < n_strategies; ++s) {
      RunConfig run{cfg.p_threshold, cfg.max_shots, cfg.strategies[s],
                    cfg.prob_floor};
      Rng shot_rng = make_rng(derive_seed(
          cfg.master_seed, trial,
          std::string("search/shots/") + strategy_name(cfg.strategies[s])));
      RunTrace trace = run_identification(table, true_index, run, shot_rng);
      correct_flags[s][trial] =
          trace.prediction == static_cast<int>(true_index) ? 1 : 0;
      traces[s][trial] = std::move(trace);
    }
  });

  SearchResult result;
  result.config = cfg;
  const double prior_pvalue =
      1.0 - 1.0 / static_cast<double>(cfg.n_candidates);
  for (std::size_t s = 0; s < n_strategies; ++s) {
    StrategyResult sr;
    sr.strategy = cfg.strategies[s];
    sr.traces = std::move(traces[s]);
    std::vector<std::vector<double>> rows;
    rows.reserve(n_trials);
    int converged = 0, correct = 0;
    for (std::size_t t = 0; t < sr.traces.size(); ++t) {
      const RunTrace& tr = sr.traces[t];
      rows.push_back(padded_pvalues(tr, prior_pvalue, cfg.max_shots));
      sr.shots_to_threshold.push_back(
          tr.converged ? tr.shots_taken()
                       : non_convergence_sentinel(cfg.max_shots));
      converged += tr.converged ? 1 : 0;
      correct += correct_flags[s][t];
    }
    sr.pvalues = pvalue_quantiles(rows);
    sr.median_shots = median_of_counts(sr.shots_to_threshold);
    sr.n_converged = converged;
    sr.accuracy =
        static_cast<double>(correct) / static_cast<double>(n_trials);
    result.strategies.push_back(std::move(sr));
  }
  return result;
}

ScalingResult run_scaling_experiment(const ExperimentConfig& raw) {
  ExperimentConfig cfg = raw.with_defaults();
  cfg.experiment = "scaling";
  cfg.validate();

  const std::size_t n_points =
      static_cast<std::size_t>(cfg.range_max - cfg.range_min + 1);
  std::vector<ScalingPoint> points(n_points);

  internal::parallel_for(n_points, [&](std::size_t idx) {
    const int n = cfg.range_min + static_cast<int>(idx);
    Rng state_rng = make_rng(derive_seed(
        cfg.master_seed, static_cast<std::uint64_t>(n), "scaling/states"));
    std::vector<Statevector> candidates;
    candidates.reserve(cfg.n_candidates);
    for (std::size_t i = 0; i < cfg.n_candidates; ++i) {
      candidates.push_back(haar_random_state(n, state_rng));
    }
    Rng obs_rng = make_rng(derive_seed(
        cfg.master_seed, static_cast<std::uint64_t>(n),
        "scaling/observables"));
    std::vector<PauliString> observables;
    observables.reserve(cfg.n_observables);
    for (std::size_t j = 0; j < cfg.n_observables; ++j) {
      observables.push_back(random_pauli_string(n, obs_rng));
    }
    const ObservableTable table =
        ObservableTable::from_states(candidates, std::move(observables));

    const BeliefState prior = BeliefState::uniform(cfg.n_candidates);
    double total = 0.0;
    for (std::size_t j = 0; j < table.n_observables(); ++j) {
      total += expected_info_gain(prior, table.column(j));
    }
    const double mean_gain =
        total / static_cast<double>(table.n_observables());
    const double variance = haar_moments(0.0, std::ldexp(1.0, n), n).variance;
    points[idx] = {n, mean_gain,
                   expected_sample_info_gain(variance, cfg.n_candidates)};
  });

  ScalingResult result;
  result.config = cfg;
  result.points = std::move(points);

  // Least-squares slope of log2(mean gain) against the qubit count.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& p : result.points) {
    const double x = p.n_qubits, y = std::log2(p.mean_gain);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(result.points.size());
  result.log2_slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  return result;
}

BiasResult run_bias_experiment(const ExperimentConfig& raw) {
  ExperimentConfig cfg = raw.with_defaults();
  cfg.experiment = "bias";
  cfg.validate();

  // Plateau: unbiased column variances over a large auxiliary Haar sample,
  // averaged over a dedicated observable set.
  double plateau;
  {
    Rng obs_rng = make_rng(
        derive_seed(cfg.master_seed, 0, "bias/plateau-observables"));
    std::vector<PauliString> observables;
    observables.reserve(cfg.n_observables);
    for (std::size_t j = 0; j < cfg.n_observables; ++j) {
      observables.push_back(random_pauli_string(cfg.n_qubits, obs_rng));
    }
    Rng state_rng =
        make_rng(derive_seed(cfg.master_seed, 0, "bias/plateau-states"));
    std::vector<Statevector> states;
    states.reserve(cfg.plateau_states);
    for (std::size_t i = 0; i < cfg.plateau_states; ++i) {
      states.push_back(haar_random_state(cfg.n_qubits, state_rng));
    }
    const ObservableTable table =
        ObservableTable::from_states(states, std::move(observables));
    double total_var = 0.0;
    for (std::size_t j = 0; j < table.n_observables(); ++j) {
      total_var += sample_moments(table.column(j)).var_unbiased;
    }
    plateau =
        total_var / static_cast<double>(table.n_observables()) / kTwoLn2;
  }

  const std::size_t n_points =
      static_cast<std::size_t>(cfg.range_max - cfg.range_min + 1);
  std::vector<BiasPoint> points(n_points);

  internal::parallel_for(n_points, [&](std::size_t idx) {
    const std::size_t n_candidates =
        static_cast<std::size_t>(cfg.range_min) + idx;
    double total = 0.0;
    for (int trial = 0; trial < cfg.n_trials; ++trial) {
      // One derivation index per (candidate count, repetition) pair.
      const std::uint64_t key =
          (static_cast<std::uint64_t>(n_candidates) << 32) |
          static_cast<std::uint64_t>(trial);
      Rng state_rng = make_rng(derive_seed(cfg.master_seed, key,
                                           "bias/states"));
      std::vector<Statevector> candidates;
      candidates.reserve(n_candidates);
      for (std::size_t i = 0; i < n_candidates; ++i) {
        candidates.push_back(haar_random_state(cfg.n_qubits, state_rng));
      }
      Rng obs_rng =
          make_rng(derive_seed(cfg.master_seed, key, "bias/observables"));
      std::vector<PauliString> observables;
      observables.reserve(cfg.n_observables);
      for (std::size_t j = 0; j < cfg.n_observables; ++j) {
        observables.push_back(random_pauli_string(cfg.n_qubits, obs_rng));
      }
      const ObservableTable table =
          ObservableTable::from_states(candidates, std::move(observables));
      const BeliefState prior = BeliefState::uniform(n_candidates);
      for (std::size_t j = 0; j < table.n_observables(); ++j) {
        total += expected_info_gain(prior, table.column(j));
      }
    }
    const double mean_gain =
        total / static_cast<double>(cfg.n_trials) /
        static_cast<double>(cfg.n_observables);
    const double predicted =
        plateau * (1.0 - 1.0 / static_cast<double>(n_candidates));
    points[idx] = {n_candidates, mean_gain, predicted};
  });

  BiasResult result;
  result.config = cfg;
  result.plateau_gain = plateau;
  result.points = std::move(points);
  return result;
}

namespace {

struct SplitBanks {
  std::vector<Statevector> train_states;
  std::vector<int> train_class;
  std::vector<Statevector> test_states;
  std::vector<int> test_class;
};

SplitBanks load_or_solve_banks(const ExperimentConfig& cfg) {
  SplitBanks split;
  for (std::size_t f = 0; f < cfg.families.size(); ++f) {
    GroundStateBank bank;
    if (!cfg.bank_dir.empty()) {
      const auto file =
          std::filesystem::path(cfg.bank_dir) /
          (std::string("bank-") + family_name(cfg.families[f]) + "-n" +
           std::to_string(cfg.n_qubits) + ".qdtbank");
      bank = load_bank(file);
      if (bank.family != cfg.families[f] || bank.n_qubits != cfg.n_qubits) {
        throw std::runtime_error("bank file " + file.string() +
                                 " does not match the requested family");
      }
    } else {
      bank = ground_state_bank(cfg.families[f], cfg.n_qubits);
    }
    const std::size_t train_n = static_cast<std::size_t>(cfg.train_per_class);
    if (bank.entries.size() <= train_n) {
      throw std::invalid_argument(
          "train_per_class leaves no test states in the 100-point grid");
    }
    for (std::size_t k = 0; k < bank.entries.size(); ++k) {
      auto& dst = k < train_n ? split.train_states : split.test_states;
      auto& cls = k < train_n ? split.train_class : split.test_class;
      dst.push_back(std::move(bank.entries[k].state));
      cls.push_back(static_cast<int>(f));
    }
  }
  return split;
}

PoolResult run_pool_arm(const ExperimentConfig& cfg, const SplitBanks& split,
                        std::vector<PauliString> pool,
                        const std::string& pool_name) {
  PoolResult arm;
  arm.pool_name = pool_name;
  arm.pool_size = pool.size();
  arm.true_class = split.test_class;

  ObservableTable table =
      ObservableTable::from_states(split.train_states, std::move(pool));
  if (cfg.noise_sigma > 0.0) {
    Rng noise_rng = make_rng(derive_seed(cfg.master_seed, 0,
                                         "classify/table-noise/" + pool_name));
    table = perturb_expectations(table, cfg.noise_sigma, noise_rng);
  }

  const BeliefState prior =
      BeliefState::uniform_with_classes(split.train_class);
  const RunConfig run{cfg.p_threshold, cfg.max_shots,
                      Strategy::info_optimized, cfg.prob_floor};

  const std::size_t n_test = split.test_states.size();
  arm.traces.resize(n_test);
  internal::parallel_for(n_test, [&](std::size_t k) {
    std::vector<double> expectations(table.n_observables());
    for (std::size_t j = 0; j < table.n_observables(); ++j) {
      expectations[j] =
          pauli_expectation(split.test_states[k], table.observables()[j]);
    }
    if (cfg.noise_sigma > 0.0) {
      Rng noise_rng = make_rng(
          derive_seed(cfg.master_seed, k, "classify/test-noise/" + pool_name));
      expectations =
          perturb_expectations(expectations, cfg.noise_sigma, noise_rng);
    }
    Rng shot_rng = make_rng(
        derive_seed(cfg.master_seed, k, "classify/shots/" + pool_name));
    arm.traces[k] =
        run_classification(prior, table, expectations, run, shot_rng);
  });

  const std::vector<double> prior_classes = class_probabilities(prior);
  const double prior_pvalue =
      1.0 -
      *std::max_element(prior_classes.begin(), prior_classes.end());
  std::vector<std::vector<double>> rows;
  rows.reserve(n_test);
  int converged = 0, correct = 0;
  for (std::size_t k = 0; k < n_test; ++k) {
    const RunTrace& tr = arm.traces[k];
    rows.push_back(padded_pvalues(tr, prior_pvalue, cfg.max_shots));
    arm.shots_to_threshold.push_back(
        tr.converged ? tr.shots_taken()
                     : non_convergence_sentinel(cfg.max_shots));
    converged += tr.converged ? 1 : 0;
    correct += tr.prediction == split.test_class[k] ? 1 : 0;
  }
  arm.pvalues = pvalue_quantiles(rows);
  arm.median_shots = median_of_counts(arm.shots_to_threshold);
  arm.n_converged = converged;
  arm.accuracy = static_cast<double>(correct) / static_cast<double>(n_test);
  return arm;
}

}  // namespace

ClassifyResult run_groundstate_experiment(const ExperimentConfig& raw) {
  ExperimentConfig cfg = raw.with_defaults();
  cfg.experiment = "classify";
  cfg.validate();

  const SplitBanks split = load_or_solve_banks(cfg);

  ClassifyResult result;
  result.config = cfg;
  result.n_test_states = static_cast<int>(split.test_states.size());

  const std::vector<PauliString> hamiltonian_pool =
      observable_pool(cfg.n_qubits);

  if (cfg.use_hamiltonian_pool) {
    result.pools.push_back(
        run_pool_arm(cfg, split, hamiltonian_pool, "hamiltonian"));
  }
  if (cfg.use_random_pool) {
    // Distinct random words, as many as the Hamiltonian pool has.
    Rng pool_rng =
        make_rng(derive_seed(cfg.master_seed, 0, "classify/random-pool"));
    std::set<PauliString> seen;
    std::vector<PauliString> pool;
    while (pool.size() < hamiltonian_pool.size()) {
      PauliString w = random_pauli_string(cfg.n_qubits, pool_rng);
      if (seen.insert(w).second) pool.push_back(std::move(w));
    }
    result.pools.push_back(run_pool_arm(cfg, split, std::move(pool),
                                        "random"));
  }
  return result;
}

std::vector<std::filesystem::path> run_gen_bank(const ExperimentConfig& raw) {
  ExperimentConfig cfg = raw.with_defaults();
  cfg.experiment = "gen-bank";
  cfg.validate();
  const std::filesystem::path dir =
      cfg.out_dir.empty() ? std::filesystem::path(".")
                          : std::filesystem::path(cfg.out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (Family f : cfg.families) {
    const GroundStateBank bank = ground_state_bank(f, cfg.n_qubits);
    const auto file = dir / (std::string("bank-") + family_name(f) + "-n" +
                             std::to_string(cfg.n_qubits) + ".qdtbank");
    save_bank(bank, file);
    written.push_back(file);
  }
  return written;
}

}  // namespace qdt

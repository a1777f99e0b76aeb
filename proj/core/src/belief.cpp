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

#include "qdt/belief.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdt {

namespace {

constexpr double kSumTolerance = 1e-9;
// Outcome branches below this probability contribute nothing measurable to
// an expected entropy and would underflow the Bayes normalizer.
constexpr double kBranchCutoff = 1e-15;

void check_column(const BeliefState& belief, std::span<const double> column) {
  if (column.size() != belief.size()) {
    throw std::invalid_argument("column length does not match belief size");
  }
}

double max_element(std::span<const double> v) {
  return *std::max_element(v.begin(), v.end());
}

std::size_t argmax_lowest(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

}  // namespace

BeliefState BeliefState::uniform(std::size_t n_candidates) {
  if (n_candidates == 0) {
    throw std::invalid_argument("BeliefState: need at least one candidate");
  }
  BeliefState b;
  b.probs.assign(n_candidates, 1.0 / static_cast<double>(n_candidates));
  return b;
}

BeliefState BeliefState::uniform_with_classes(std::vector<int> class_of) {
  BeliefState b = uniform(class_of.size());
  b.class_of = std::move(class_of);
  b.validate();
  return b;
}

int BeliefState::n_classes() const {
  if (!class_of) return 0;
  int max_label = -1;
  for (int c : *class_of) max_label = std::max(max_label, c);
  return max_label + 1;
}

void BeliefState::validate() const {
  if (probs.empty()) {
    throw std::invalid_argument("BeliefState: empty probability vector");
  }
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0)) {
      throw std::invalid_argument("BeliefState: negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("BeliefState: probabilities sum to " +
                                std::to_string(sum));
  }
  if (class_of) {
    if (class_of->size() != probs.size()) {
      throw std::invalid_argument("BeliefState: class label count mismatch");
    }
    for (int c : *class_of) {
      if (c < 0) {
        throw std::invalid_argument("BeliefState: negative class label");
      }
    }
  }
}

BeliefState bayes_update(const BeliefState& belief,
                         std::span<const double> column, ShotOutcome outcome,
                         double prob_floor) {
  check_column(belief, column);
  const double s = outcome_sign(outcome);

  BeliefState post;
  post.class_of = belief.class_of;
  post.probs.resize(belief.size());
  double denom = 0.0;
  for (std::size_t i = 0; i < belief.size(); ++i) {
    const double w = belief.probs[i] * (1.0 + s * column[i]);
    post.probs[i] = w;
    denom += w;
  }
  if (denom < 1e-300) {
    throw DegenerateEvidenceError(
        "bayes_update: outcome has zero probability under every candidate");
  }
  double inv = 1.0 / denom;
  for (double& p : post.probs) p *= inv;

  if (prob_floor > 0.0) {
    double sum = 0.0;
    for (double& p : post.probs) {
      p = std::max(p, prob_floor);
      sum += p;
    }
    inv = 1.0 / sum;
    for (double& p : post.probs) p *= inv;
  }
  return post;
}

double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

double entropy(const BeliefState& belief) { return entropy(belief.probs); }

double outcome_probability(const BeliefState& belief,
                           std::span<const double> column) {
  check_column(belief, column);
  double p = 0.0;
  for (std::size_t i = 0; i < belief.size(); ++i) {
    p += belief.probs[i] * 0.5 * (1.0 + column[i]);
  }
  return std::clamp(p, 0.0, 1.0);
}

double expected_info_gain(const BeliefState& belief,
                          std::span<const double> column) {
  const double p_plus = outcome_probability(belief, column);
  double gain = entropy(belief);
  if (p_plus > kBranchCutoff) {
    gain -= p_plus * entropy(bayes_update(belief, column,
                                          ShotOutcome::plus_one));
  }
  if (1.0 - p_plus > kBranchCutoff) {
    gain -= (1.0 - p_plus) *
            entropy(bayes_update(belief, column, ShotOutcome::minus_one));
  }
  return std::max(gain, 0.0);
}

std::vector<double> class_probabilities(const BeliefState& belief) {
  if (!belief.class_of) {
    throw std::logic_error("class_probabilities: belief has no class labels");
  }
  std::vector<double> pc(static_cast<std::size_t>(belief.n_classes()), 0.0);
  for (std::size_t i = 0; i < belief.size(); ++i) {
    pc[static_cast<std::size_t>((*belief.class_of)[i])] += belief.probs[i];
  }
  return pc;
}

double class_entropy(const BeliefState& belief) {
  return entropy(class_probabilities(belief));
}

double expected_class_info_gain(const BeliefState& belief,
                                std::span<const double> column) {
  const double p_plus = outcome_probability(belief, column);
  double gain = class_entropy(belief);
  if (p_plus > kBranchCutoff) {
    gain -= p_plus * class_entropy(bayes_update(belief, column,
                                                ShotOutcome::plus_one));
  }
  if (1.0 - p_plus > kBranchCutoff) {
    gain -= (1.0 - p_plus) * class_entropy(bayes_update(
                                 belief, column, ShotOutcome::minus_one));
  }
  return std::max(gain, 0.0);
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::fixed_best:
      return "fixed-best";
    case Strategy::random_pick:
      return "random";
    case Strategy::info_optimized:
      return "info-optimized";
  }
  return "unknown";
}

Strategy strategy_from_name(const std::string& name) {
  if (name == "fixed-best" || name == "fixed") return Strategy::fixed_best;
  if (name == "random") return Strategy::random_pick;
  if (name == "info-optimized" || name == "info") {
    return Strategy::info_optimized;
  }
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

std::size_t select_observable(const BeliefState& belief,
                              const ObservableTable& table, Strategy strategy,
                              Rng& rng) {
  const std::size_t n_obs = table.n_observables();
  switch (strategy) {
    case Strategy::random_pick:
      return uniform_below(rng, n_obs);
    case Strategy::fixed_best: {
      // The first-iteration argmax: recomputing it at the uniform prior
      // keeps the choice constant over the run without carrying state.
      const BeliefState uniform = BeliefState::uniform(belief.size());
      std::vector<double> gains(n_obs);
      for (std::size_t j = 0; j < n_obs; ++j) {
        gains[j] = expected_info_gain(uniform, table.column(j));
      }
      return argmax_lowest(gains);
    }
    case Strategy::info_optimized: {
      std::vector<double> gains(n_obs);
      for (std::size_t j = 0; j < n_obs; ++j) {
        gains[j] = expected_info_gain(belief, table.column(j));
      }
      return argmax_lowest(gains);
    }
  }
  throw std::logic_error("select_observable: bad strategy");
}

std::size_t select_observable_by_class_gain(const BeliefState& belief,
                                            const ObservableTable& table) {
  std::vector<double> gains(table.n_observables());
  for (std::size_t j = 0; j < table.n_observables(); ++j) {
    gains[j] = expected_class_info_gain(belief, table.column(j));
  }
  return argmax_lowest(gains);
}

void RunConfig::validate() const {
  if (!(p_threshold > 0.5 && p_threshold < 1.0)) {
    throw std::invalid_argument("RunConfig: p_threshold must be in (0.5, 1)");
  }
  if (max_shots <= 0) {
    throw std::invalid_argument("RunConfig: max_shots must be positive");
  }
  if (prob_floor < 0.0 || prob_floor >= 1.0) {
    throw std::invalid_argument("RunConfig: prob_floor must be in [0, 1)");
  }
}

RunTrace run_identification(const ObservableTable& table,
                            std::size_t true_index, const RunConfig& config,
                            Rng& rng) {
  config.validate();
  if (true_index >= table.n_candidates()) {
    throw std::invalid_argument("run_identification: true_index out of range");
  }
  BeliefState belief = BeliefState::uniform(table.n_candidates());
  RunTrace trace;
  for (int shot = 1; shot <= config.max_shots; ++shot) {
    if (max_element(belief.probs) >= config.p_threshold) break;
    const std::size_t j =
        select_observable(belief, table, config.strategy, rng);
    const ShotOutcome outcome = sample_shot(table.at(true_index, j), rng);
    try {
      belief = bayes_update(belief, table.column(j), outcome,
                            config.prob_floor);
    } catch (const DegenerateEvidenceError&) {
      trace.evidence_degenerate = true;
      break;
    }
    const double top = max_element(belief.probs);
    trace.shots.push_back(
        {shot, static_cast<int>(j), outcome, top, 1.0 - top});
  }
  trace.converged = !trace.evidence_degenerate &&
                    max_element(belief.probs) >= config.p_threshold;
  trace.prediction = static_cast<int>(argmax_lowest(belief.probs));
  return trace;
}

RunTrace run_classification(const BeliefState& prior,
                            const ObservableTable& table,
                            std::span<const double> test_expectations,
                            const RunConfig& config, Rng& rng) {
  config.validate();
  prior.validate();
  if (!prior.class_of) {
    throw std::logic_error("run_classification: belief has no class labels");
  }
  if (prior.size() != table.n_candidates()) {
    throw std::invalid_argument(
        "run_classification: belief size does not match table");
  }
  if (test_expectations.size() != table.n_observables()) {
    throw std::invalid_argument(
        "run_classification: test expectation count does not match table");
  }

  BeliefState belief = prior;
  RunTrace trace;
  std::vector<double> pc = class_probabilities(belief);
  for (int shot = 1; shot <= config.max_shots; ++shot) {
    if (max_element(pc) >= config.p_threshold) break;
    const std::size_t j = select_observable_by_class_gain(belief, table);
    const ShotOutcome outcome = sample_shot(test_expectations[j], rng);
    try {
      belief = bayes_update(belief, table.column(j), outcome,
                            config.prob_floor);
    } catch (const DegenerateEvidenceError&) {
      trace.evidence_degenerate = true;
      break;
    }
    pc = class_probabilities(belief);
    const double top = max_element(pc);
    trace.shots.push_back(
        {shot, static_cast<int>(j), outcome, top, 1.0 - top});
  }
  trace.converged =
      !trace.evidence_degenerate && max_element(pc) >= config.p_threshold;
  trace.prediction = static_cast<int>(argmax_lowest(pc));
  return trace;
}

}  // namespace qdt

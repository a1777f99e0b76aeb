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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdt/errors.hpp"
#include "qdt/observable_table.hpp"
#include "qdt/pauli.hpp"
#include "qdt/rng.hpp"

namespace qdt {

/// Probability distribution over candidate states, optionally partitioned
/// into classes. Immutable value type: updates return new beliefs.
struct BeliefState {
  /// p(i) >= 0, summing to 1 within 1e-9.
  std::vector<double> probs;
  /// Optional class label per candidate, labels in [0, n_classes()).
  std::optional<std::vector<int>> class_of;

  static BeliefState uniform(std::size_t n_candidates);
  static BeliefState uniform_with_classes(std::vector<int> class_of);

  std::size_t size() const { return probs.size(); }
  /// 1 + max label; 0 when class labels are absent.
  int n_classes() const;
  /// Throws std::invalid_argument on empty/negative/unnormalized probs or
  /// out-of-range labels.
  void validate() const;
};

/// Posterior after observing `outcome` on an observable whose candidate
/// expectation values are `column`:
///
///   p(i | s) = p(i) (1 + s <O>_i) / sum_k p(k) (1 + s <O>_k)
///
/// A positive prob_floor is applied entry-wise after the update, followed
/// by renormalization; it keeps candidates recoverable when noisy tables
/// put an exact +-1 against them. The default (0) matches exact tables.
/// Throws DegenerateEvidenceError when the normalizer underflows (every
/// supported candidate assigns the outcome probability zero).
BeliefState bayes_update(const BeliefState& belief,
                         std::span<const double> column, ShotOutcome outcome,
                         double prob_floor = 0.0);

/// Shannon entropy, in bits, with 0 log 0 = 0.
double entropy(std::span<const double> probs);
double entropy(const BeliefState& belief);

/// Prior probability of measuring +1: sum_i p(i) (1 + <O>_i) / 2.
double outcome_probability(const BeliefState& belief,
                           std::span<const double> column);

/// Expected one-shot entropy reduction of measuring the observable:
/// H(belief) - [p(+1) H(posterior|+1) + p(-1) H(posterior|-1)], clamped to
/// >= 0 against rounding. Zero for constant columns.
double expected_info_gain(const BeliefState& belief,
                          std::span<const double> column);

/// Per-class mass: p_class(c) = sum_{i : class_of[i] = c} p(i).
/// Throws std::logic_error when class labels are absent.
std::vector<double> class_probabilities(const BeliefState& belief);

/// Entropy of class_probabilities, in bits.
double class_entropy(const BeliefState& belief);

/// Expected one-shot reduction of the class entropy; the branch posteriors
/// are computed at the candidate level and coarse-grained into classes.
/// Never exceeds expected_info_gain for the same belief and column.
double expected_class_info_gain(const BeliefState& belief,
                                std::span<const double> column);

/// Observable-selection policies for identification runs.
enum class Strategy {
  /// Argmax of expected_info_gain at the uniform prior, frozen for the run.
  fixed_best,
  /// Uniform random pick each shot.
  random_pick,
  /// Argmax of expected_info_gain at the current belief each shot.
  info_optimized,
};

const char* strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

/// Index of the observable the strategy measures next. Ties break to the
/// lowest index. The rng is consumed only by Strategy::random_pick.
std::size_t select_observable(const BeliefState& belief,
                              const ObservableTable& table, Strategy strategy,
                              Rng& rng);

/// Lowest-index argmax of expected_class_info_gain over the table columns.
std::size_t select_observable_by_class_gain(const BeliefState& belief,
                                            const ObservableTable& table);

struct RunConfig {
  /// Stop once the top candidate (or class) probability reaches this;
  /// must lie in (0.5, 1).
  double p_threshold = 0.99;
  int max_shots = 300;
  Strategy strategy = Strategy::info_optimized;
  /// Forwarded to bayes_update.
  double prob_floor = 0.0;

  void validate() const;
};

struct ShotRecord {
  int shot;            // 1-based shot index
  int observable;      // column measured
  ShotOutcome outcome;
  double posterior_max;
  double p_value;      // 1 - posterior_max after this shot
};

struct RunTrace {
  std::vector<ShotRecord> shots;
  /// Candidate index (identification) or class label (classification).
  int prediction = -1;
  bool converged = false;
  /// Set when a shot produced zero-probability evidence and the run was
  /// abandoned; the trace up to that point is kept.
  bool evidence_degenerate = false;

  int shots_taken() const { return static_cast<int>(shots.size()); }
};

/// Sequential identification of table row `true_index`: select an
/// observable per the strategy, draw a shot from the true state's stored
/// expectation, update the belief, until max p(i) >= p_threshold or the
/// shot budget runs out. Degenerate evidence yields a failed trace, not an
/// exception.
RunTrace run_identification(const ObservableTable& table,
                            std::size_t true_index, const RunConfig& config,
                            Rng& rng);

/// Sequential classification of an unseen state given its expectation
/// values on the table's observables (exact or noise-perturbed). Selection
/// maximizes expected_class_info_gain; the run stops once one class
/// accumulates p_threshold of the belief mass. The belief must carry class
/// labels.
RunTrace run_classification(const BeliefState& prior,
                            const ObservableTable& table,
                            std::span<const double> test_expectations,
                            const RunConfig& config, Rng& rng);

}  // namespace qdt

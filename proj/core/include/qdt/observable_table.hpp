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
#include <span>
#include <vector>

#include "qdt/pauli.hpp"
#include "qdt/rng.hpp"
#include "qdt/statevector.hpp"

namespace qdt {

/// N x J matrix of expectation values <O_j>_i over candidate states i,
/// together with the J observables. Stored column-major so that the value
/// column for one observable is contiguous. All entries lie in [-1, 1].
class ObservableTable {
 public:
  /// Takes ownership of a column-major value matrix (entry (i, j) at
  /// values[j * n_candidates + i]). Validates shape and entry range.
  ObservableTable(std::vector<PauliString> observables,
                  std::vector<double> values, std::size_t n_candidates);

  /// Exact expectation values of every observable in every candidate state.
  static ObservableTable from_states(std::span<const Statevector> candidates,
                                     std::vector<PauliString> observables);

  std::size_t n_candidates() const { return n_candidates_; }
  std::size_t n_observables() const { return observables_.size(); }
  const std::vector<PauliString>& observables() const { return observables_; }

  double at(std::size_t candidate, std::size_t observable) const {
    return values_[observable * n_candidates_ + candidate];
  }
  std::span<const double> column(std::size_t observable) const {
    return {values_.data() + observable * n_candidates_, n_candidates_};
  }

 private:
  std::vector<PauliString> observables_;
  std::vector<double> values_;  // column-major, n_candidates_ x J
  std::size_t n_candidates_;
};

/// Adds independent Gaussian(0, sigma) noise to every entry and clamps to
/// [-1, 1]; sigma = 0 returns the input unchanged. Models a table whose
/// entries were estimated on noisy hardware rather than computed exactly.
/// Throws std::domain_error when sigma < 0.
ObservableTable perturb_expectations(const ObservableTable& table,
                                     double sigma, Rng& rng);

/// Same perturbation for a plain expectation vector (e.g. the test state's
/// values in a classification run).
std::vector<double> perturb_expectations(std::span<const double> values,
                                         double sigma, Rng& rng);

}  // namespace qdt

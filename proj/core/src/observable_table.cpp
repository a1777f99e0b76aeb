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

#include "qdt/observable_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdt {

ObservableTable::ObservableTable(std::vector<PauliString> observables,
                                 std::vector<double> values,
                                 std::size_t n_candidates)
    : observables_(std::move(observables)),
      values_(std::move(values)),
      n_candidates_(n_candidates) {
  if (observables_.empty()) {
    throw std::invalid_argument("ObservableTable: no observables");
  }
  for (const auto& o : observables_) {
    if (o.is_identity()) {
      throw std::invalid_argument(
          "ObservableTable: identity is not a measurement observable");
    }
  }
  if (values_.size() != n_candidates_ * observables_.size()) {
    throw std::invalid_argument("ObservableTable: value matrix shape mismatch");
  }
  for (double v : values_) {
    if (!(v >= -1.0 && v <= 1.0)) {
      throw std::invalid_argument(
          "ObservableTable: expectation value outside [-1, 1]");
    }
  }
}

ObservableTable ObservableTable::from_states(
    std::span<const Statevector> candidates,
    std::vector<PauliString> observables) {
  if (candidates.empty()) {
    throw std::invalid_argument("ObservableTable: no candidate states");
  }
  std::vector<double> values(candidates.size() * observables.size());
  for (std::size_t j = 0; j < observables.size(); ++j) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      values[j * candidates.size() + i] =
          pauli_expectation(candidates[i], observables[j]);
    }
  }
  return ObservableTable(std::move(observables), std::move(values),
                         candidates.size());
}

std::vector<double> perturb_expectations(std::span<const double> values,
                                         double sigma, Rng& rng) {
  if (!(sigma >= 0.0)) {
    throw std::domain_error("perturb_expectations: sigma must be >= 0");
  }
  std::vector<double> out(values.begin(), values.end());
  if (sigma == 0.0) return out;
  for (double& v : out) {
    v = std::clamp(v + sigma * gaussian(rng), -1.0, 1.0);
  }
  return out;
}

ObservableTable perturb_expectations(const ObservableTable& table,
                                     double sigma, Rng& rng) {
  std::vector<double> flat(table.n_candidates() * table.n_observables());
  for (std::size_t j = 0; j < table.n_observables(); ++j) {
    const auto col = table.column(j);
    std::copy(col.begin(), col.end(), flat.begin() + j * table.n_candidates());
  }
  auto noisy = perturb_expectations(std::span<const double>(flat), sigma, rng);
  return ObservableTable(table.observables(), std::move(noisy),
                         table.n_candidates());
}

}  // namespace qdt

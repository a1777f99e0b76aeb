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

#include "qdt/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qdt {

namespace {

void check_qubit_count(int n_qubits, int limit) {
  if (n_qubits < 1 || n_qubits > limit) {
    throw std::invalid_argument("n_qubits must be in [1, " +
                                std::to_string(limit) + "], got " +
                                std::to_string(n_qubits));
  }
}

}  // namespace

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  check_qubit_count(n_qubits, kMaxStatevectorQubits);
  amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

Statevector::Statevector(int n_qubits,
                         std::vector<std::complex<double>> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  check_qubit_count(n_qubits, kMaxStatevectorQubits);
  if (amps_.size() != (std::size_t{1} << n_qubits)) {
    throw std::invalid_argument(
        "amplitude vector has " + std::to_string(amps_.size()) +
        " entries, expected 2^" + std::to_string(n_qubits));
  }
  if (norm_error() > kNormTolerance) {
    throw std::invalid_argument("amplitude vector is not normalized");
  }
}

double Statevector::norm_error() const {
  double sum = 0.0;
  for (const auto& a : amps_) sum += std::norm(a);
  return std::abs(sum - 1.0);
}

Statevector haar_random_state(int n_qubits, Rng& rng) {
  check_qubit_count(n_qubits, kMaxKernelQubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<std::complex<double>> amps(dim);
  double norm_sq = 0.0;
  for (auto& a : amps) {
    a = {gaussian(rng), gaussian(rng)};
    norm_sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (auto& a : amps) a *= inv;
  return Statevector(n_qubits, std::move(amps));
}

}  // namespace qdt

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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qdt/rng.hpp"

namespace qdt {

/// Largest register a Statevector can represent (2^16 amplitudes).
inline constexpr int kMaxStatevectorQubits = 16;

/// Largest qubit count accepted by Haar sampling: 2^14 amplitudes.
inline constexpr int kMaxKernelQubits = 14;

/// Tolerance on |sum_k |a_k|^2 - 1| for a vector to count as normalized.
inline constexpr double kNormTolerance = 1e-10;

/// Dense pure state of an n-qubit register. Immutable after construction.
///
/// Basis index convention: qubit j is bit j of the amplitude index, so
/// amplitude(k) multiplies |b_{n-1} ... b_1 b_0> with b_j = (k >> j) & 1.
class Statevector {
 public:
  /// The computational basis state |0...0>.
  explicit Statevector(int n_qubits);

  /// Wraps an amplitude vector. Throws std::invalid_argument unless the
  /// vector has exactly 2^n_qubits entries and unit norm within
  /// kNormTolerance.
  Statevector(int n_qubits, std::vector<std::complex<double>> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  std::complex<double> amplitude(std::size_t k) const { return amps_[k]; }

  /// |sum_k |a_k|^2 - 1|
  double norm_error() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Draws a state from the unitarily invariant (Haar) measure on pure
/// states: 2^n i.i.d. standard complex Gaussian amplitudes, normalized.
/// Deterministic given the rng state. Throws std::invalid_argument when
/// n_qubits is outside [1, kMaxKernelQubits].
Statevector haar_random_state(int n_qubits, Rng& rng);

}  // namespace qdt

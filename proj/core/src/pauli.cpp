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

#include "qdt/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qdt {

PauliString::PauliString(std::string letters) : letters_(std::move(letters)) {
  if (letters_.empty()) {
    throw std::invalid_argument("Pauli word must not be empty");
  }
  if (letters_.size() > 64) {
    throw std::invalid_argument("Pauli word longer than 64 qubits");
  }
  for (std::size_t j = 0; j < letters_.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    switch (letters_[j]) {
      case 'I':
        break;
      case 'X':
        x_mask_ |= bit;
        break;
      case 'Y':
        y_mask_ |= bit;
        break;
      case 'Z':
        z_mask_ |= bit;
        break;
      default:
        throw std::invalid_argument("invalid Pauli letter '" +
                                    std::string(1, letters_[j]) + "'");
    }
  }
}

int PauliString::weight() const {
  return std::popcount(x_mask_ | y_mask_ | z_mask_);
}

PauliString random_pauli_string(int n_qubits, Rng& rng) {
  if (n_qubits < 1 || n_qubits > 31) {
    throw std::invalid_argument("random_pauli_string: n_qubits out of range");
  }
  // Encode a word as base-4 digits (I=0, X=1, Y=2, Z=3); code 0 is the
  // identity, so draw uniformly from [1, 4^n - 1].
  const std::uint64_t n_words = (std::uint64_t{1} << (2 * n_qubits)) - 1;
  std::uint64_t code = 1 + uniform_below(rng, n_words);
  std::string letters(static_cast<std::size_t>(n_qubits), 'I');
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  for (int j = 0; j < n_qubits; ++j) {
    letters[static_cast<std::size_t>(j)] = kLetters[code & 3];
    code >>= 2;
  }
  return PauliString(std::move(letters));
}

double pauli_expectation(const Statevector& state,
                         const PauliString& observable) {
  if (observable.n_qubits() != state.n_qubits()) {
    throw std::invalid_argument(
        "pauli_expectation: observable length does not match qubit count");
  }
  const auto amps = state.amplitudes();
  const std::uint64_t flip = observable.flip_mask();
  const std::uint64_t yz = observable.y_mask() | observable.z_mask();

  // P|k> = phase(k) |k ^ flip> with phase(k) = i^{#Y} * (-1)^{popcount(k & yz)},
  // so <psi|P|psi> = sum_m conj(a_m) phase(m ^ flip) a_{m ^ flip}.
  std::complex<double> acc{0.0, 0.0};
  for (std::uint64_t m = 0; m < amps.size(); ++m) {
    const std::uint64_t k = m ^ flip;
    const double sign = (std::popcount(k & yz) & 1) ? -1.0 : 1.0;
    acc += std::conj(amps[m]) * (sign * amps[k]);
  }
  static constexpr std::complex<double> kIPow[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  acc *= kIPow[std::popcount(observable.y_mask()) & 3];

  if (std::abs(acc.imag()) > 1e-10) {
    throw std::logic_error("pauli_expectation: non-real expectation value");
  }
  return std::clamp(acc.real(), -1.0, 1.0);
}

ShotOutcome sample_shot(double expectation, Rng& rng) {
  if (!(std::abs(expectation) <= 1.0)) {
    throw std::domain_error("sample_shot: expectation outside [-1, 1]");
  }
  const double p_plus = 0.5 * (1.0 + expectation);
  return uniform_unit(rng) < p_plus ? ShotOutcome::plus_one
                                    : ShotOutcome::minus_one;
}

}  // namespace qdt

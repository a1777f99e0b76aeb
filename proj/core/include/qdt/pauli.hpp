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

#include <compare>
#include <cstdint>
#include <string>

#include "qdt/rng.hpp"
#include "qdt/statevector.hpp"

namespace qdt {

/// Tensor product of single-qubit Pauli operators, e.g. "ZXI" = Z on qubit
/// 0, X on qubit 1, I on qubit 2 (letter j acts on qubit j, the j-th bit of
/// the basis index). Non-identity strings are traceless with eigenvalues
/// +1 and -1.
class PauliString {
 public:
  /// Throws std::invalid_argument on an empty word or letters outside
  /// {I, X, Y, Z}.
  explicit PauliString(std::string letters);

  const std::string& letters() const { return letters_; }
  int n_qubits() const { return static_cast<int>(letters_.size()); }
  char letter(int j) const { return letters_[static_cast<std::size_t>(j)]; }
  bool is_identity() const { return (x_mask_ | y_mask_ | z_mask_) == 0; }
  /// Number of non-identity letters.
  int weight() const;

  // Bit j set iff letter j is X / Y / Z. flip_mask marks the qubits whose
  // basis bit the operator flips (X and Y).
  std::uint64_t x_mask() const { return x_mask_; }
  std::uint64_t y_mask() const { return y_mask_; }
  std::uint64_t z_mask() const { return z_mask_; }
  std::uint64_t flip_mask() const { return x_mask_ | y_mask_; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend std::strong_ordering operator<=>(const PauliString& a,
                                          const PauliString& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::string letters_;
  std::uint64_t x_mask_ = 0, y_mask_ = 0, z_mask_ = 0;
};

/// Uniform draw over the 4^n - 1 non-identity words on n qubits.
PauliString random_pauli_string(int n_qubits, Rng& rng);

/// <psi|P|psi>, computed by streaming the bit-flip permutation and +-1 / +-i
/// phases of P over the amplitudes; O(2^n), no operator matrix. The result
/// of the inner product is real up to ~1e-10 rounding residue and is clamped
/// to [-1, 1]. Throws std::invalid_argument on a qubit-count mismatch.
double pauli_expectation(const Statevector& state,
                         const PauliString& observable);

/// Single measurement outcome of a +-1-valued observable.
enum class ShotOutcome : int { minus_one = -1, plus_one = +1 };

inline int outcome_sign(ShotOutcome o) { return static_cast<int>(o); }

/// One Bernoulli draw with P(+1) = (1 + expectation) / 2 exactly.
/// Throws std::domain_error when |expectation| > 1 (or NaN).
ShotOutcome sample_shot(double expectation, Rng& rng);

}  // namespace qdt

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
#include <span>
#include <vector>

#include "qdt/errors.hpp"
#include "qdt/pauli.hpp"
#include "qdt/statevector.hpp"

namespace qdt {

/// One summand of an operator H = sum_k c_k P_k. Real coefficients and
/// Pauli words keep H Hermitian by construction.
struct PauliTerm {
  double coefficient;
  PauliString op;
};

using TermList = std::vector<PauliTerm>;

/// Dense-diagonalization cutoff: n <= kDenseSolveQubits uses a full
/// Hermitian eigensolve, larger n a matrix-free Lanczos iteration.
inline constexpr int kDenseSolveQubits = 12;
inline constexpr int kLanczosQubits = 16;

/// out += H * in, applied term by term without materializing H.
/// Both spans must have length 2^n_qubits.
void accumulate_apply(const TermList& terms,
                      std::span<const std::complex<double>> in,
                      std::span<std::complex<double>> out, int n_qubits);

/// ||H v - energy * v||.
double residual_norm(const TermList& terms, const Statevector& v,
                     double energy);

struct GroundState {
  double energy;
  Statevector state;
};

/// Lowest eigenpair of H = sum_k c_k P_k.
///
/// Deterministic: the returned state's global phase is fixed by making the
/// first amplitude with modulus > 1e-8 real positive, and the Lanczos path
/// uses a fixed start vector and tolerance (1e-10). The result satisfies
/// ||H psi - E psi|| < 1e-8 or a SolverError is thrown.
///
/// Throws std::invalid_argument on an empty term list, a qubit-count
/// mismatch in any term, or n_qubits outside [1, kLanczosQubits].
GroundState ground_state(const TermList& terms, int n_qubits);

namespace detail {
// The two solver regimes behind ground_state, callable directly so the
// iterative path can be cross-checked against the dense one at small n.
GroundState dense_ground_state(const TermList& terms, int n_qubits);
GroundState lanczos_ground_state(const TermList& terms, int n_qubits);
}  // namespace detail

}  // namespace qdt

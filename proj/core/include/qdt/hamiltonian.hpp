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

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "qdt/eigensolve.hpp"
#include "qdt/pauli.hpp"
#include "qdt/statevector.hpp"

namespace qdt {

/// The four spin-chain families used by the classification experiment.
/// All chains are open-boundary; with n sites, single-site sums run over
/// j in [0, n-1], two-site over [0, n-2] and three-site over [0, n-3].
///
///   heisenberg:  -sum_j (X_j X_{j+1} + Y_j Y_{j+1} + Z_j Z_{j+1})
///                - h sum_j (X_j + Y_j + Z_j)
///   spt:         -sum_j Z_j X_{j+1} Z_{j+2} - h1 sum_j X_j
///                - h2 sum_j X_j X_{j+1}
///   ising:       -sum_j Z_j Z_{j+1} - h sum_j X_j
///   xyz:         -sum_j X_j Y_{j+1} Z_{j+2} - h sum_j A_j,
///                A_j cycling X, Y, Z with the site index
enum class Family { heisenberg, spt, ising, xyz };

inline constexpr std::array<Family, 4> kAllFamilies = {
    Family::heisenberg, Family::spt, Family::ising, Family::xyz};

const char* family_name(Family f);
Family family_from_name(const std::string& name);

struct HamiltonianSpec {
  Family family;
  int n_qubits;
  /// (h) for heisenberg / ising / xyz, (h1, h2) for spt.
  std::vector<double> params;
};

/// Terms of the specified chain. Zero-coefficient field terms are dropped.
/// Throws std::invalid_argument when n_qubits < 3 (the three-site terms
/// must fit) or the parameter arity does not match the family.
TermList build_family(const HamiltonianSpec& spec);

/// The family's 100-point parameter grid, in deterministic order:
/// h = 1.10, 1.12, ..., 3.08 for heisenberg / ising / xyz;
/// (h1, h2) with h1 in {0, 0.06, ..., 0.24} major and
/// h2 in {-0.20, -0.18, ..., 0.18} minor for spt.
std::vector<std::vector<double>> parameter_grid(Family family);

/// Union of the Pauli words appearing in any of the four families on an
/// n-qubit chain, deduplicated and sorted lexicographically. 73 words at
/// n = 10: 3n singles, 3(n-1) pairs and 2(n-2) triples.
std::vector<PauliString> observable_pool(int n_qubits);

struct BankEntry {
  std::vector<double> params;
  double energy;
  Statevector state;
};

struct GroundStateBank {
  Family family;
  int n_qubits;
  std::vector<BankEntry> entries;  // one per grid point, grid order
};

/// Ground states of the family across its parameter grid. Deterministic;
/// grid points are solved independently (in parallel). Solver failures are
/// rethrown with the offending parameter vector in the message.
GroundStateBank ground_state_bank(Family family, int n_qubits);

/// Bank file: 8-byte magic "QDTBANK\x01", a little-endian uint32 header
/// length, a JSON header (schema_version, family, n_qubits, n_states,
/// params, energies), then n_states * 2^n_qubits amplitudes as interleaved
/// re/im little-endian doubles in grid order.
void save_bank(const GroundStateBank& bank, const std::filesystem::path& file);
GroundStateBank load_bank(const std::filesystem::path& file);

}  // namespace qdt

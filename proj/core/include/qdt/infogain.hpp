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
#include <utility>
#include <vector>

#include "qdt/pauli.hpp"

namespace qdt {

/// First two moments of a sample of expectation values, in both the
/// population convention (divisor N) and the unbiased convention
/// (divisor N-1). The two variances satisfy var_biased = var_unbiased *
/// (N-1)/N identically.
struct SampleStats {
  double mean_biased;
  double var_biased;
  double mean_unbiased;  // the sample mean is already unbiased; kept for
                         // symmetry with the variance pair
  double var_unbiased;
  std::size_t count;
};

/// Moments of a sample of at least two values.
SampleStats sample_moments(std::span<const double> values);

/// Second-order (small-expectation) approximation of the expected one-shot
/// information gain at the uniform prior over n_candidates states:
///
///   I ~ V/(2 ln 2) + E^2/(2 ln 2) * (1 - 2/N)
///
/// with E and V the biased sample moments of the candidate expectation
/// values. For traceless observables E vanishes and I ~ V/(2 ln 2).
double approx_info_gain(const SampleStats& stats, std::size_t n_candidates);

/// Mean and variance of <O> over Haar-random pure states.
struct HaarMoments {
  double mean;      //  Tr(O) / 2^n
  double variance;  //  Tr(O^2)/(2^{2n} - 1) - Tr(O)^2/2^{2n}
};

/// General Hermitian observable, from its trace and the trace of its
/// square.
HaarMoments haar_moments(double trace, double trace_sq, int n_qubits);

/// Specialization for a non-identity Pauli string: Tr(P) = 0 and
/// Tr(P^2) = 2^n analytically, so mean 0 and variance 2^n/(2^{2n} - 1).
/// Throws std::domain_error for the identity string.
HaarMoments haar_moments_pauli(const PauliString& observable, int n_qubits);

/// Expected information gain per shot for a finite sample of N candidate
/// states whose expectation values have Haar variance haar_variance:
///
///   E[I_s] ~ haar_variance/(2 ln 2) * (1 - 1/N)
///
/// The (1 - 1/N) factor converts the unbiased population variance into the
/// expectation of the biased sample variance entering the gain.
double expected_sample_info_gain(double haar_variance,
                                 std::size_t n_candidates);

/// Predicted per-shot gain for non-identity Pauli strings on Haar
/// candidates, per qubit count in [n_min, n_max]. Successive values halve
/// asymptotically (log2 ratio -> -1).
std::vector<std::pair<int, double>> predicted_scaling(
    int n_min, int n_max, std::size_t n_candidates);

}  // namespace qdt

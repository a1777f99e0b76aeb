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

#include "qdt/infogain.hpp"

#include <cmath>
#include <stdexcept>

namespace qdt {

namespace {
constexpr double kTwoLn2 = 1.3862943611198906188;  // 2 ln 2
}

SampleStats sample_moments(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw std::invalid_argument(
        "sample_moments: need at least two values for the unbiased variance");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ssq = 0.0;
  for (double v : values) ssq += (v - mean) * (v - mean);
  SampleStats s;
  s.mean_biased = mean;
  s.mean_unbiased = mean;
  s.var_biased = ssq / static_cast<double>(n);
  s.var_unbiased = ssq / static_cast<double>(n - 1);
  s.count = n;
  return s;
}

double approx_info_gain(const SampleStats& stats, std::size_t n_candidates) {
  if (n_candidates < 2) {
    throw std::invalid_argument("approx_info_gain: need n_candidates >= 2");
  }
  const double n = static_cast<double>(n_candidates);
  return stats.var_biased / kTwoLn2 +
         stats.mean_biased * stats.mean_biased / kTwoLn2 * (1.0 - 2.0 / n);
}

HaarMoments haar_moments(double trace, double trace_sq, int n_qubits) {
  if (n_qubits < 1 || n_qubits > 62) {
    throw std::invalid_argument("haar_moments: n_qubits out of range");
  }
  const double dim = std::ldexp(1.0, n_qubits);       // 2^n
  const double dim_sq = std::ldexp(1.0, 2 * n_qubits);  // 2^{2n}
  HaarMoments m;
  m.mean = trace / dim;
  m.variance = trace_sq / (dim_sq - 1.0) - trace * trace / dim_sq;
  return m;
}

HaarMoments haar_moments_pauli(const PauliString& observable, int n_qubits) {
  if (observable.n_qubits() != n_qubits) {
    throw std::invalid_argument("haar_moments_pauli: qubit count mismatch");
  }
  if (observable.is_identity()) {
    throw std::domain_error(
        "haar_moments_pauli: identity is not a measurement observable");
  }
  // Tr(P) = 0 and Tr(P^2) = Tr(I) = 2^n, taken analytically.
  return haar_moments(0.0, std::ldexp(1.0, n_qubits), n_qubits);
}

double expected_sample_info_gain(double haar_variance,
                                 std::size_t n_candidates) {
  if (n_candidates < 2) {
    throw std::invalid_argument(
        "expected_sample_info_gain: need n_candidates >= 2");
  }
  if (haar_variance < 0.0) {
    throw std::invalid_argument(
        "expected_sample_info_gain: negative variance");
  }
  return haar_variance / kTwoLn2 *
         (1.0 - 1.0 / static_cast<double>(n_candidates));
}

std::vector<std::pair<int, double>> predicted_scaling(
    int n_min, int n_max, std::size_t n_candidates) {
  if (n_min < 1 || n_min > n_max || n_max > kMaxKernelQubits) {
    throw std::invalid_argument("predicted_scaling: bad qubit range");
  }
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(n_max - n_min + 1));
  for (int n = n_min; n <= n_max; ++n) {
    const double variance =
        haar_moments(0.0, std::ldexp(1.0, n), n).variance;
    out.emplace_back(n, expected_sample_info_gain(variance, n_candidates));
  }
  return out;
}

}  // namespace qdt

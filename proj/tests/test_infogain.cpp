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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qdt/belief.hpp"
#include "qdt/infogain.hpp"

using namespace qdt;

TEST_CASE("sample moments") {
  SUBCASE("constant sample") {
    const std::vector<double> v(7, 0.3);
    const SampleStats s = sample_moments(v);
    CHECK(s.mean_biased == doctest::Approx(0.3));
    CHECK(s.var_biased == doctest::Approx(0.0));
    CHECK(s.var_unbiased == doctest::Approx(0.0));
  }
  SUBCASE("antisymmetric pair") {
    const double a = 0.4;
    const SampleStats s = sample_moments(std::vector<double>{a, -a});
    CHECK(s.mean_biased == doctest::Approx(0.0));
    CHECK(s.var_biased == doctest::Approx(a * a));
    CHECK(s.var_unbiased == doctest::Approx(2 * a * a));
    CHECK(s.var_biased / s.var_unbiased == doctest::Approx(0.5));
  }
  SUBCASE("bias identity holds exactly") {
    Rng rng = make_rng(8);
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t n = 2 + uniform_below(rng, 30);
      std::vector<double> v(n);
      for (double& x : v) x = 2 * uniform_unit(rng) - 1;
      const SampleStats s = sample_moments(v);
      const double n_d = static_cast<double>(n);
      CHECK(std::abs(s.var_biased - s.var_unbiased * (n_d - 1) / n_d) <
            1e-12);
    }
  }
  SUBCASE("needs two values") {
    CHECK_THROWS_AS(sample_moments(std::vector<double>{1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("second-order gain approximation") {
  SUBCASE("pure-variance value") {
    SampleStats s{0.0, 0.01, 0.0, 0.0, 4};
    for (std::size_t n : {2, 5, 100}) {
      CHECK(approx_info_gain(s, n) ==
            doctest::Approx(0.007213475204444817).epsilon(1e-12));
    }
  }
  SUBCASE("zero moments") {
    SampleStats s{0.0, 0.0, 0.0, 0.0, 4};
    CHECK(approx_info_gain(s, 10) == doctest::Approx(0.0));
  }
  SUBCASE("mean term vanishes at two candidates") {
    SampleStats s{0.2, 0.0, 0.2, 0.0, 2};
    CHECK(approx_info_gain(s, 2) == doctest::Approx(0.0));
  }
}

TEST_CASE("approximation tracks the exact gain for small symmetric columns") {
  // Zero-mean candidate sets with |<O>| <= 0.2: the quadratic term carries
  // the gain and the remainder is fourth order.
  SUBCASE("two-point sweep") {
    for (double a = 0.01; a <= 0.2 + 1e-12; a += 0.01) {
      const std::vector<double> col{a, -a};
      const double exact =
          expected_info_gain(BeliefState::uniform(2), col);
      const double approx = approx_info_gain(sample_moments(col), 2);
      CHECK(std::abs(approx - exact) / exact < 0.05);
    }
  }
  SUBCASE("random zero-mean columns") {
    Rng rng = make_rng(606);
    for (int rep = 0; rep < 200; ++rep) {
      const std::size_t half = 2 + uniform_below(rng, 29);
      std::vector<double> col;
      col.reserve(2 * half);
      for (std::size_t i = 0; i < half; ++i) {
        const double x = 0.2 * (2 * uniform_unit(rng) - 1);
        col.push_back(x);
        col.push_back(-x);
      }
      const double exact =
          expected_info_gain(BeliefState::uniform(col.size()), col);
      const double approx =
          approx_info_gain(sample_moments(col), col.size());
      if (exact > 1e-9) {
        CHECK(std::abs(approx - exact) / exact < 0.05);
      }
    }
  }
}

TEST_CASE("invariant-measure moments") {
  SUBCASE("pauli specialization") {
    CHECK(haar_moments_pauli(PauliString("Z"), 1).variance ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(haar_moments_pauli(PauliString("XYYZX"), 5).variance ==
          doctest::Approx(32.0 / 1023.0).epsilon(1e-12));
    for (int n : {1, 3, 7}) {
      const PauliString p(std::string(static_cast<std::size_t>(n - 1), 'I') +
                          "X");
      CHECK(haar_moments_pauli(p, n).mean == 0.0);
    }
    CHECK_THROWS_AS(haar_moments_pauli(PauliString("III"), 3),
                    std::domain_error);
  }
  SUBCASE("general hermitian") {
    // traceless operator with Tr(O^2) = 8 on two qubits
    const HaarMoments m = haar_moments(0.0, 8.0, 2);
    CHECK(m.mean == doctest::Approx(0.0));
    CHECK(m.variance == doctest::Approx(8.0 / 15.0).epsilon(1e-12));
    // nonzero trace enters through both formula terms
    const HaarMoments t = haar_moments(2.0, 4.0, 5);
    CHECK(t.mean == doctest::Approx(2.0 / 32.0).epsilon(1e-12));
    CHECK(t.variance ==
          doctest::Approx(4.0 / 1023.0 - 4.0 / 1024.0).epsilon(1e-9));
  }
}

TEST_CASE("finite-sample gain prediction") {
  SUBCASE("frozen arithmetic") {
    CHECK(expected_sample_info_gain(32.0 / 1023.0, 100) ==
          doctest::Approx(0.022338503858925884).epsilon(1e-12));
  }
  SUBCASE("two candidates give half the asymptote") {
    const double v = 0.05;
    const double inf_limit = expected_sample_info_gain(v, 1000000);
    CHECK(expected_sample_info_gain(v, 2) ==
          doctest::Approx(v / (2.0 * std::log(2.0)) * 0.5).epsilon(1e-12));
    CHECK(inf_limit ==
          doctest::Approx(v / (2.0 * std::log(2.0))).epsilon(1e-5));
  }
}

TEST_CASE("predicted scaling over qubit count") {
  const auto pred = predicted_scaling(2, 10, 100);
  REQUIRE(pred.size() == 9);
  CHECK(pred.front().first == 2);
  CHECK(pred.back().first == 10);
  // frozen closed-form values
  for (const auto& [n, g] : pred) {
    if (n == 4) CHECK(g == doctest::Approx(0.044808410681727806).epsilon(1e-12));
    if (n == 10) CHECK(g == doctest::Approx(0.0006973971936445155).epsilon(1e-12));
  }
  // consecutive ratios approach 1/2
  for (std::size_t k = 1; k < pred.size(); ++k) {
    const double ratio = pred[k].second / pred[k - 1].second;
    CHECK(ratio > 0.4);
    CHECK(ratio < 0.6);
  }
  const double last_ratio = pred.back().second / pred[pred.size() - 2].second;
  CHECK(last_ratio == doctest::Approx(0.5).epsilon(1e-3));

  CHECK_THROWS_AS(predicted_scaling(0, 4, 10), std::invalid_argument);
  CHECK_THROWS_AS(predicted_scaling(5, 4, 10), std::invalid_argument);
}

TEST_CASE("approximation validated against exact gains on Haar ensembles") {
  // 100 Haar states, 100 random words per qubit count: the closed-form
  // prediction should track the Monte Carlo mean within 20% for n in
  // [2, 6] (tighter at larger n).
  Rng rng = make_rng(515254);
  for (int n = 2; n <= 6; ++n) {
    std::vector<Statevector> states;
    for (int i = 0; i < 100; ++i) states.push_back(haar_random_state(n, rng));
    std::vector<PauliString> obs;
    for (int j = 0; j < 100; ++j) obs.push_back(random_pauli_string(n, rng));
    const ObservableTable table = ObservableTable::from_states(states, obs);
    const BeliefState prior = BeliefState::uniform(100);
    double mean = 0;
    for (std::size_t j = 0; j < table.n_observables(); ++j) {
      mean += expected_info_gain(prior, table.column(j));
    }
    mean /= static_cast<double>(table.n_observables());
    const double predicted = expected_sample_info_gain(
        haar_moments(0.0, std::ldexp(1.0, n), n).variance, 100);
    CHECK(std::abs(mean - predicted) / predicted < 0.2);
  }
}

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
#include <complex>

#include "oracles.hpp"
#include "qdt/eigensolve.hpp"
#include "qdt/hamiltonian.hpp"

using namespace qdt;

namespace {

TermList tfim_2q() {
  // -Z0 Z1 - 0.5 (X0 + X1); ground energy -sqrt(2)
  return {{-1.0, PauliString("ZZ")},
          {-0.5, PauliString("XI")},
          {-0.5, PauliString("IX")}};
}

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(ground_state({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(ground_state({{1.0, PauliString("Z")}}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(ground_state({{1.0, PauliString("Z")}}, 0),
                  std::invalid_argument);
}

TEST_CASE("diagonal single-qubit case") {
  const GroundState gs = ground_state({{-1.0, PauliString("Z")}}, 1);
  CHECK(gs.energy == doctest::Approx(-1.0));
  CHECK(std::abs(gs.state.amplitude(0)) == doctest::Approx(1.0));
  CHECK(gs.state.amplitude(0).real() > 0.0);  // phase convention
  CHECK(std::abs(gs.state.amplitude(1)) == doctest::Approx(0.0));
}

TEST_CASE("strong transverse field polarizes the chain") {
  const TermList h = build_family({Family::ising, 4, {100.0}});
  const GroundState gs = ground_state(h, 4);
  for (int j = 0; j < 4; ++j) {
    std::string w(4, 'I');
    w[static_cast<std::size_t>(j)] = 'X';
    CHECK(pauli_expectation(gs.state, PauliString(w)) > 0.999);
  }
}

TEST_CASE("two-qubit chain against the Jacobi oracle") {
  const TermList terms = tfim_2q();
  const GroundState gs = ground_state(terms, 2);

  const auto ref = oracle::jacobi_hermitian(oracle::term_matrix(terms, 2));
  CHECK(gs.energy == doctest::Approx(ref.values[0]).epsilon(1e-10));
  CHECK(gs.energy == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));

  // state matches the oracle eigenvector up to a global phase
  std::complex<double> overlap(0, 0);
  for (std::size_t k = 0; k < 4; ++k) {
    overlap += std::conj(ref.vectors[0][k]) * gs.state.amplitude(k);
  }
  CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(residual_norm(terms, gs.state, gs.energy) < 1e-8);
}

TEST_CASE("family Hamiltonians against the Jacobi oracle at n=4") {
  for (Family f : kAllFamilies) {
    const std::vector<double> params =
        f == Family::spt ? std::vector<double>{0.12, -0.1}
                         : std::vector<double>{1.3};
    const TermList terms = build_family({f, 4, params});
    const GroundState gs = ground_state(terms, 4);
    const auto ref = oracle::jacobi_hermitian(oracle::term_matrix(terms, 4));
    CHECK(gs.energy == doctest::Approx(ref.values[0]).epsilon(1e-9));
    CHECK(residual_norm(terms, gs.state, gs.energy) < 1e-8);
  }
}

TEST_CASE("variational bound against random trial states") {
  Rng rng = make_rng(404);
  for (Family f : kAllFamilies) {
    const std::vector<double> params =
        f == Family::spt ? std::vector<double>{0.06, 0.1}
                         : std::vector<double>{2.0};
    for (int n : {4, 6}) {
      const TermList terms = build_family({f, n, params});
      const GroundState gs = ground_state(terms, n);
      for (int rep = 0; rep < 100; ++rep) {
        const Statevector phi = haar_random_state(n, rng);
        std::vector<std::complex<double>> h_phi(phi.dim(), {0, 0});
        accumulate_apply(terms, phi.amplitudes(), h_phi, n);
        double rayleigh = 0;
        for (std::size_t k = 0; k < phi.dim(); ++k) {
          rayleigh += (std::conj(phi.amplitude(k)) * h_phi[k]).real();
        }
        CHECK(gs.energy <= rayleigh + 1e-9);
      }
    }
  }
}

TEST_CASE("lanczos regime agrees with the dense regime") {
  for (Family f : kAllFamilies) {
    const std::vector<double> params =
        f == Family::spt ? std::vector<double>{0.18, 0.06}
                         : std::vector<double>{1.5};
    for (int n : {4, 6, 8}) {
      const TermList terms = build_family({f, n, params});
      const GroundState dense = detail::dense_ground_state(terms, n);
      const GroundState lanczos = detail::lanczos_ground_state(terms, n);
      CHECK(lanczos.energy == doctest::Approx(dense.energy).epsilon(1e-9));
      std::complex<double> overlap(0, 0);
      for (std::size_t k = 0; k < dense.state.dim(); ++k) {
        overlap +=
            std::conj(dense.state.amplitude(k)) * lanczos.state.amplitude(k);
      }
      CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-7));
      CHECK(residual_norm(terms, lanczos.state, lanczos.energy) < 1e-8);
    }
  }
}

TEST_CASE("iterative regime at n=13 meets the residual target") {
  const TermList terms = build_family({Family::ising, 13, {1.2}});
  const GroundState gs = ground_state(terms, 13);  // > dense cutoff
  CHECK(residual_norm(terms, gs.state, gs.energy) < 1e-8);
  // variational sanity against a few random trial states
  Rng rng = make_rng(9);
  for (int rep = 0; rep < 5; ++rep) {
    const Statevector phi = haar_random_state(13, rng);
    std::vector<std::complex<double>> h_phi(phi.dim(), {0, 0});
    accumulate_apply(terms, phi.amplitudes(), h_phi, 13);
    double rayleigh = 0;
    for (std::size_t k = 0; k < phi.dim(); ++k) {
      rayleigh += (std::conj(phi.amplitude(k)) * h_phi[k]).real();
    }
    CHECK(gs.energy < rayleigh);
  }
}

TEST_CASE("deterministic across calls") {
  const TermList terms = build_family({Family::xyz, 5, {1.7}});
  const GroundState a = ground_state(terms, 5);
  const GroundState b = ground_state(terms, 5);
  REQUIRE(a.state.dim() == b.state.dim());
  for (std::size_t k = 0; k < a.state.dim(); ++k) {
    CHECK(a.state.amplitude(k) == b.state.amplitude(k));
  }
}

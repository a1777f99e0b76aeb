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

#include <filesystem>
#include <map>
#include <set>

#include "oracles.hpp"
#include "qdt/hamiltonian.hpp"

using namespace qdt;

namespace {

int pool_weight_count(const std::vector<PauliString>& pool, int weight) {
  int c = 0;
  for (const auto& p : pool) c += p.weight() == weight ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("ising terms at n=4") {
  const TermList t = build_family({Family::ising, 4, {1.0}});
  REQUIRE(t.size() == 7);
  std::multiset<std::string> words;
  for (const auto& term : t) {
    CHECK(term.coefficient == doctest::Approx(-1.0));
    words.insert(term.op.letters());
  }
  CHECK(words == std::multiset<std::string>{"ZZII", "IZZI", "IIZZ", "XIII",
                                            "IXII", "IIXI", "IIIX"});
}

TEST_CASE("spt drops zero-coefficient fields") {
  const TermList t = build_family({Family::spt, 4, {0.0, 0.0}});
  REQUIRE(t.size() == 2);
  CHECK(t[0].op.letters() == "ZXZI");
  CHECK(t[1].op.letters() == "IZXZ");
}

TEST_CASE("heisenberg term count at n=3") {
  const TermList t = build_family({Family::heisenberg, 3, {0.5}});
  int couplings = 0, fields = 0;
  for (const auto& term : t) {
    (term.op.weight() == 2 ? couplings : fields)++;
  }
  CHECK(couplings == 6);
  CHECK(fields == 9);
}

TEST_CASE("xyz field letters cycle") {
  const TermList t = build_family({Family::xyz, 6, {2.0}});
  std::map<int, char> field_letter;
  for (const auto& term : t) {
    if (term.op.weight() != 1) continue;
    for (int j = 0; j < 6; ++j) {
      if (term.op.letter(j) != 'I') field_letter[j] = term.op.letter(j);
    }
  }
  CHECK(field_letter == std::map<int, char>{{0, 'X'},
                                            {1, 'Y'},
                                            {2, 'Z'},
                                            {3, 'X'},
                                            {4, 'Y'},
                                            {5, 'Z'}});
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(build_family({Family::ising, 2, {1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_family({Family::ising, 4, {1.0, 2.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_family({Family::spt, 4, {1.0}}),
                  std::invalid_argument);
}

TEST_CASE("parameter grids") {
  for (Family f : kAllFamilies) {
    const auto grid = parameter_grid(f);
    CHECK(grid.size() == 100);
  }
  SUBCASE("field grid endpoints") {
    const auto grid = parameter_grid(Family::ising);
    CHECK(grid.front()[0] == doctest::Approx(1.10));
    CHECK(grid.back()[0] == doctest::Approx(3.08));
  }
  SUBCASE("spt lattice") {
    const auto grid = parameter_grid(Family::spt);
    std::set<double> h1s, h2s;
    for (const auto& p : grid) {
      REQUIRE(p.size() == 2);
      h1s.insert(p[0]);
      h2s.insert(p[1]);
    }
    CHECK(h1s.size() == 5);
    CHECK(h2s.size() == 20);
    CHECK(*h1s.begin() == doctest::Approx(0.0));
    CHECK(*h1s.rbegin() == doctest::Approx(0.24));
    CHECK(*h2s.begin() == doctest::Approx(-0.2));
    CHECK(*h2s.rbegin() == doctest::Approx(0.18));
  }
}

TEST_CASE("observable pool counts and order") {
  SUBCASE("n=10 has the full 73") {
    const auto pool = observable_pool(10);
    CHECK(pool.size() == 73);
    CHECK(pool_weight_count(pool, 1) == 30);
    CHECK(pool_weight_count(pool, 2) == 27);
    CHECK(pool_weight_count(pool, 3) == 16);
  }
  SUBCASE("n=3") {
    const auto pool = observable_pool(3);
    CHECK(pool.size() == 17);
    CHECK(pool_weight_count(pool, 1) == 9);
    CHECK(pool_weight_count(pool, 2) == 6);
    CHECK(pool_weight_count(pool, 3) == 2);
  }
  SUBCASE("no identity, sorted, unique") {
    const auto pool = observable_pool(5);
    std::set<std::string> seen;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      CHECK_FALSE(pool[k].is_identity());
      CHECK(seen.insert(pool[k].letters()).second);
      if (k > 0) CHECK(pool[k - 1].letters() < pool[k].letters());
    }
  }
  SUBCASE("too small") {
    CHECK_THROWS_AS(observable_pool(2), std::invalid_argument);
  }
}

TEST_CASE("ground state bank") {
  const GroundStateBank bank = ground_state_bank(Family::ising, 4);
  REQUIRE(bank.entries.size() == 100);

  SUBCASE("strongest field polarizes along x") {
    const BankEntry& e = bank.entries.back();
    CHECK(e.params[0] == doctest::Approx(3.08));
    for (int j = 0; j < 4; ++j) {
      std::string w(4, 'I');
      w[static_cast<std::size_t>(j)] = 'X';
      CHECK(pauli_expectation(e.state, PauliString(w)) > 0.9);
    }
  }
  SUBCASE("energies match the Jacobi oracle on spot checks") {
    for (std::size_t k : {std::size_t{0}, std::size_t{50}}) {
      const TermList terms =
          build_family({Family::ising, 4, bank.entries[k].params});
      const auto ref =
          oracle::jacobi_hermitian(oracle::term_matrix(terms, 4));
      CHECK(bank.entries[k].energy ==
            doctest::Approx(ref.values[0]).epsilon(1e-9));
    }
  }
  SUBCASE("banks are bit-identical across builds") {
    const GroundStateBank again = ground_state_bank(Family::ising, 4);
    for (std::size_t k = 0; k < bank.entries.size(); ++k) {
      for (std::size_t i = 0; i < bank.entries[k].state.dim(); ++i) {
        CHECK(bank.entries[k].state.amplitude(i) ==
              again.entries[k].state.amplitude(i));
      }
    }
  }
  SUBCASE("heisenberg spot check against the oracle") {
    const TermList terms = build_family({Family::heisenberg, 4, {1.1}});
    const GroundState gs = ground_state(terms, 4);
    const auto ref = oracle::jacobi_hermitian(oracle::term_matrix(terms, 4));
    CHECK(gs.energy == doctest::Approx(ref.values[0]).epsilon(1e-9));
  }
}

TEST_CASE("bank file round trip") {
  const GroundStateBank bank = ground_state_bank(Family::spt, 3);
  const auto tmp =
      std::filesystem::temp_directory_path() / "qdt-test-bank.qdtbank";
  save_bank(bank, tmp);
  const GroundStateBank loaded = load_bank(tmp);
  std::filesystem::remove(tmp);

  CHECK(loaded.family == Family::spt);
  CHECK(loaded.n_qubits == 3);
  REQUIRE(loaded.entries.size() == bank.entries.size());
  for (std::size_t k = 0; k < bank.entries.size(); ++k) {
    CHECK(loaded.entries[k].params == bank.entries[k].params);
    CHECK(loaded.entries[k].energy == bank.entries[k].energy);
    for (std::size_t i = 0; i < bank.entries[k].state.dim(); ++i) {
      CHECK(loaded.entries[k].state.amplitude(i) ==
            bank.entries[k].state.amplitude(i));
    }
  }

  CHECK_THROWS(load_bank(std::filesystem::temp_directory_path() /
                         "qdt-no-such-file.qdtbank"));
}

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
#include <vector>

#include "oracles.hpp"
#include "qdt/belief.hpp"

using namespace qdt;

namespace {

// Random normalized belief over n candidates (independent exponentials).
BeliefState random_belief(std::size_t n, Rng& rng) {
  BeliefState b;
  b.probs.resize(n);
  double total = 0;
  for (double& p : b.probs) {
    p = -std::log(1.0 - uniform_unit(rng));
    total += p;
  }
  for (double& p : b.probs) p /= total;
  return b;
}

std::vector<double> random_column(std::size_t n, Rng& rng) {
  std::vector<double> col(n);
  for (double& c : col) c = 2.0 * uniform_unit(rng) - 1.0;
  return col;
}

}  // namespace

TEST_CASE("bayes update basics") {
  const BeliefState half = BeliefState::uniform(2);

  SUBCASE("eigenstate exclusion") {
    const auto post = bayes_update(half, std::vector<double>{1.0, -1.0},
                                   ShotOutcome::plus_one);
    CHECK(post.probs[0] == doctest::Approx(1.0));
    CHECK(post.probs[1] == doctest::Approx(0.0));
  }
  SUBCASE("no evidence from a constant column") {
    for (double c : {-0.4, 0.0, 0.7}) {
      for (ShotOutcome o : {ShotOutcome::plus_one, ShotOutcome::minus_one}) {
        const auto post = bayes_update(half, std::vector<double>{c, c}, o);
        CHECK(post.probs[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(post.probs[1] == doctest::Approx(0.5).epsilon(1e-12));
      }
    }
  }
  SUBCASE("direct evaluation") {
    const auto post = bayes_update(half, std::vector<double>{0.5, -0.5},
                                   ShotOutcome::plus_one);
    CHECK(post.probs[0] == doctest::Approx(0.75));
    CHECK(post.probs[1] == doctest::Approx(0.25));
  }
  SUBCASE("degenerate evidence throws") {
    CHECK_THROWS_AS(bayes_update(half, std::vector<double>{-1.0, -1.0},
                                 ShotOutcome::plus_one),
                    DegenerateEvidenceError);
  }
  SUBCASE("probability floor keeps excluded candidates alive") {
    const auto post = bayes_update(half, std::vector<double>{1.0, -1.0},
                                   ShotOutcome::plus_one, 1e-12);
    CHECK(post.probs[1] == doctest::Approx(1e-12));
    CHECK(post.probs[0] + post.probs[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("entropy") {
  CHECK(entropy(BeliefState::uniform(20)) ==
        doctest::Approx(std::log2(20.0)));
  CHECK(entropy(std::vector<double>{1.0, 0.0, 0.0}) == doctest::Approx(0.0));
  CHECK(entropy(std::vector<double>{0.75, 0.25}) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-12));
}

TEST_CASE("outcome probability") {
  const BeliefState half = BeliefState::uniform(2);
  CHECK(outcome_probability(half, std::vector<double>{1.0, -1.0}) ==
        doctest::Approx(0.5));
  CHECK(outcome_probability(half, std::vector<double>{0.0, 0.0}) ==
        doctest::Approx(0.5));
  BeliefState skew;
  skew.probs = {0.25, 0.75};
  CHECK(outcome_probability(skew, std::vector<double>{0.8, -0.4}) ==
        doctest::Approx(0.45).epsilon(1e-12));

  Rng rng = make_rng(3);
  for (int rep = 0; rep < 100; ++rep) {
    const BeliefState b = random_belief(6, rng);
    const auto col = random_column(6, rng);
    const double p = outcome_probability(b, col);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }
}

TEST_CASE("expected information gain") {
  const BeliefState half = BeliefState::uniform(2);
  SUBCASE("perfect discrimination is one bit") {
    CHECK(expected_info_gain(half, std::vector<double>{1.0, -1.0}) ==
          doctest::Approx(1.0));
  }
  SUBCASE("constant column carries nothing") {
    BeliefState b;
    b.probs = {0.3, 0.3, 0.4};
    CHECK(expected_info_gain(b, std::vector<double>{0.6, 0.6, 0.6}) <=
          1e-12);
  }
  SUBCASE("small symmetric column, frozen reference value") {
    CHECK(expected_info_gain(half, std::vector<double>{0.1, -0.1}) ==
          doctest::Approx(0.007225546012191719).epsilon(1e-9));
  }
  SUBCASE("matches the direct-sum reference on random inputs") {
    Rng rng = make_rng(17);
    for (int rep = 0; rep < 200; ++rep) {
      const std::size_t n = 2 + uniform_below(rng, 8);
      const BeliefState b = random_belief(n, rng);
      const auto col = random_column(n, rng);
      const double lib = expected_info_gain(b, col);
      const double ref = oracle::expected_gain_reference(b.probs, col);
      CHECK(lib == doctest::Approx(std::max(ref, 0.0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("martingale and normalization properties") {
  Rng rng = make_rng(1234);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t n = 2 + uniform_below(rng, 12);
    const BeliefState prior = random_belief(n, rng);
    const auto col = random_column(n, rng);
    const double p_plus = outcome_probability(prior, col);

    double max_dev = 0.0;
    std::vector<double> mixture(n, 0.0);
    for (ShotOutcome o : {ShotOutcome::plus_one, ShotOutcome::minus_one}) {
      const double w = o == ShotOutcome::plus_one ? p_plus : 1.0 - p_plus;
      if (w < 1e-14) continue;
      const BeliefState post = bayes_update(prior, col, o);
      double sum = 0.0;
      for (double p : post.probs) {
        CHECK(p >= 0.0);
        sum += p;
      }
      CHECK(std::abs(sum - 1.0) < 1e-9);
      for (std::size_t i = 0; i < n; ++i) mixture[i] += w * post.probs[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      max_dev = std::max(max_dev, std::abs(mixture[i] - prior.probs[i]));
    }
    CHECK(max_dev < 1e-9);
  }
}

TEST_CASE("non-negative gain over random beliefs and columns") {
  Rng rng = make_rng(777);
  for (int rep = 0; rep < 2000; ++rep) {
    const std::size_t n = 2 + uniform_below(rng, 10);
    const BeliefState b = random_belief(n, rng);
    CHECK(expected_info_gain(b, random_column(n, rng)) >= 0.0);
  }
}

TEST_CASE("class aggregation") {
  BeliefState b;
  b.probs = {0.1, 0.2, 0.3, 0.4};
  b.class_of = std::vector<int>{0, 0, 1, 1};

  SUBCASE("probabilities") {
    const auto pc = class_probabilities(b);
    REQUIRE(pc.size() == 2);
    CHECK(pc[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(pc[1] == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(pc[0] + pc[1] == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("entropy") {
    CHECK(class_entropy(b) ==
          doctest::Approx(0.8812908992306927).epsilon(1e-12));
  }
  SUBCASE("uniform over 4 x 75 candidates") {
    std::vector<int> labels;
    for (int c = 0; c < 4; ++c) labels.insert(labels.end(), 75, c);
    const BeliefState u = BeliefState::uniform_with_classes(labels);
    const auto pc = class_probabilities(u);
    for (double p : pc) CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(class_entropy(u) == doctest::Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("one-hot") {
    BeliefState point;
    point.probs = {0.0, 1.0, 0.0};
    point.class_of = std::vector<int>{0, 1, 1};
    const auto pc = class_probabilities(point);
    CHECK(pc[0] == 0.0);
    CHECK(pc[1] == 1.0);
    CHECK(class_entropy(point) == doctest::Approx(0.0));
  }
  SUBCASE("missing labels") {
    const BeliefState plain = BeliefState::uniform(3);
    CHECK_THROWS_AS(class_probabilities(plain), std::logic_error);
  }
}

TEST_CASE("class information gain") {
  SUBCASE("constant column") {
    BeliefState b = BeliefState::uniform_with_classes({0, 0, 1, 1});
    CHECK(expected_class_info_gain(
              b, std::vector<double>{0.2, 0.2, 0.2, 0.2}) <= 1e-12);
  }
  SUBCASE("one candidate per class reduces to identification") {
    BeliefState b = BeliefState::uniform_with_classes({0, 1});
    CHECK(expected_class_info_gain(b, std::vector<double>{1.0, -1.0}) ==
          doctest::Approx(1.0));
  }
  SUBCASE("intra-class separation gives zero class gain") {
    BeliefState b = BeliefState::uniform_with_classes({0, 0});
    const std::vector<double> col{1.0, -1.0};
    CHECK(expected_class_info_gain(b, col) <= 1e-12);
    CHECK(expected_info_gain(b, col) == doctest::Approx(1.0));
  }
  SUBCASE("never exceeds the candidate-level gain") {
    Rng rng = make_rng(2718);
    for (int rep = 0; rep < 500; ++rep) {
      const std::size_t n = 2 + uniform_below(rng, 10);
      BeliefState b = random_belief(n, rng);
      std::vector<int> labels(n);
      const int n_classes = 1 + static_cast<int>(uniform_below(rng, 3));
      for (auto& c : labels) {
        c = static_cast<int>(uniform_below(rng, n_classes));
      }
      b.class_of = labels;
      const auto col = random_column(n, rng);
      CHECK(expected_class_info_gain(b, col) <=
            expected_info_gain(b, col) + 1e-9);
    }
  }
}

TEST_CASE("observable selection") {
  Rng rng = make_rng(5);
  const std::vector<PauliString> dummy{PauliString("Z"), PauliString("X"),
                                       PauliString("Y")};
  SUBCASE("single observable under every strategy") {
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{0.3, -0.2}, 2);
    const BeliefState b = BeliefState::uniform(2);
    for (Strategy s : {Strategy::fixed_best, Strategy::random_pick,
                       Strategy::info_optimized}) {
      CHECK(select_observable(b, table, s, rng) == 0);
    }
  }
  SUBCASE("ties break to the lowest index") {
    // two identical +-1 columns, then a useless one
    const ObservableTable table(
        dummy, std::vector<double>{1, -1, 1, -1, 0, 0}, 2);
    const BeliefState b = BeliefState::uniform(2);
    CHECK(select_observable(b, table, Strategy::info_optimized, rng) == 0);
  }
  SUBCASE("argmax picks the separating column") {
    const ObservableTable table(
        {PauliString("Z"), PauliString("X")},
        std::vector<double>{0.1, -0.1, 1.0, -1.0}, 2);
    const BeliefState b = BeliefState::uniform(2);
    CHECK(select_observable(b, table, Strategy::info_optimized, rng) == 1);
  }
}

TEST_CASE("identification runs") {
  Rng rng = make_rng(42);
  SUBCASE("eigenstate pair converges in one shot") {
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{1.0, -1.0}, 2);
    RunConfig cfg;
    const RunTrace tr = run_identification(table, 0, cfg, rng);
    CHECK(tr.converged);
    CHECK(tr.shots_taken() == 1);
    CHECK(tr.prediction == 0);
    CHECK(tr.shots[0].p_value == doctest::Approx(0.0));
  }
  SUBCASE("single candidate converges with zero shots") {
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{0.4}, 1);
    RunConfig cfg;
    const RunTrace tr = run_identification(table, 0, cfg, rng);
    CHECK(tr.converged);
    CHECK(tr.shots_taken() == 0);
    CHECK(tr.prediction == 0);
  }
  SUBCASE("non-separable table never converges") {
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{0.2, 0.2}, 2);
    RunConfig cfg;
    cfg.max_shots = 50;
    const RunTrace tr = run_identification(table, 1, cfg, rng);
    CHECK_FALSE(tr.converged);
    CHECK(tr.shots_taken() == 50);
  }
  SUBCASE("identification cannot hit degenerate evidence on its own table") {
    // Shots come from the stored expectations, so the observed outcome
    // always has nonzero probability under the true candidate.
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{1.0, 1.0}, 2);
    RunConfig cfg;
    cfg.max_shots = 10;
    const RunTrace tr = run_identification(table, 0, cfg, rng);
    CHECK_FALSE(tr.evidence_degenerate);
    CHECK_FALSE(tr.converged);  // identical rows are inseparable
  }
  SUBCASE("validation") {
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{0.1, 0.2}, 2);
    RunConfig cfg;
    CHECK_THROWS_AS(run_identification(table, 5, cfg, rng),
                    std::invalid_argument);
    cfg.p_threshold = 0.4;
    CHECK_THROWS_AS(run_identification(table, 0, cfg, rng),
                    std::invalid_argument);
  }
}

TEST_CASE("classification runs") {
  Rng rng = make_rng(11);
  SUBCASE("test state equal to a training candidate") {
    // two classes, separable columns
    const ObservableTable table(
        {PauliString("Z"), PauliString("X")},
        std::vector<double>{1.0, -1.0, 0.3, 0.3}, 2);
    const BeliefState prior = BeliefState::uniform_with_classes({0, 1});
    RunConfig cfg;
    const std::vector<double> test_e{1.0, 0.3};  // equals candidate 0
    const RunTrace tr =
        run_classification(prior, table, test_e, cfg, rng);
    CHECK(tr.converged);
    CHECK(tr.prediction == 0);
  }
  SUBCASE("single class converges with zero shots") {
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{0.5, -0.5}, 2);
    const BeliefState prior = BeliefState::uniform_with_classes({0, 0});
    RunConfig cfg;
    const std::vector<double> test_e{0.1};
    const RunTrace tr =
        run_classification(prior, table, test_e, cfg, rng);
    CHECK(tr.converged);
    CHECK(tr.shots_taken() == 0);
    CHECK(tr.prediction == 0);
  }
  SUBCASE("degenerate evidence becomes a failed trace") {
    // Every candidate pins the column at exactly +1 while the test state's
    // own expectation is -1: the first -1 shot zeroes the whole belief.
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{1.0, 1.0}, 2);
    const BeliefState prior = BeliefState::uniform_with_classes({0, 1});
    RunConfig cfg;
    const std::vector<double> test_e{-1.0};
    const RunTrace tr =
        run_classification(prior, table, test_e, cfg, rng);
    CHECK(tr.evidence_degenerate);
    CHECK_FALSE(tr.converged);
  }
  SUBCASE("runs complete with a probability floor enabled") {
    const ObservableTable table(
        {PauliString("Z"), PauliString("X")},
        std::vector<double>{1.0, -1.0, 0.9, -0.9}, 2);
    const BeliefState prior = BeliefState::uniform_with_classes({0, 1});
    RunConfig cfg;
    cfg.prob_floor = 1e-12;
    // Shots are always -1 on the first column, which floors candidate 0
    // instead of zeroing it.
    const std::vector<double> test_e{-1.0, -0.9};
    const RunTrace tr =
        run_classification(prior, table, test_e, cfg, rng);
    CHECK_FALSE(tr.evidence_degenerate);
    CHECK(tr.converged);
    CHECK(tr.prediction == 1);
  }
  SUBCASE("p-value sequence stays within budget") {
    const ObservableTable table({PauliString("Z")},
                                std::vector<double>{0.9, -0.9, 0.8}, 3);
    const BeliefState prior =
        BeliefState::uniform_with_classes({0, 1, 2});
    RunConfig cfg;
    cfg.max_shots = 25;
    const std::vector<double> test_e{0.85};
    const RunTrace tr =
        run_classification(prior, table, test_e, cfg, rng);
    CHECK(tr.shots_taken() <= 25);
  }
}

// Copyright 2026 The gravcoh Authors
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

#include <random>

#include "doctest.h"
#include "gravcoh/complementarity.hpp"
#include "gravcoh/error.hpp"
#include "gravcoh/measures.hpp"
#include "oracle/brute_force.hpp"
#include "test_helpers.hpp"

using namespace gravcoh;
using testing::kPi;

namespace {

double generalized_negativity(double pa, double pb, double sum) {
  return 4 * std::sqrt(pa * pb * (1 - pa) * (1 - pb)) * std::abs(std::sin(sum / 2));
}

}  // namespace

TEST_CASE("check_relations") {
  SUBCASE("maximal initial coherence saturates all three") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> phase(0.0, 2 * kPi);
    for (int trial = 0; trial < 50; ++trial) {
      for (const auto& r : check_relations({0.5, 0.5}, PhaseSet::from_differences(phase(rng), phase(rng)))) {
        CHECK(r.saturated);
        CHECK(r.bound == 1.0);
        CHECK(std::abs(r.residual) <= 1e-9);
        CHECK(r.residual == r.lhs_value - r.bound);
      }
    }
  }
  SUBCASE("reduced initial coherence stays strictly below the bound") {
    const auto reports = check_relations({0.3, 0.7}, PhaseSet::from_differences(1.1, kPi - 1.1));
    for (const auto& r : reports) {
      CHECK(r.lhs_value < 1.0 - 1e-6);
      CHECK_FALSE(r.saturated);
    }
    CHECK(reports[0].relation == Relation::L1NegSquared);
    CHECK(reports[1].relation == Relation::L1ConcSquared);
    CHECK(reports[2].relation == Relation::RelEntPlusEnt);
  }
  SUBCASE("no evolution: full local coherence, no entanglement") {
    const MeasureSet m = evaluate_measures({0.5, 0.5}, PhaseSet{});
    CHECK_NEAR(m.c_l1_local, 1.0, 1e-12);
    CHECK(m.negativity == 0.0);
    CHECK_NEAR(m.sum_sq_l1_neg(), 1.0, 1e-12);
  }
  CHECK(to_string(Relation::L1NegSquared) == "l1_neg_squared");
  CHECK(to_string(Relation::L1ConcSquared) == "l1_conc_squared");
  CHECK(to_string(Relation::RelEntPlusEnt) == "rel_ent_plus_ent");
}

TEST_CASE("GridSpec") {
  CHECK(GridSpec{0.0, 1.0, 1}.values() == std::vector<double>{0.0});
  const auto v = GridSpec{0.0, 2 * kPi, 5}.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == 0.0);
  CHECK(v.back() == 2 * kPi);
  CHECK_NEAR(v[2], kPi, 1e-15);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 0}.values()), InvalidInput);
  CHECK_THROWS_AS((GridSpec{1.0, 0.0, 3}.values()), InvalidInput);
  CHECK_THROWS_AS((GridSpec{0.0, std::nan(""), 3}.values()), InvalidInput);
}

TEST_CASE("sweep_phases") {
  SUBCASE("single point at the origin") {
    const std::vector<double> zero{0.0};
    const auto records = sweep_phases(zero, zero, {0.5, 0.5});
    REQUIRE(records.size() == 1);
    CHECK_NEAR(records[0].measures.c_l1_local, 1.0, 1e-12);
    CHECK(records[0].measures.negativity == 0.0);
  }
  SUBCASE("uniform params over [0, 2 pi]^2") {
    const auto grid = GridSpec{0.0, 2 * kPi, 41}.values();
    const auto records = sweep_phases(grid, grid, {0.5, 0.5});
    REQUIRE(records.size() == grid.size() * grid.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const SweepRecord& r = records[i * grid.size() + j];
        CHECK(r.dphi_lr == grid[i]);
        CHECK(r.dphi_rl == grid[j]);
        CHECK(std::abs(r.measures.sum_sq_l1_neg() - 1.0) <= 1e-9);
        peak = std::max(peak, r.measures.negativity);
        if (std::abs(grid[i] + grid[j] - kPi) < 1e-12) {
          CHECK_NEAR(r.measures.negativity, 1.0, 1e-9);
          CHECK(r.measures.c_l1_local <= 1e-9);
        }
      }
    }
    CHECK_NEAR(peak, 1.0, 1e-9);
  }
  SUBCASE("threads do not change the result") {
    const auto grid = GridSpec{-1.0, 7.0, 23}.values();
    const auto serial = sweep_phases(grid, grid, {0.2, 0.65});
    const auto parallel = sweep_phases(grid, grid, {0.2, 0.65}, SweepOptions{4});
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t k = 0; k < serial.size(); ++k) {
      CHECK(serial[k].measures.negativity == parallel[k].measures.negativity);
      CHECK(serial[k].measures.ent_entropy == parallel[k].measures.ent_entropy);
      CHECK(serial[k].dphi_lr == parallel[k].dphi_lr);
    }
  }
  SUBCASE("empty grid") {
    const std::vector<double> empty, one{0.0};
    CHECK_THROWS_AS(sweep_phases(empty, one, {0.5, 0.5}), InvalidInput);
    CHECK_THROWS_AS(sweep_phases(one, empty, {0.5, 0.5}), InvalidInput);
  }
}

TEST_CASE("sweep_initial_coherence") {
  const PhaseSet half = PhaseSet::from_differences(kPi / 2, kPi / 2);
  SUBCASE("examples") {
    const std::vector<double> pa{0.0, 0.25, 0.5}, pb{0.0, 0.25, 0.5, 1.0};
    const auto records = sweep_initial_coherence(pa, pb, half);
    REQUIRE(records.size() == 12);
    for (std::size_t j = 0; j < pb.size(); ++j) CHECK(records[j].measures.negativity == 0.0);
    CHECK_NEAR(records[4 + 1].measures.negativity, 0.75, 1e-9);
    CHECK_NEAR(records[8 + 2].measures.negativity, 1.0, 1e-9);
    CHECK(records[4 + 1].p_a == 0.25);
    CHECK(records[4 + 1].p_b == 0.25);
    const DensityMatrix rho = evolved_product_state({0.25, 0.25}, half);
    CHECK_NEAR(oracle::negativity(oracle::from_matrix(rho.matrix())), 0.75, 1e-10);
  }
  SUBCASE("closed form on a grid") {
    const auto grid = GridSpec{0.0, 1.0, 26}.values();
    const PhaseSet skew = PhaseSet::from_differences(0.4, 1.9);
    for (const SweepRecord& r : sweep_initial_coherence(grid, grid, skew, SweepOptions{2})) {
      CHECK_NEAR(r.measures.negativity, generalized_negativity(r.p_a, r.p_b, 2.3), 1e-9);
    }
  }
  SUBCASE("out of range") {
    const std::vector<double> bad{0.5, 1.2}, ok{0.5};
    CHECK_THROWS_AS(sweep_initial_coherence(bad, ok, half), InvalidInput);
    CHECK_THROWS_AS(sweep_initial_coherence(ok, std::vector<double>{-0.1}, half), InvalidInput);
  }
}

TEST_CASE("identities at maximal initial coherence") {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> phase(-2 * kPi, 4 * kPi);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const MeasureSet m = evaluate_measures({0.5, 0.5}, PhaseSet::from_differences(phase(rng), phase(rng)));
    worst = std::max({worst, std::abs(m.sum_sq_l1_neg() - 1), std::abs(m.sum_sq_l1_conc() - 1),
                      std::abs(m.sum_rel_ent() - 1)});
  }
  INFO("worst residual ", worst);
  CHECK(worst <= 1e-9);
}

TEST_CASE("inequalities for arbitrary product states") {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> u(0.0, 1.0), phase(0.0, 2 * kPi);
  for (int trial = 0; trial < 10000; ++trial) {
    const ProductStateParams params{u(rng), u(rng)};
    for (const auto& r : check_relations(params, PhaseSet::from_differences(phase(rng), phase(rng)))) {
      CHECK(r.lhs_value <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("sums depend only on the initial coherence of A") {
  // rho_A keeps its diagonal (p_A, 1 - p_A), and the pure pair splits it into
  // local coherence and entanglement: the l1 sums equal 4 p_A (1 - p_A) and
  // the entropic sum equals H2(p_A).
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> u(0.0, 1.0), phase(0.0, 2 * kPi);
  for (int trial = 0; trial < 500; ++trial) {
    const double pa = u(rng), pb = u(rng);
    const MeasureSet m = evaluate_measures({pa, pb}, PhaseSet::from_differences(phase(rng), phase(rng)));
    CHECK_NEAR(m.sum_sq_l1_neg(), 4 * pa * (1 - pa), 1e-9);
    CHECK_NEAR(m.sum_sq_l1_conc(), 4 * pa * (1 - pa), 1e-9);
    CHECK_NEAR(m.sum_rel_ent(), binary_entropy(pa), 1e-9);
  }
  for (double pb : {0.1, 0.3, 0.9}) {
    for (const auto& r : check_relations({0.5, pb}, PhaseSet::from_differences(0.7, 1.2))) CHECK(r.saturated);
  }
}

TEST_CASE("entanglement grows as local coherence drains along a time sweep") {
  // Uniform state with the phase sum increasing from 0 to pi.
  double last_n = -1.0, last_c = 2.0;
  for (int k = 0; k <= 50; ++k) {
    const double sum = kPi * k / 50;
    const MeasureSet m = evaluate_measures({0.5, 0.5}, PhaseSet::from_differences(0.25 * sum, 0.75 * sum));
    CHECK(m.negativity >= last_n - 1e-12);
    CHECK(m.c_l1_local <= last_c + 1e-12);
    last_n = m.negativity;
    last_c = m.c_l1_local;
  }
  CHECK_NEAR(last_n, 1.0, 1e-9);
}

/*
 * Copyright 2026 the delannoy-adic authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "delannoy/measures.hpp"
#include "delannoy/rng.hpp"
#include "delannoy/vershik.hpp"
#include "dfs_oracle.hpp"

using namespace delannoy;

namespace {
FinitePath path(const char* w) { return FinitePath::from_string(w); }
Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("parameters from beta") {
  SUBCASE("beta = 1/2") {
    const auto p = MeasureParams::from_beta(q(1, 2));
    CHECK(p.exact());
    CHECK(p.alpha_exact() == q(1, 6));
    CHECK(p.beta_exact() == q(1, 2));
    CHECK(p.gamma_exact() == q(1, 3));
  }
  SUBCASE("degenerate beta = 0") {
    const auto p = MeasureParams::from_beta(q(0, 1));
    CHECK(p.alpha_exact() == 0);
    CHECK(p.gamma_exact() == 1);
  }
  SUBCASE("symmetric point beta = sqrt(2)-1") {
    const auto p = MeasureParams::from_beta(std::sqrt(2.0) - 1.0);
    CHECK(!p.exact());
    CHECK(p.gamma() == doctest::Approx(p.beta()).epsilon(1e-12));
    CHECK(p.alpha() == doctest::Approx(3.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(p.alpha_exact(), std::logic_error);
  }
  SUBCASE("constraints hold exactly for rationals") {
    for (long num = 0; num <= 8; ++num) {
      const auto p = MeasureParams::from_beta(q(num, 8));
      CHECK(p.alpha_exact() + p.beta_exact() + p.gamma_exact() == 1);
      CHECK(p.beta_exact() * p.gamma_exact() == p.alpha_exact());
    }
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(MeasureParams::from_beta(q(3, 2)), std::domain_error);
    CHECK_THROWS_AS(MeasureParams::from_beta(-0.25), std::domain_error);
  }
}

TEST_CASE("cylinder measures") {
  const auto p = MeasureParams::from_beta(q(1, 2));
  CHECK(cylinder_measure_exact(p, FinitePath()) == 1);
  CHECK(cylinder_measure_exact(p, path("d")) == q(1, 6));
  // adic invariance at (1,1): all three cylinders weigh beta*gamma
  CHECK(cylinder_measure_exact(p, path("hv")) == q(1, 6));
  CHECK(cylinder_measure_exact(p, path("vh")) == q(1, 6));
  CHECK(cylinder_measure(p, path("d")) == doctest::Approx(1.0 / 6).epsilon(1e-14));
}

TEST_CASE("adic invariance: every cylinder to (n,k) weighs beta^n gamma^k") {
  for (long num : {1L, 2L, 3L}) {
    const auto p = MeasureParams::from_beta(q(num, 4));
    for (std::uint32_t n = 0; n <= 5; ++n) {
      for (std::uint32_t k = 0; k <= 5; ++k) {
        Rational expected = 1;
        for (std::uint32_t i = 0; i < n; ++i) expected *= p.beta_exact();
        for (std::uint32_t i = 0; i < k; ++i) expected *= p.gamma_exact();
        expected.canonicalize();
        for (const auto& w : oracle::enumerate_paths(n, k))
          CHECK(cylinder_measure_exact(p, FinitePath::from_string(w)) == expected);
      }
    }
  }
}

TEST_CASE("normalization: length-i cylinders sum to one, i <= 8") {
  const auto p = MeasureParams::from_beta(q(1, 2));
  const Move moves[] = {Move::H, Move::V, Move::D};
  for (std::uint32_t len = 0; len <= 8; ++len) {
    Rational sum = 0;
    std::vector<Move> word(len, Move::H);
    // odometer-style walk over all 3^len words
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < len; ++i) total *= 3;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < len; ++i) {
        word[i] = moves[t % 3];
        t /= 3;
      }
      sum += cylinder_measure_exact(p, FinitePath(word));
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("sampling") {
  const auto p = MeasureParams::from_beta(q(1, 2));
  SUBCASE("depth 0") { CHECK(sample_path(p, 0, 7).empty()); }
  SUBCASE("degenerate beta = 1 is all horizontal") {
    const auto all_h = sample_path(MeasureParams::from_beta(q(1, 1)), 50, 123);
    CHECK(all_h.count(Move::H) == 50);
  }
  SUBCASE("determinism") {
    CHECK(sample_path(p, 200, 99) == sample_path(p, 200, 99));
    CHECK(sample_path(p, 200, 99) != sample_path(p, 200, 100));
  }
}

TEST_CASE("ergodic ratios on a short explicit path") {
  // prefixes of hvd: (0,0),(1,0),(1,1),(2,2)
  SUBCASE("base at the root gives all ones") {
    for (double r : ergodic_ratio(path("hvd"), regular(0, 0)))
      CHECK(r == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("base (1,1)") {
    const auto rs = ergodic_ratio(path("hvd"), regular(1, 1));
    REQUIRE(rs.size() == 2);  // (1,1) and (2,2)
    CHECK(rs[0] == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(rs[1] == doctest::Approx(3.0 / 13).epsilon(1e-12));
  }
  SUBCASE("base at the terminal vertex") {
    const auto rs = ergodic_ratio(path("hvd"), regular(2, 2));
    REQUIRE(rs.size() == 1);
    CHECK(rs[0] == doctest::Approx(1.0 / 13).epsilon(1e-12));
  }
}

TEST_CASE("ergodic ratios agree with exact rational quotients at depth 40") {
  const auto p = MeasureParams::from_beta(q(1, 2));
  const auto x = sample_path(p, 40, 5);
  const Vertex v0 = regular(2, 1);
  const auto rs = ergodic_ratio(x, v0);
  std::size_t idx = 0;
  for (const auto& v : x.vertices()) {
    if (v.n < v0.n || v.k < v0.k) continue;
    Rational exact(delannoy_number(v.n - v0.n, v.k - v0.k), delannoy_number(v.n, v.k));
    exact.canonicalize();
    REQUIRE(idx < rs.size());
    CHECK(rs[idx] == doctest::Approx(exact.get_d()).epsilon(1e-12));
    ++idx;
  }
  CHECK(idx == rs.size());
}

TEST_CASE("ergodic ratio approaches beta*gamma at depth 2000") {
  const auto p = MeasureParams::from_beta(q(1, 2));
  const auto x = sample_path(p, 2000, 424242);
  const auto rs = ergodic_ratio(x, regular(1, 1));
  REQUIRE(!rs.empty());
  CHECK(std::abs(rs.back() - 1.0 / 6) < 0.05);
}

TEST_CASE("slope and predicted limit") {
  SUBCASE("symmetric beta = gamma has slope one") {
    const auto p = MeasureParams::from_beta(std::sqrt(2.0) - 1.0);
    const auto sl = slope_and_limit(p);
    CHECK(sl.rho == doctest::Approx(1.0).epsilon(1e-12));
    // at rho = 1 the one-step horizontal limit is 1/(sqrt 2 + 1) = beta
    CHECK(sl.predicted_ratio(1, 0) == doctest::Approx(p.beta()).epsilon(1e-12));
  }
  SUBCASE("beta = 1/2: rho = 3/4 and the limit factorizes as beta^n0 gamma^k0") {
    const auto p = MeasureParams::from_beta(q(1, 2));
    const auto sl = slope_and_limit(p);
    CHECK(sl.rho == doctest::Approx(0.75).epsilon(1e-14));
    for (std::uint32_t n0 = 0; n0 <= 4; ++n0)
      for (std::uint32_t k0 = 0; k0 <= 4; ++k0)
        CHECK(sl.predicted_ratio(n0, k0) ==
              doctest::Approx(std::pow(0.5, n0) * std::pow(1.0 / 3, k0)).epsilon(1e-10));
  }
  SUBCASE("consistency for sampled beta across (0,1)") {
    for (int i = 1; i <= 20; ++i) {
      const double beta = i / 21.0;
      const auto p = MeasureParams::from_beta(beta);
      const auto sl = slope_and_limit(p);
      CHECK(sl.predicted_ratio(1, 0) == doctest::Approx(p.beta()).epsilon(1e-10));
      CHECK(sl.predicted_ratio(0, 1) == doctest::Approx(p.gamma()).epsilon(1e-10));
      CHECK(sl.predicted_ratio(2, 3) ==
            doctest::Approx(std::pow(p.beta(), 2) * std::pow(p.gamma(), 3)).epsilon(1e-10));
    }
  }
  SUBCASE("degenerate weights are rejected") {
    CHECK_THROWS_AS(slope_and_limit(MeasureParams::from_beta(q(0, 1))), std::domain_error);
    CHECK_THROWS_AS(slope_and_limit(MeasureParams::from_beta(q(1, 1))), std::domain_error);
  }
}

TEST_CASE("empirical slope of a deep sampled path") {
  for (long num : {1L, 2L}) {
    const auto p = MeasureParams::from_beta(q(num, 4));
    const auto sl = slope_and_limit(p);
    const auto x = sample_path(p, 100000, 31337);
    const auto t = x.terminal();
    REQUIRE(t.n > 0);
    const double slope = static_cast<double>(t.k) / t.n;
    CHECK(std::abs(slope - sl.rho) <= 5e-2);
  }
}

TEST_CASE("collision experiment") {
  SUBCASE("zero steps count nothing") {
    const auto p = MeasureParams::from_beta(q(1, 2));
    const auto st = collision_experiment(p, 0, 3, 5);
    CHECK(st.collisions == 0);
  }
  SUBCASE("identical streams collide at every step") {
    const auto p = MeasureParams::from_beta(q(1, 2));
    CHECK(pair_collisions(p, 500, 77, 77) == 500);
  }
  SUBCASE("difference walk is centered (3 standard errors)") {
    const auto p = MeasureParams::from_beta(std::sqrt(2.0) - 1.0);
    const auto st = collision_experiment(p, 20000, 20, 2024);
    CHECK(std::abs(st.mean_increment_x) <= 3 * st.se_increment_x);
    CHECK(std::abs(st.mean_increment_y) <= 3 * st.se_increment_y);
    CHECK(st.collisions > 0);
    CHECK(st.min_trial_collisions <= st.max_trial_collisions);
  }
}

TEST_CASE("rng stream derivation separates walkers") {
  CHECK(derive_stream(1, 0) != derive_stream(1, 1));
  CHECK(derive_stream(1, 0) != derive_stream(2, 0));
  SplitMix64 g(42);
  const double u = g.uniform01();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

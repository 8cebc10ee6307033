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

#include "delannoy/dimgroup.hpp"
#include "delannoy/rng.hpp"

using namespace delannoy;

namespace {

IntPoly poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

PolyPair pair(std::initializer_list<long> r, std::initializer_list<long> s) {
  return {poly(r), poly(s)};
}

}  // namespace

TEST_CASE("integer polynomial basics") {
  CHECK(IntPoly().is_zero());
  CHECK(IntPoly().degree() == -1);
  CHECK(poly({0, 0}).is_zero());
  CHECK(poly({1, 3, 1}).degree() == 2);
  CHECK(poly({1, 3, 1}).coeff(1) == 3);
  CHECK(poly({1, 3, 1}).coeff(9) == 0);
  CHECK((poly({1, 1}) + poly({-1, -1})).is_zero());
  CHECK(poly({1, 1}).times_x() == poly({0, 1, 1}));
  CHECK(poly({1, 1}).times_one_plus_x() == poly({1, 2, 1}));
}

TEST_CASE("adjacency matrices") {
  SUBCASE("level 0 is the all-ones column") {
    const auto a = adjacency_matrix(0);
    REQUIRE(a.size() == 3);
    for (const auto& row : a) {
      REQUIRE(row.size() == 1);
      CHECK(row[0] == 1);
    }
  }
  SUBCASE("level 1") {
    const std::vector<std::vector<int>> expected = {
        {1, 0, 0}, {1, 0, 0}, {1, 1, 1}, {0, 0, 1}, {0, 0, 1}};
    CHECK(adjacency_matrix(1) == expected);
  }
  SUBCASE("level 2") {
    const std::vector<std::vector<int>> expected = {
        {1, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 0, 1, 0, 0},
        {0, 0, 1, 1, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}};
    CHECK(adjacency_matrix(2) == expected);
  }
}

TEST_CASE("level dimensions") {
  CHECK(level_dimensions(0) == std::vector<BigInt>{1});
  CHECK(level_dimensions(1) == std::vector<BigInt>({1, 1, 1}));
  CHECK(level_dimensions(2) == std::vector<BigInt>({1, 1, 3, 1, 1}));
  CHECK(level_dimensions(3) == std::vector<BigInt>({1, 1, 5, 3, 5, 1, 1}));

  SUBCASE("regular slots are the anti-diagonal counts, centers lag one level") {
    for (std::uint32_t l = 0; l <= 12; ++l) {
      const auto v = level_dimensions(l);
      REQUIRE(v.size() == 2 * l + 1);
      for (std::uint32_t j = 0; j <= l; ++j) CHECK(v[2 * j] == delannoy_number(l - j, j));
      for (std::uint32_t j = 0; j + 1 <= l; ++j)
        CHECK(v[2 * j + 1] == delannoy_number(l - 1 - j, j));
    }
  }
}

TEST_CASE("vector to polynomial pair") {
  SUBCASE("level 0 vector (1) gives (0, 1)") {
    const std::vector<BigInt> v{1};
    const auto p = vector_to_polypair(v);
    CHECK(p.r.is_zero());
    CHECK(p.s == poly({1}));
  }
  SUBCASE("level 1 dimensions give the order unit") {
    const auto v = level_dimensions(1);
    CHECK(vector_to_polypair(v) == unit_class());
  }
  SUBCASE("level 2 dimensions") {
    const auto v = level_dimensions(2);
    CHECK(vector_to_polypair(v) == pair({1, 1}, {1, 3, 1}));
  }
  SUBCASE("even length is rejected") {
    const std::vector<BigInt> v{1, 2};
    CHECK_THROWS_AS(vector_to_polypair(v), std::invalid_argument);
  }
  SUBCASE("intertwining with B at levels 0..4 (pinned convention)") {
    // polypair(A_l v) == B(polypair(v)) for the dimension vectors and for a
    // few arbitrary integer vectors.
    for (std::uint32_t l = 0; l <= 4; ++l) {
      const auto a = adjacency_matrix(l);
      SplitMix64 g(1000 + l);
      for (int rep = 0; rep < 8; ++rep) {
        std::vector<BigInt> v(2 * l + 1);
        for (auto& c : v) c = static_cast<long>(g.next() % 19) - 9;
        std::vector<BigInt> w(a.size());
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t j = 0; j < v.size(); ++j)
            if (a[i][j]) w[i] += v[j];
        CHECK(vector_to_polypair(w) == apply_b(vector_to_polypair(v)));
      }
    }
  }
}

TEST_CASE("B and its inverse") {
  CHECK(apply_b(pair({1}, {1, 1})) == pair({1, 1}, {1, 3, 1}));
  CHECK(apply_b(pair({}, {})) == pair({}, {}));
  CHECK(apply_b(pair({1, 1}, {1, 3, 1})) == pair({1, 3, 1}, {1, 5, 5, 1}));

  CHECK(apply_b_inverse(pair({1, 1}, {1, 3, 1})) == pair({1}, {1, 1}));
  CHECK(apply_b_inverse(pair({1}, {1, 1})) == pair({}, {1}));
  CHECK_THROWS_AS(apply_b_inverse(pair({1}, {0, 1})), NotDivisibleError);

  SUBCASE("inverse identity on 200 seeded random pairs") {
    SplitMix64 g(20260811);
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<BigInt> rc(g.next() % 7 + 1), sc(g.next() % 7 + 1);
      for (auto& c : rc) c = static_cast<long>(g.next() % 19) - 9;
      for (auto& c : sc) c = static_cast<long>(g.next() % 19) - 9;
      const PolyPair p{IntPoly(std::move(rc)), IntPoly(std::move(sc))};
      CHECK(apply_b_inverse(apply_b(p)) == p);
    }
  }
}

TEST_CASE("canonical form") {
  SUBCASE("unit chain reduces to (0, 1)") {
    const auto c = canonical_form(pair({1, 1}, {1, 3, 1}));
    CHECK(c == pair({}, {1}));
    CHECK(canonical_form(unit_class()) == pair({}, {1}));
  }
  SUBCASE("already canonical pairs are fixed") {
    CHECK(canonical_form(pair({}, {1})) == pair({}, {1}));
    CHECK(canonical_form(pair({1}, {0, 1})) == pair({1}, {0, 1}));
  }
  SUBCASE("result always separates the constant terms") {
    SplitMix64 g(7);
    for (int rep = 0; rep < 100; ++rep) {
      std::vector<BigInt> rc(g.next() % 5 + 1), sc(g.next() % 5 + 1);
      for (auto& c : rc) c = static_cast<long>(g.next() % 19) - 9;
      for (auto& c : sc) c = static_cast<long>(g.next() % 19) - 9;
      const PolyPair p{IntPoly(std::move(rc)), IntPoly(std::move(sc))};
      if (p.is_zero()) continue;
      const auto c = canonical_form(p);
      CHECK(c.r.at_zero() != c.s.at_zero());
      CHECK(class_equal(c, p));
    }
  }
  SUBCASE("zero pair is rejected") {
    CHECK_THROWS_AS(canonical_form(pair({}, {})), std::domain_error);
  }
}

TEST_CASE("class equality") {
  CHECK(class_equal(pair({1}, {1, 1}), pair({1, 1}, {1, 3, 1})));
  CHECK(class_equal(pair({}, {1}), pair({1}, {1, 1})));
  CHECK(!class_equal(pair({1}, {0, 1}), pair({}, {1})));
  CHECK(class_equal(pair({}, {}), pair({}, {})));
  CHECK(!class_equal(pair({}, {}), pair({}, {1})));

  SUBCASE("equivalence relation on B-shifts of seeded pairs") {
    SplitMix64 g(99);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<BigInt> rc(g.next() % 4 + 1), sc(g.next() % 4 + 1);
      for (auto& c : rc) c = static_cast<long>(g.next() % 19) - 9;
      for (auto& c : sc) c = static_cast<long>(g.next() % 19) - 9;
      const PolyPair p{IntPoly(std::move(rc)), IntPoly(std::move(sc))};
      if (p.is_zero()) continue;
      const auto q1 = apply_b(p);
      const auto q2 = apply_b(q1);
      CHECK(class_equal(p, p));
      CHECK(class_equal(p, q1));
      CHECK(class_equal(q1, p));
      CHECK((class_equal(p, q1) && class_equal(q1, q2) && class_equal(p, q2)));
    }
  }
}

TEST_CASE("class addition") {
  SUBCASE("zero pair is the identity") {
    const auto p = pair({1}, {1, 1});
    CHECK(class_equal(class_add(p, pair({}, {})), p));
    CHECK(class_equal(class_add(pair({}, {}), p), p));
  }
  SUBCASE("unit plus unit doubles componentwise at matched degree") {
    const auto u = unit_class();
    const auto two = class_add(u, u);
    CHECK(two == pair({2}, {2, 2}));
  }
  SUBCASE("mismatched degrees align through B") {
    // the unit is pushed one step to meet B(unit), so the sum is 2 B(unit)
    const auto sum = class_add(unit_class(), apply_b(unit_class()));
    CHECK(sum == pair({2, 2}, {2, 6, 2}));
    CHECK(class_equal(sum, class_add(apply_b(unit_class()), unit_class())));
  }
  SUBCASE("commutative up to class equality on seeded pairs") {
    SplitMix64 g(5);
    for (int rep = 0; rep < 30; ++rep) {
      std::vector<BigInt> rc(g.next() % 4 + 1), sc(g.next() % 4 + 2), rc2(g.next() % 4 + 1),
          sc2(g.next() % 4 + 2);
      for (auto& c : rc) c = static_cast<long>(g.next() % 19) - 9;
      for (auto& c : sc) c = static_cast<long>(g.next() % 19) - 9;
      for (auto& c : rc2) c = static_cast<long>(g.next() % 19) - 9;
      for (auto& c : sc2) c = static_cast<long>(g.next() % 19) - 9;
      const PolyPair a{IntPoly(std::move(rc)), IntPoly(std::move(sc))};
      const PolyPair b{IntPoly(std::move(rc2)), IntPoly(std::move(sc2))};
      if (a.is_zero() || b.is_zero()) continue;
      CHECK(class_equal(class_add(a, b), class_add(b, a)));
    }
  }
}

TEST_CASE("Delannoy polynomials") {
  CHECK(delannoy_polynomial(0) == poly({1}));
  CHECK(delannoy_polynomial(1) == poly({1, 1}));
  CHECK(delannoy_polynomial(2) == poly({1, 3, 1}));
  CHECK(delannoy_polynomial(3) == poly({1, 5, 5, 1}));

  SUBCASE("B-power identity: B^n (P0,P1) = (Pn, Pn+1) for n <= 20") {
    PolyPair p{delannoy_polynomial(0), delannoy_polynomial(1)};
    for (std::uint32_t n = 0; n <= 20; ++n) {
      CHECK(p.r == delannoy_polynomial(n));
      CHECK(p.s == delannoy_polynomial(n + 1));
      p = apply_b(p);
    }
  }
  SUBCASE("coefficients are the anti-diagonals, n <= 30") {
    for (std::uint32_t n = 0; n <= 30; ++n) {
      const auto pn = delannoy_polynomial(n);
      REQUIRE(pn.degree() == static_cast<int>(n));
      for (std::uint32_t j = 0; j <= n; ++j) CHECK(pn.coeff(j) == delannoy_number(j, n - j));
    }
  }
}

TEST_CASE("positivity scan") {
  CHECK(positivity_scan(unit_class()) == Positivity::Positive);
  CHECK(positivity_scan(pair({}, {})) == Positivity::Positive);
  // (0,-1) is the negative of the unit class; no image is nonnegative
  CHECK(positivity_scan(pair({}, {-1})) == Positivity::Unknown);
  // (-1,1) turns nonnegative after one forward step: B(-1,1) = (1,1)
  CHECK(positivity_scan(pair({-1}, {1})) == Positivity::Positive);
}

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

#include <algorithm>

#include "delannoy/diagram.hpp"
#include "dfs_oracle.hpp"

using namespace delannoy;

TEST_CASE("path words round-trip") {
  const auto p = FinitePath::from_string("hhdv");
  CHECK(p.to_string() == "hhdv");
  CHECK(p.terminal() == regular(3, 2));
  CHECK(p.count(Move::H) == 2);
  CHECK(p.count(Move::D) == 1);
  CHECK(p.count(Move::V) == 1);
  CHECK_THROWS_AS(FinitePath::from_string("hxv"), std::invalid_argument);
}

TEST_CASE("prefix vertices") {
  const auto vs = FinitePath::from_string("hvd").vertices();
  REQUIRE(vs.size() == 4);
  CHECK(vs[0] == regular(0, 0));
  CHECK(vs[1] == regular(1, 0));
  CHECK(vs[2] == regular(1, 1));
  CHECK(vs[3] == regular(2, 2));
}

TEST_CASE("dim_between") {
  CHECK(dim_between(regular(0, 0), regular(4, 3)) == delannoy_number(4, 3));
  CHECK(dim_between(regular(2, 1), regular(2, 1)) == 1);
  CHECK(dim_between(regular(1, 1), regular(3, 2)) == 5);
  CHECK(dim_between(regular(2, 1), regular(1, 5)) == 0);
  CHECK_THROWS_AS(dim_between({Vertex::Kind::Center, 0, 0}, regular(1, 1)),
                  std::invalid_argument);
}

TEST_CASE("extremal paths") {
  CHECK(min_path(1, 1).to_string() == "hv");
  CHECK(min_path(0, 3).to_string() == "vvv");
  CHECK(min_path(3, 2).to_string() == "hhhvv");
  CHECK(max_path(1, 1).to_string() == "vh");
  CHECK(max_path(4, 0).to_string() == "hhhh");
  CHECK(max_path(2, 3).to_string() == "vvvhh");
}

TEST_CASE("compare_paths on (1,1)") {
  const auto hv = FinitePath::from_string("hv");
  const auto d = FinitePath::from_string("d");
  const auto vh = FinitePath::from_string("vh");
  CHECK(compare_paths(hv, d) == std::strong_ordering::less);
  CHECK(compare_paths(d, vh) == std::strong_ordering::less);
  CHECK(compare_paths(hv, vh) == std::strong_ordering::less);
  CHECK(compare_paths(d, d) == std::strong_ordering::equal);
  CHECK(compare_paths(vh, d) == std::strong_ordering::greater);
  CHECK_THROWS_AS(compare_paths(hv, FinitePath::from_string("hh")), PathMismatchError);
}

TEST_CASE("compare_paths is a strict total order, exhaustively for n,k <= 4") {
  for (std::uint32_t n = 0; n <= 4; ++n) {
    for (std::uint32_t k = 0; k <= 4; ++k) {
      auto words = oracle::enumerate_paths(n, k);
      std::vector<FinitePath> paths;
      paths.reserve(words.size());
      for (const auto& w : words) paths.push_back(FinitePath::from_string(w));
      std::sort(paths.begin(), paths.end(), [](const FinitePath& a, const FinitePath& b) {
        return compare_paths(a, b) == std::strong_ordering::less;
      });
      // Agreement with the sorted linear order on every pair gives
      // antisymmetry and transitivity in one sweep.
      for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = 0; j < paths.size(); ++j) {
          const auto c = compare_paths(paths[i], paths[j]);
          if (i < j) CHECK(c == std::strong_ordering::less);
          if (i == j) CHECK(c == std::strong_ordering::equal);
          if (i > j) CHECK(c == std::strong_ordering::greater);
        }
      }
      if (!paths.empty()) {
        CHECK(paths.front() == min_path(n, k));
        CHECK(paths.back() == max_path(n, k));
      }
    }
  }
}

TEST_CASE("distinct path count equals the Delannoy number, n,k <= 6") {
  for (std::uint32_t n = 0; n <= 6; ++n)
    for (std::uint32_t k = 0; k <= 6; ++k)
      CHECK(BigInt(oracle::enumerate_paths(n, k).size()) == delannoy_number(n, k));
}

TEST_CASE("Bratteli level accounting: #h + #v + 2#d = n + k") {
  for (const auto& w : oracle::enumerate_paths(3, 4)) {
    const auto p = FinitePath::from_string(w);
    CHECK(p.count(Move::H) + p.count(Move::V) + 2 * p.count(Move::D) == 7);
  }
}

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

#include "delannoy/vershik.hpp"

namespace delannoy {

namespace {

// Rebuild: prefix ++ [bumped move] ++ tail(after index j).
FinitePath splice(const FinitePath& head, Move bumped, const FinitePath& x, std::size_t j) {
  std::vector<Move> ms = head.moves();
  ms.reserve(head.size() + 1 + (x.size() - j - 1));
  ms.push_back(bumped);
  ms.insert(ms.end(), x.moves().begin() + static_cast<std::ptrdiff_t>(j) + 1, x.moves().end());
  return FinitePath(std::move(ms));
}

}  // namespace

FinitePath successor(const FinitePath& x) {
  // Root-outward scan for the first non-maximal edge. An H edge is always
  // maximal; a V edge is maximal only on the k-axis (unique edge); within a
  // D move the center edge is unique, its second half has rank D < H.
  std::uint32_t n = 0, k = 0;
  const auto& ms = x.moves();
  for (std::size_t j = 0; j < ms.size(); ++j) {
    switch (ms[j]) {
      case Move::H:
        ++n;
        break;
      case Move::V:
        ++k;
        if (n >= 1) return splice(min_path(n - 1, k - 1), Move::D, x, j);
        break;
      case Move::D:
        ++n;
        ++k;
        return splice(min_path(n - 1, k), Move::H, x, j);
    }
  }
  throw MaximalPathError();
}

FinitePath predecessor(const FinitePath& x) {
  std::uint32_t n = 0, k = 0;
  const auto& ms = x.moves();
  for (std::size_t j = 0; j < ms.size(); ++j) {
    switch (ms[j]) {
      case Move::V:
        ++k;
        break;
      case Move::H:
        ++n;
        if (k >= 1) return splice(max_path(n - 1, k - 1), Move::D, x, j);
        break;
      case Move::D:
        ++n;
        ++k;
        return splice(max_path(n, k - 1), Move::V, x, j);
    }
  }
  throw MinimalPathError();
}

std::vector<FinitePath> orbit_enumerate(std::uint32_t n, std::uint32_t k) {
  std::vector<FinitePath> orbit;
  orbit.push_back(min_path(n, k));
  for (;;) {
    try {
      orbit.push_back(successor(orbit.back()));
    } catch (const MaximalPathError&) {
      break;
    }
  }
  return orbit;
}

std::vector<Move> coding_sequence(const FinitePath& x, std::uint64_t iterations) {
  std::vector<Move> symbols;
  if (iterations == 0) return symbols;
  symbols.reserve(iterations);
  FinitePath cur = x;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    if (cur.empty()) throw std::domain_error("coding_sequence requires a nonempty path");
    symbols.push_back(cur.moves().front());
    if (i + 1 == iterations) break;
    try {
      cur = successor(cur);
    } catch (const MaximalPathError&) {
      throw TruncationExhausted(std::move(symbols));
    }
  }
  return symbols;
}

}  // namespace delannoy

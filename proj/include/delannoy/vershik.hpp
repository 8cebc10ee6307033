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

#pragma once

#include <stdexcept>
#include <vector>

#include "delannoy/diagram.hpp"

namespace delannoy {

class MaximalPathError : public std::runtime_error {
 public:
  MaximalPathError() : std::runtime_error("path is maximal; no successor") {}
};

class MinimalPathError : public std::runtime_error {
 public:
  MinimalPathError() : std::runtime_error("path is minimal; no predecessor") {}
};

/// Raised by coding_sequence when a further transformation step is required
/// but the finite truncation has reached its maximal path. Carries the
/// symbols produced so far.
class TruncationExhausted : public std::runtime_error {
 public:
  explicit TruncationExhausted(std::vector<Move> produced)
      : std::runtime_error("finite truncation exhausted"), produced_(std::move(produced)) {}
  const std::vector<Move>& produced() const { return produced_; }

 private:
  std::vector<Move> produced_;
};

/// The adic transformation: the immediate compare_paths-successor among paths
/// with the same terminal vertex. Scans the move word from the root for the
/// first non-maximal edge (a V arriving at an interior vertex, or the second
/// half of a D), bumps it one rank, and resets everything below to minimal.
/// Throws MaximalPathError on the maximal path.
FinitePath successor(const FinitePath& x);

/// Exact inverse of successor; throws MinimalPathError on the minimal path.
FinitePath predecessor(const FinitePath& x);

/// All paths to (n,k) in increasing tail order, generated from min_path(n,k)
/// by iterating successor. Size is D(n,k).
std::vector<FinitePath> orbit_enumerate(std::uint32_t n, std::uint32_t k);

/// First `iterations` symbols of the coding of x: symbol i is the first move
/// of the i-th transform of x. Succeeds when exactly `iterations` symbols can
/// be produced; throws TruncationExhausted (with the partial output) when a
/// further step hits the maximal path before that.
std::vector<Move> coding_sequence(const FinitePath& x, std::uint64_t iterations);

}  // namespace delannoy

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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "delannoy/diagram.hpp"

namespace delannoy {

class NonPrimeError : public std::domain_error {
 public:
  explicit NonPrimeError(std::uint64_t p)
      : std::domain_error("modulus " + std::to_string(p) + " is not prime") {}
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest prime power the verification sweeps will expand.
inline constexpr std::uint64_t kMaxPrimePower = 1u << 20;

/// Deterministic trial division; the sweeps only ever see small moduli.
bool is_prime(std::uint64_t p);

struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// binom(n,k) mod p by the digitwise product over base-p expansions.
Residue binom_mod_lucas(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// D(n,k) mod p by the rolling-row recurrence carried out entirely in mod-p
/// arithmetic, independent of the big-integer table.
Residue delannoy_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

/// (-1)^(n mod p^r) as a residue mod p.
Residue delannoy_sign(std::uint64_t n, std::uint32_t p, std::uint32_t r);

/// Outcome of one congruence sweep. `counterexample` holds the first failing
/// index pair when pass is false.
struct VerificationReport {
  std::string check;
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::string range;
  std::uint64_t cases = 0;
  bool pass = true;
  std::optional<std::array<std::uint64_t, 2>> counterexample;
};

/// C(p^r-1, j) == (-1)^j mod p for 0 <= j <= p^r-1.
VerificationReport check_lemma_alternating(std::uint32_t p, std::uint32_t r);
/// C(j + i p^r, p^r-1) == C(j, p^r-1) mod p for 0 <= j <= p^r-1, 0 <= i <= i_max.
VerificationReport check_lemma_periodic(std::uint32_t p, std::uint32_t r, std::uint32_t i_max);
/// C(p^r-1+j, p^r-1) == 0 mod p for 1 <= j <= p^r-1.
VerificationReport check_lemma_vanish(std::uint32_t p, std::uint32_t r);
/// D(n, p^r-1) == (-1)^(n mod p^r) mod p for 0 <= n <= n_max.
VerificationReport check_delannoy_sign(std::uint32_t p, std::uint32_t r, std::uint64_t n_max);

/// The rows and columns {(n, p^r-1)} and {(p^r-1, k)} for 1 <= r <= max_r.
/// Every infinite path crosses each of them, and D is never 0 mod p there.
/// Residues along the set are cached; hits() grows the cache as needed and is
/// therefore not const.
class BlockingSet {
 public:
  BlockingSet(std::uint32_t p, std::uint32_t max_r);

  std::uint32_t p() const { return p_; }
  std::uint32_t max_r() const { return max_r_; }
  bool contains(std::uint32_t n, std::uint32_t k) const;

  /// Prefix vertices of x lying in the set, each with D(n,k) mod p.
  std::vector<std::pair<Vertex, Residue>> hits(const FinitePath& x);

 private:
  void ensure(std::uint32_t max_coord);

  std::uint32_t p_;
  std::uint32_t max_r_;
  std::vector<std::uint64_t> marks_;                       // p^r - 1, r = 1..max_r
  std::uint32_t cached_max_ = 0;
  std::vector<std::vector<std::uint32_t>> residue_rows_;   // [r-1][n] = D(n, p^r-1) mod p
};

}  // namespace delannoy

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
#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace delannoy {

/// Exact arbitrary-precision integer used for all path counts.
using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense table of exact counts, indexed (n, k) with n the row.
struct GridTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> cells;

  GridTable() = default;
  GridTable(std::size_t r, std::size_t c) : rows(r), cols(c), cells(r * c) {}

  const BigInt& at(std::size_t n, std::size_t k) const { return cells[n * cols + k]; }
  BigInt& at(std::size_t n, std::size_t k) { return cells[n * cols + k]; }
};

/// D(n,k): monotone {H,V,D}-path count from the origin to (n,k).
/// Computed by the three-term recurrence with rolling rows; exact.
BigInt delannoy_number(std::uint64_t n, std::uint64_t k);

/// In-place row step of the recurrence: row[j] = D(n,j) becomes D(n+1,j).
void delannoy_advance_row(std::vector<BigInt>& row);

/// Full table of D(n,k) for 0 <= n <= nmax, 0 <= k <= kmax.
GridTable delannoy_table(std::size_t nmax, std::size_t kmax);

/// binom(n,k), with the 0-outside-range convention (k < 0 or k > n gives 0).
BigInt binomial(std::uint64_t n, std::int64_t k);

/// The six classical single-sum expressions for D(n,k), each evaluated
/// independently of the recurrence. Requires n >= k; throws std::domain_error
/// otherwise.
std::array<BigInt, 6> delannoy_closed_forms(std::uint64_t n, std::uint64_t k);

/// Coefficients of the power series 1/(1-(x+y+xy)) for total degree n+k <= N,
/// computed by summing truncated powers of (x+y+xy). Cells with n+k > N are 0.
GridTable gf_truncation(std::size_t N);

/// Root-to-(n,k) path count in the Nicomachus graph (doubled horizontal and
/// tripled vertical axis edges, one diagonal out of the origin); equals
/// 2^n * 3^k, but is computed from the edge-multiplicity recurrence so the
/// identity stays testable.
BigInt nicomachus_count(std::uint64_t n, std::uint64_t k);

}  // namespace delannoy

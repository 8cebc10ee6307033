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

#include "delannoy/numbers.hpp"

#include <stdexcept>
#include <utility>

namespace delannoy {

// row[j] = D(n, j) -> row'[j] = D(n+1, j), in place with a carried diagonal.
void delannoy_advance_row(std::vector<BigInt>& row) {
  BigInt diag_prev;  // D(n, j-1) before overwrite
  BigInt tmp;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j == 0) {
      diag_prev = row[0];
      row[0] = 1;
      continue;
    }
    // D(n+1,j) = D(n+1,j-1) + D(n,j-1) + D(n,j)
    tmp = row[j];  // D(n, j)
    mpz_add(row[j].get_mpz_t(), row[j - 1].get_mpz_t(), diag_prev.get_mpz_t());
    mpz_add(row[j].get_mpz_t(), row[j].get_mpz_t(), tmp.get_mpz_t());
    diag_prev = std::move(tmp);
  }
}

BigInt delannoy_number(std::uint64_t n, std::uint64_t k) {
  if (n == 0 || k == 0) return 1;
  std::vector<BigInt> row(k + 1, BigInt(1));  // D(0, j) = 1
  for (std::uint64_t i = 1; i <= n; ++i) delannoy_advance_row(row);
  return row[k];
}

GridTable delannoy_table(std::size_t nmax, std::size_t kmax) {
  GridTable t(nmax + 1, kmax + 1);
  for (std::size_t k = 0; k <= kmax; ++k) t.at(0, k) = 1;
  for (std::size_t n = 1; n <= nmax; ++n) {
    t.at(n, 0) = 1;
    for (std::size_t k = 1; k <= kmax; ++k)
      t.at(n, k) = t.at(n, k - 1) + t.at(n - 1, k - 1) + t.at(n - 1, k);
  }
  return t;
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

std::array<BigInt, 6> delannoy_closed_forms(std::uint64_t n, std::uint64_t k) {
  if (n < k) throw std::domain_error("delannoy_closed_forms requires n >= k");
  std::array<BigInt, 6> out{};
  BigInt pow2 = 1;
  for (std::uint64_t d = 0; d <= k; ++d) {
    const std::int64_t ds = static_cast<std::int64_t>(d);
    const std::int64_t ks = static_cast<std::int64_t>(k);
    out[0] += binomial(k, ds) * binomial(n + k - d, ks);
    out[1] += pow2 * binomial(n, ds) * binomial(k, ds);
    out[2] += binomial(k, ds) * binomial(n + d, ks);
    out[3] += binomial(k, ks - ds) * binomial(n + d, ks);
    out[4] += binomial(n + k - d, ks - ds) * binomial(n, ds);
    out[5] += binomial(n + d, ds) * binomial(n, ks - ds);
    pow2 *= 2;
  }
  return out;
}

GridTable gf_truncation(std::size_t N) {
  // 1/(1-(x+y+xy)) = sum_m (x+y+xy)^m; the m-th power has total degree >= m,
  // so summing m = 0..N is exact on the truncated triangle.
  GridTable acc(N + 1, N + 1);
  GridTable cur(N + 1, N + 1);
  cur.at(0, 0) = 1;
  acc.at(0, 0) = 1;
  for (std::size_t m = 1; m <= N; ++m) {
    GridTable next(N + 1, N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      for (std::size_t k = 0; k + n <= N; ++k) {
        BigInt& c = next.at(n, k);
        if (n >= 1) c += cur.at(n - 1, k);
        if (k >= 1) c += cur.at(n, k - 1);
        if (n >= 1 && k >= 1) c += cur.at(n - 1, k - 1);
        acc.at(n, k) += c;
      }
    }
    cur = std::move(next);
  }
  return acc;
}

BigInt nicomachus_count(std::uint64_t n, std::uint64_t k) {
  // Axis recurrences come from the doubled/tripled axis edges; exactly one
  // diagonal edge leaves the origin, which forces N(1,1) = 6.
  std::vector<BigInt> row(k + 1);
  row[0] = 1;
  for (std::uint64_t j = 1; j <= k; ++j) row[j] = 3 * row[j - 1];
  for (std::uint64_t i = 1; i <= n; ++i) {
    BigInt diag_prev;
    BigInt tmp;
    for (std::uint64_t j = 0; j <= k; ++j) {
      if (j == 0) {
        diag_prev = row[0];
        row[0] *= 2;
        continue;
      }
      tmp = row[j];
      row[j] += row[j - 1] + diag_prev;
      diag_prev = std::move(tmp);
    }
  }
  return row[k];
}

}  // namespace delannoy

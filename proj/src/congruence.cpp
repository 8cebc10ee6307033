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

#include "delannoy/congruence.hpp"

#include <algorithm>

namespace delannoy {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw NonPrimeError(p);
}

std::uint64_t checked_prime_power(std::uint32_t p, std::uint32_t r) {
  std::uint64_t m = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    m *= p;
    if (m > kMaxPrimePower)
      throw ResourceLimitError("prime power exceeds the configured sweep limit");
  }
  return m;
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// C(a,b) mod p for digits 0 <= a,b < p. All factors are units mod p, so the
// denominator inverts by Fermat.
std::uint32_t small_binom_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  b = std::min(b, a - b);
  std::uint64_t num = 1, den = 1;
  for (std::uint32_t i = 1; i <= b; ++i) {
    num = num * (a - b + i) % p;
    den = den * i % p;
  }
  return static_cast<std::uint32_t>(num * mod_pow(den, p - 2, p) % p);
}

}  // namespace

Residue binom_mod_lucas(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  require_prime(p);
  std::uint64_t prod = 1;
  while ((n != 0 || k != 0) && prod != 0) {
    const auto nd = static_cast<std::uint32_t>(n % p);
    const auto kd = static_cast<std::uint32_t>(k % p);
    prod = prod * small_binom_mod(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return {static_cast<std::uint32_t>(prod), p};
}

Residue delannoy_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  require_prime(p);
  if (n == 0 || k == 0) return {1 % p, p};
  std::vector<std::uint32_t> row(k + 1, 1u % p);
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::uint32_t diag_prev = row[0];
    row[0] = 1 % p;
    for (std::uint64_t j = 1; j <= k; ++j) {
      const std::uint32_t tmp = row[j];
      row[j] = (row[j - 1] + diag_prev + tmp) % p;
      diag_prev = tmp;
    }
  }
  return {row[k], p};
}

Residue delannoy_sign(std::uint64_t n, std::uint32_t p, std::uint32_t r) {
  require_prime(p);
  const std::uint64_t m = checked_prime_power(p, r);
  const bool odd = (n % m) % 2 == 1;
  return {odd ? p - 1 : 1u, p};
}

VerificationReport check_lemma_alternating(std::uint32_t p, std::uint32_t r) {
  require_prime(p);
  if (r < 1) throw std::domain_error("r must be >= 1");
  const std::uint64_t m = checked_prime_power(p, r);
  VerificationReport rep{"alternating", p, r, "j=0.." + std::to_string(m - 1), 0, true, {}};
  for (std::uint64_t j = 0; j < m; ++j) {
    ++rep.cases;
    const std::uint32_t expected = (j % 2 == 1) ? p - 1 : 1u;
    if (binom_mod_lucas(m - 1, j, p).value != expected % p) {
      rep.pass = false;
      rep.counterexample = {{m - 1, j}};
      break;
    }
  }
  return rep;
}

VerificationReport check_lemma_periodic(std::uint32_t p, std::uint32_t r, std::uint32_t i_max) {
  require_prime(p);
  if (r < 1) throw std::domain_error("r must be >= 1");
  const std::uint64_t m = checked_prime_power(p, r);
  VerificationReport rep{"periodic", p,    r, "j=0.." + std::to_string(m - 1) + ", i=0.." + std::to_string(i_max),
                         0,          true, {}};
  for (std::uint64_t j = 0; j < m; ++j) {
    const std::uint32_t base = binom_mod_lucas(j, m - 1, p).value;
    for (std::uint64_t i = 0; i <= i_max; ++i) {
      ++rep.cases;
      if (binom_mod_lucas(j + i * m, m - 1, p).value != base) {
        rep.pass = false;
        rep.counterexample = {{j, i}};
        return rep;
      }
    }
  }
  return rep;
}

VerificationReport check_lemma_vanish(std::uint32_t p, std::uint32_t r) {
  require_prime(p);
  if (r < 1) throw std::domain_error("r must be >= 1");
  const std::uint64_t m = checked_prime_power(p, r);
  VerificationReport rep{"vanish", p, r, "j=1.." + std::to_string(m - 1), 0, true, {}};
  for (std::uint64_t j = 1; j < m; ++j) {
    ++rep.cases;
    if (binom_mod_lucas(m - 1 + j, m - 1, p).value != 0) {
      rep.pass = false;
      rep.counterexample = {{m - 1 + j, j}};
      break;
    }
  }
  return rep;
}

VerificationReport check_delannoy_sign(std::uint32_t p, std::uint32_t r, std::uint64_t n_max) {
  require_prime(p);
  const std::uint64_t m = checked_prime_power(p, r);
  VerificationReport rep{"delannoy_sign", p, r, "n=0.." + std::to_string(n_max), 0, true, {}};
  // Sweep one rolling row over n so the whole range costs O(n_max * p^r).
  const std::uint64_t k = m - 1;
  std::vector<std::uint32_t> row(k + 1, 1u % p);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    if (n > 0) {
      std::uint32_t diag_prev = row[0];
      row[0] = 1 % p;
      for (std::uint64_t j = 1; j <= k; ++j) {
        const std::uint32_t tmp = row[j];
        row[j] = (row[j - 1] + diag_prev + tmp) % p;
        diag_prev = tmp;
      }
    }
    ++rep.cases;
    if (row[k] != delannoy_sign(n, p, r).value % p) {
      rep.pass = false;
      rep.counterexample = {{n, k}};
      break;
    }
  }
  return rep;
}

BlockingSet::BlockingSet(std::uint32_t p, std::uint32_t max_r) : p_(p), max_r_(max_r) {
  require_prime(p);
  std::uint64_t m = 1;
  for (std::uint32_t r = 1; r <= max_r; ++r) {
    m *= p;
    if (m > kMaxPrimePower) throw ResourceLimitError("blocking set radius exceeds the sweep limit");
    marks_.push_back(m - 1);
  }
  residue_rows_.resize(marks_.size());
}

bool BlockingSet::contains(std::uint32_t n, std::uint32_t k) const {
  for (std::uint64_t m : marks_)
    if (n == m || k == m) return true;
  return false;
}

void BlockingSet::ensure(std::uint32_t max_coord) {
  if (max_coord <= cached_max_ && cached_max_ > 0) return;
  const std::uint32_t target = std::max<std::uint32_t>(max_coord, 64);
  for (std::size_t idx = 0; idx < marks_.size(); ++idx) {
    const std::uint64_t k = marks_[idx];
    std::vector<std::uint32_t>& out = residue_rows_[idx];
    out.assign(target + 1, 0);
    std::vector<std::uint32_t> row(k + 1, 1u % p_);
    out[0] = row[k];
    for (std::uint32_t n = 1; n <= target; ++n) {
      std::uint32_t diag_prev = row[0];
      row[0] = 1 % p_;
      for (std::uint64_t j = 1; j <= k; ++j) {
        const std::uint32_t tmp = row[j];
        row[j] = (row[j - 1] + diag_prev + tmp) % p_;
        diag_prev = tmp;
      }
      out[n] = row[k];
    }
  }
  cached_max_ = target;
}

std::vector<std::pair<Vertex, Residue>> BlockingSet::hits(const FinitePath& x) {
  const Vertex t = x.terminal();
  ensure(std::max(t.n, t.k));
  std::vector<std::pair<Vertex, Residue>> out;
  std::uint32_t n = 0, k = 0;
  for (std::size_t i = 0; i <= x.size(); ++i) {
    if (i > 0) {
      const Move m = x.moves()[i - 1];
      if (m != Move::V) ++n;
      if (m != Move::H) ++k;
    }
    for (std::size_t idx = 0; idx < marks_.size(); ++idx) {
      const std::uint64_t mark = marks_[idx];
      if (k == mark) {
        out.emplace_back(regular(n, k), Residue{residue_rows_[idx][n], p_});
        break;   // a vertex can sit on a row and a column; report it once
      }
      if (n == mark) {
        // D is symmetric, so the row table answers column hits too.
        out.emplace_back(regular(n, k), Residue{residue_rows_[idx][k], p_});
        break;
      }
    }
  }
  return out;
}

}  // namespace delannoy

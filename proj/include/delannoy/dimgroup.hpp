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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "delannoy/numbers.hpp"

namespace delannoy {

class NotDivisibleError : public std::runtime_error {
 public:
  NotDivisibleError() : std::runtime_error("s - (1+x)r is not divisible by x (r(0) != s(0))") {}
};

/// Dense integer polynomial, coefficients low-degree first, no trailing
/// zeros. The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(long c);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^i (0 beyond the stored degree).
  const BigInt& coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& at_zero() const { return coeff(0); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  IntPoly times_x() const;
  IntPoly times_one_plus_x() const;
  /// (this - other); used by the B-inverse step.
  IntPoly minus(const IntPoly& other) const;
  /// this / x; requires coeff(0) == 0.
  IntPoly shift_down() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// A dimension-group class representative: the pair (r, s).
struct PolyPair {
  IntPoly r;
  IntPoly s;
  bool is_zero() const { return r.is_zero() && s.is_zero(); }
  friend bool operator==(const PolyPair&, const PolyPair&) = default;
};

/// The class of the order unit: (1, x+1).
PolyPair unit_class();

/// Connecting homomorphism Z^(2l+1) -> Z^(2l+3) acting on column vectors
/// (the printed matrices are its transpose). Entries are 0/1.
std::vector<std::vector<int>> adjacency_matrix(std::uint32_t level);

/// Vertex dimensions at a level, ordered from the (level,0) side: regular
/// vertices interleaved with centers, length 2*level+1. Computed as the
/// adjacency product applied to (1).
std::vector<BigInt> level_dimensions(std::uint32_t level);

/// Level vector -> polynomial pair: even slots are the s coefficients, odd
/// slots the r coefficients. This is the unique even/odd assignment under
/// which the adjacency matrices intertwine with apply_b (pinned by a
/// regression test); it sends (1,1,1) to the order unit (1, x+1).
/// Throws std::invalid_argument for even-length vectors.
PolyPair vector_to_polypair(std::span<const BigInt> level_vector);

/// (r,s) -> (s, x r + (1+x) s).
PolyPair apply_b(const PolyPair& p);

/// (r,s) -> ((s - (1+x) r)/x, r); exact inverse of apply_b. Throws
/// NotDivisibleError when r(0) != s(0).
PolyPair apply_b_inverse(const PolyPair& p);

/// Iteration cap for canonical_form; exceeding it means a broken invariant,
/// not a valid input.
inline constexpr unsigned kCanonicalFormCap = 10000;

/// Smallest-degree representative of the class of p: apply the inverse of B
/// while r(0) == s(0). Result satisfies r(0) != s(0). Throws
/// std::domain_error for the zero pair and std::runtime_error at the cap.
PolyPair canonical_form(const PolyPair& p);

/// True iff p1 and p2 generate the same class (equal canonical forms); the
/// zero pair is equal only to itself.
bool class_equal(const PolyPair& p1, const PolyPair& p2);

/// Sum of classes: advance the lower pair with apply_b until both have the
/// same degree profile, then add componentwise.
PolyPair class_add(const PolyPair& p1, const PolyPair& p2);

/// P_0 = 1, P_1 = x+1, P_{n+1} = (x+1) P_n + x P_{n-1}. Coefficient of x^j
/// is D(j, n-j).
IntPoly delannoy_polynomial(std::uint32_t n);

/// Bounded search for a coefficientwise-nonnegative representative: reduce to
/// canonical form, then scan forward images of B. There is no known decision
/// procedure, so the negative answer is only Unknown.
enum class Positivity { Positive, Unknown };
Positivity positivity_scan(const PolyPair& p, unsigned max_steps = 64);

}  // namespace delannoy

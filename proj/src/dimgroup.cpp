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

#include "delannoy/dimgroup.hpp"

#include <algorithm>

namespace delannoy {

namespace {
const BigInt kZero = 0;
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(long c) {
  if (c == 0) return IntPoly();
  return IntPoly(std::vector<BigInt>{BigInt(c)});
}

const BigInt& IntPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::times_x() const {
  if (is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 1] = coeffs_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::times_one_plus_x() const {
  if (is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    c[i] += coeffs_[i];
    c[i + 1] += coeffs_[i];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::minus(const IntPoly& other) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - other.coeff(i);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::shift_down() const {
  if (is_zero()) return {};
  if (coeffs_[0] != 0) throw NotDivisibleError();
  return IntPoly(std::vector<BigInt>(coeffs_.begin() + 1, coeffs_.end()));
}

PolyPair unit_class() {
  return {IntPoly::constant(1), IntPoly(std::vector<BigInt>{1, 1})};
}

std::vector<std::vector<int>> adjacency_matrix(std::uint32_t level) {
  // Rows: the 2*level+3 vertices of level+1; columns: the 2*level+1 vertices
  // of the given level, both ordered from the (n,0) side. Regular vertex j
  // (even row 2j) receives from regular j-1 via V, center j-1 via D, regular
  // j via H; the new centers copy the regular vertex beneath them.
  const std::size_t cols = 2 * static_cast<std::size_t>(level) + 1;
  const std::size_t rows = cols + 2;
  std::vector<std::vector<int>> a(rows, std::vector<int>(cols, 0));
  for (std::size_t j = 0; j < rows; ++j) {
    if (j % 2 == 1) {
      a[j][j - 1] = 1;  // center above regular vertex (j-1)/2
      continue;
    }
    if (j > 0 && j - 2 < cols) a[j][j - 2] = 1;
    if (j > 0 && j - 1 < cols) a[j][j - 1] = 1;
    if (j < cols) a[j][j] = 1;
  }
  return a;
}

std::vector<BigInt> level_dimensions(std::uint32_t level) {
  std::vector<BigInt> v{1};
  for (std::uint32_t l = 0; l < level; ++l) {
    const auto a = adjacency_matrix(l);
    std::vector<BigInt> w(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (a[i][j]) w[i] += v[j];
    v = std::move(w);
  }
  return v;
}

PolyPair vector_to_polypair(std::span<const BigInt> level_vector) {
  if (level_vector.size() % 2 == 0)
    throw std::invalid_argument("level vectors have odd length 2k+1");
  std::vector<BigInt> s, r;
  for (std::size_t i = 0; i < level_vector.size(); ++i)
    (i % 2 == 0 ? s : r).push_back(level_vector[i]);
  return {IntPoly(std::move(r)), IntPoly(std::move(s))};
}

PolyPair apply_b(const PolyPair& p) {
  return {p.s, p.r.times_x() + p.s.times_one_plus_x()};
}

PolyPair apply_b_inverse(const PolyPair& p) {
  if (p.s.at_zero() != p.r.at_zero()) throw NotDivisibleError();
  return {p.s.minus(p.r.times_one_plus_x()).shift_down(), p.r};
}

PolyPair canonical_form(const PolyPair& p) {
  if (p.is_zero()) throw std::domain_error("the zero pair has no canonical form");
  PolyPair cur = p;
  for (unsigned i = 0; i < kCanonicalFormCap; ++i) {
    if (cur.r.at_zero() != cur.s.at_zero()) return cur;
    cur = apply_b_inverse(cur);
  }
  throw std::runtime_error("canonical_form did not terminate within the iteration cap");
}

bool class_equal(const PolyPair& p1, const PolyPair& p2) {
  if (p1.is_zero() || p2.is_zero()) return p1.is_zero() == p2.is_zero();
  return canonical_form(p1) == canonical_form(p2);
}

namespace {

std::pair<int, int> profile(const PolyPair& p) { return {p.r.degree(), p.s.degree()}; }

}  // namespace

PolyPair class_add(const PolyPair& p1, const PolyPair& p2) {
  if (p1.is_zero()) return p2;
  if (p2.is_zero()) return p1;
  PolyPair a = p1, b = p2;
  // After one step every nonzero pair has profile (m, m+1) with the degree
  // growing by one per step, so pushing the lower pair forward aligns them.
  for (unsigned i = 0; i < kCanonicalFormCap; ++i) {
    if (profile(a) == profile(b)) return {a.r + b.r, a.s + b.s};
    const int da = std::max(a.r.degree(), a.s.degree());
    const int db = std::max(b.r.degree(), b.s.degree());
    if (da < db)
      a = apply_b(a);
    else if (db < da)
      b = apply_b(b);
    else {
      a = apply_b(a);
      b = apply_b(b);
    }
  }
  throw std::runtime_error("class_add could not align degree profiles");
}

IntPoly delannoy_polynomial(std::uint32_t n) {
  IntPoly prev = IntPoly::constant(1);
  if (n == 0) return prev;
  IntPoly cur(std::vector<BigInt>{1, 1});
  for (std::uint32_t i = 1; i < n; ++i) {
    IntPoly next = cur.times_one_plus_x() + prev.times_x();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Positivity positivity_scan(const PolyPair& p, unsigned max_steps) {
  if (p.is_zero()) return Positivity::Positive;
  const auto nonneg = [](const PolyPair& q) {
    for (const auto& c : q.r.coeffs())
      if (c < 0) return false;
    for (const auto& c : q.s.coeffs())
      if (c < 0) return false;
    return true;
  };
  // Scanning forward from the canonical representative covers every earlier
  // stage of the class as well.
  PolyPair cur = canonical_form(p);
  for (unsigned i = 0; i <= max_steps; ++i) {
    if (nonneg(cur)) return Positivity::Positive;
    cur = apply_b(cur);
  }
  return Positivity::Unknown;
}

}  // namespace delannoy

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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "delannoy/numbers.hpp"

namespace delannoy {

/// One step of a lattice path. The enum value is the rank of the
/// corresponding incoming edge at an interior vertex: the edge arriving
/// from below (V) is smallest, the diagonal (D) is in the middle, the edge
/// arriving from the left (H) is largest.
enum class Move : unsigned char { V = 0, D = 1, H = 2 };

char to_char(Move m);             // 'v', 'd', 'h'
Move move_from_char(char c);      // throws std::invalid_argument

/// A vertex of the Delannoy graph in Bratteli form. Regular vertices are
/// lattice points; a Center with base (n,k) is the extra vertex splitting
/// the diagonal edge (n,k) -> (n+1,k+1) into two levels.
struct Vertex {
  enum class Kind : unsigned char { Regular, Center };
  Kind kind = Kind::Regular;
  std::uint32_t n = 0;
  std::uint32_t k = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline Vertex regular(std::uint32_t n, std::uint32_t k) { return {Vertex::Kind::Regular, n, k}; }

/// Thrown when two paths with different terminal vertices are compared.
class PathMismatchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A finite path from the root, stored as its move word over {h,d,v}.
class FinitePath {
 public:
  FinitePath() = default;
  explicit FinitePath(std::vector<Move> moves) : moves_(std::move(moves)) {}

  /// Parses a lowercase {h,d,v} word; throws std::invalid_argument on any
  /// other character.
  static FinitePath from_string(std::string_view word);
  std::string to_string() const;

  const std::vector<Move>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool empty() const { return moves_.empty(); }

  Vertex terminal() const;
  /// Vertices v_0 = (0,0), v_1, ..., v_size visited after each move
  /// (regular lattice points only; centers are implicit).
  std::vector<Vertex> vertices() const;

  std::uint32_t count(Move m) const;

  friend bool operator==(const FinitePath&, const FinitePath&) = default;

 private:
  std::vector<Move> moves_;
};

/// Number of diagram paths from u to v: D(v.n-u.n, v.k-u.k) when v dominates
/// u componentwise, else 0. Regular vertices only (throws
/// std::invalid_argument for centers).
BigInt dim_between(const Vertex& u, const Vertex& v);

/// The all-minimal-edges path to (n,k): h^n v^k.
FinitePath min_path(std::uint32_t n, std::uint32_t k);
/// The all-maximal-edges path to (n,k): v^k h^n.
FinitePath max_path(std::uint32_t n, std::uint32_t k);

/// Tail order on paths with a common terminal vertex: compare the incoming
/// edges at the last Bratteli level where the two paths differ (rank
/// V < D < H at the regular target; center levels never decide because a
/// center has a unique incoming edge). Throws PathMismatchError when the
/// terminal vertices differ.
std::strong_ordering compare_paths(const FinitePath& x, const FinitePath& y);

}  // namespace delannoy

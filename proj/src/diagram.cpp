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

#include "delannoy/diagram.hpp"

#include <algorithm>

namespace delannoy {

char to_char(Move m) {
  switch (m) {
    case Move::H: return 'h';
    case Move::V: return 'v';
    case Move::D: return 'd';
  }
  return '?';
}

Move move_from_char(char c) {
  switch (c) {
    case 'h': return Move::H;
    case 'v': return Move::V;
    case 'd': return Move::D;
    default: throw std::invalid_argument(std::string("invalid move character '") + c + "'");
  }
}

FinitePath FinitePath::from_string(std::string_view word) {
  std::vector<Move> ms;
  ms.reserve(word.size());
  for (char c : word) ms.push_back(move_from_char(c));
  return FinitePath(std::move(ms));
}

std::string FinitePath::to_string() const {
  std::string s;
  s.reserve(moves_.size());
  for (Move m : moves_) s.push_back(to_char(m));
  return s;
}

Vertex FinitePath::terminal() const {
  std::uint32_t n = 0, k = 0;
  for (Move m : moves_) {
    if (m != Move::V) ++n;
    if (m != Move::H) ++k;
  }
  return regular(n, k);
}

std::vector<Vertex> FinitePath::vertices() const {
  std::vector<Vertex> vs;
  vs.reserve(moves_.size() + 1);
  std::uint32_t n = 0, k = 0;
  vs.push_back(regular(0, 0));
  for (Move m : moves_) {
    if (m != Move::V) ++n;
    if (m != Move::H) ++k;
    vs.push_back(regular(n, k));
  }
  return vs;
}

std::uint32_t FinitePath::count(Move m) const {
  return static_cast<std::uint32_t>(std::count(moves_.begin(), moves_.end(), m));
}

BigInt dim_between(const Vertex& u, const Vertex& v) {
  if (u.kind != Vertex::Kind::Regular || v.kind != Vertex::Kind::Regular)
    throw std::invalid_argument("dim_between is defined on regular vertices");
  if (v.n < u.n || v.k < u.k) return 0;
  return delannoy_number(v.n - u.n, v.k - u.k);
}

FinitePath min_path(std::uint32_t n, std::uint32_t k) {
  std::vector<Move> ms;
  ms.reserve(n + k);
  ms.insert(ms.end(), n, Move::H);
  ms.insert(ms.end(), k, Move::V);
  return FinitePath(std::move(ms));
}

FinitePath max_path(std::uint32_t n, std::uint32_t k) {
  std::vector<Move> ms;
  ms.reserve(n + k);
  ms.insert(ms.end(), k, Move::V);
  ms.insert(ms.end(), n, Move::H);
  return FinitePath(std::move(ms));
}

namespace {

// One Bratteli edge of the expanded path: the vertex it enters and the rank
// of the move that produced it. A D move expands to two edges (center, then
// regular target).
struct Edge {
  Vertex target;
  Move rank;
  friend bool operator==(const Edge&, const Edge&) = default;
};

std::vector<Edge> expand(const FinitePath& p) {
  std::vector<Edge> es;
  es.reserve(p.size() * 2);
  std::uint32_t n = 0, k = 0;
  for (Move m : p.moves()) {
    switch (m) {
      case Move::H:
        ++n;
        es.push_back({regular(n, k), Move::H});
        break;
      case Move::V:
        ++k;
        es.push_back({regular(n, k), Move::V});
        break;
      case Move::D:
        es.push_back({{Vertex::Kind::Center, n, k}, Move::D});
        ++n;
        ++k;
        es.push_back({regular(n, k), Move::D});
        break;
    }
  }
  return es;
}

}  // namespace

std::strong_ordering compare_paths(const FinitePath& x, const FinitePath& y) {
  if (x.terminal() != y.terminal())
    throw PathMismatchError("compare_paths requires a common terminal vertex");
  const auto ex = expand(x);
  const auto ey = expand(y);
  // Same terminal vertex => same Bratteli span #H + #V + 2#D = n + k.
  for (std::size_t i = ex.size(); i-- > 0;) {
    if (ex[i] == ey[i]) continue;
    // Edges above level i agree, so both edges enter the same vertex; a
    // center has a unique incoming edge, so the deciding target is regular
    // and the move ranks differ.
    return ex[i].rank <=> ey[i].rank;
  }
  return std::strong_ordering::equal;
}

}  // namespace delannoy

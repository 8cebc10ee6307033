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

// Test-only brute-force oracles: explicit depth-first enumeration of monotone
// {h,v,d} lattice paths. Deliberately independent of the library's recurrence
// and successor machinery.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

inline void enumerate_paths_rec(std::uint32_t a, std::uint32_t b, std::uint32_t n,
                                std::uint32_t k, std::string& word,
                                std::vector<std::string>& out) {
  if (a == n && b == k) {
    out.push_back(word);
    return;
  }
  if (a < n) {
    word.push_back('h');
    enumerate_paths_rec(a + 1, b, n, k, word, out);
    word.pop_back();
  }
  if (b < k) {
    word.push_back('v');
    enumerate_paths_rec(a, b + 1, n, k, word, out);
    word.pop_back();
  }
  if (a < n && b < k) {
    word.push_back('d');
    enumerate_paths_rec(a + 1, b + 1, n, k, word, out);
    word.pop_back();
  }
}

/// Every monotone path word from (0,0) to (n,k), in DFS order.
inline std::vector<std::string> enumerate_paths(std::uint32_t n, std::uint32_t k) {
  std::vector<std::string> out;
  std::string word;
  enumerate_paths_rec(0, 0, n, k, word, out);
  return out;
}

/// Path count by explicit stack walk (no memoization, no recurrence).
inline std::uint64_t count_paths(std::uint32_t n, std::uint32_t k) {
  std::uint64_t count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (a == n && b == k) {
      ++count;
      continue;
    }
    if (a < n) stack.push_back({a + 1, b});
    if (b < k) stack.push_back({a, b + 1});
    if (a < n && b < k) stack.push_back({a + 1, b + 1});
  }
  return count;
}

}  // namespace oracle

// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MFORGE_BITS_HPP_
#define MFORGE_BITS_HPP_

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace mforge {

// A subset of a ground set of at most 64 elements, bit i <-> element i.
using Set = std::uint64_t;

constexpr int kMaxGround = 64;

inline constexpr Set bit(int i) { return Set{1} << i; }
inline constexpr Set full_set(int n) { return n >= 64 ? ~Set{0} : bit(n) - 1; }
inline constexpr int set_size(Set s) { return std::popcount(s); }
inline constexpr int lowest(Set s) { return std::countr_zero(s); }
inline constexpr bool contains(Set s, int i) { return (s >> i) & 1; }
inline constexpr bool is_subset(Set a, Set b) { return (a & ~b) == 0; }

template <class F>
void for_each_element(Set s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

inline std::vector<int> elements_of(Set s) {
  std::vector<int> out;
  for_each_element(s, [&](int i) { out.push_back(i); });
  return out;
}

// Lexicographic order on the ascending element lists of two sets; a proper
// prefix sorts first.
inline bool lex_less(Set a, Set b) {
  while (a != 0 && b != 0) {
    const int la = lowest(a), lb = lowest(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Visits every subset of `universe`, starting from the empty set.
template <class F>
void for_each_subset(Set universe, F&& f) {
  Set s = 0;
  while (true) {
    f(s);
    if (s == universe) break;
    s = (s - universe) & universe;
  }
}

// Size of the largest ground set enumerated exhaustively by brute-force
// routines. Defaults to 22; the MFORGE_BOUND environment variable overrides.
inline int brute_force_bound() {
  if (const char* env = std::getenv("MFORGE_BOUND")) {
    const int v = std::atoi(env);
    if (v > 0) return v < kMaxGround ? v : kMaxGround;
  }
  return 22;
}

}  // namespace mforge

#endif  // MFORGE_BITS_HPP_

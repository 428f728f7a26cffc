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

#ifndef MFORGE_CONNECTIVITY_HPP_
#define MFORGE_CONNECTIVITY_HPP_

#include <optional>

#include "mforge/matroid.hpp"

namespace mforge {

// lambda_M(X) = r(X) + r(E - X) - r(M).
int lambda(const Matroid& m, Set x);

// r(S) + r(T) - r(S u T). Overlapping S and T are allowed; the formula is
// applied as is, so S = T gives r(S).
int local_conn(const Matroid& m, Set s, Set t);

// min { lambda(A) : S <= A <= E - T }, by exhaustive search over A. S and T
// must be disjoint; |E| is limited by brute_force_bound().
int kappa(const Matroid& m, Set s, Set t);

struct Linking {
  Set z = 0;
  int value = 0;
};

// max { local_conn in M/Z of (S, T) : Z <= E - (S u T) } together with the
// first maximizing Z in (size, lexicographic) order, which is minimal.
Linking linking_set(const Matroid& m, Set s, Set t);

struct Separation {
  Set side = 0;
  int order = 0;
};

struct ThreeConnectivity {
  bool three_connected = true;
  std::optional<Separation> violation;
};

// Connected, no 2-separation, and no circuit or cocircuit with fewer than
// three elements. The last clause only matters below four elements. Reports
// the lexicographically least violating set.
ThreeConnectivity is_3connected(const Matroid& m);

}  // namespace mforge

#endif  // MFORGE_CONNECTIVITY_HPP_

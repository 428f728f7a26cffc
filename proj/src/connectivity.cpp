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

#include "mforge/connectivity.hpp"

#include <string>

#include "mforge/error.hpp"

namespace mforge {

namespace {

void check_bound(const Matroid& m) {
  if (m.size() > brute_force_bound()) {
    throw BoundExceeded("brute-force connectivity limited to " + std::to_string(brute_force_bound()) +
                        " elements (set MFORGE_BOUND to raise)");
  }
}

void check_disjoint(Set s, Set t) {
  if ((s & t) != 0) throw PreconditionError("S and T must be disjoint");
}

}  // namespace

int lambda(const Matroid& m, Set x) { return m.rank(x) + m.rank(m.all() & ~x) - m.rank(); }

int local_conn(const Matroid& m, Set s, Set t) { return m.rank(s) + m.rank(t) - m.rank(s | t); }

int kappa(const Matroid& m, Set s, Set t) {
  check_disjoint(s, t);
  check_bound(m);
  const Set free = m.all() & ~(s | t);
  int best = m.rank() + 1;
  for_each_subset(free, [&](Set a) { best = std::min(best, lambda(m, s | a)); });
  return best;
}

Linking linking_set(const Matroid& m, Set s, Set t) {
  check_disjoint(s, t);
  check_bound(m);
  const Set free = m.all() & ~(s | t);
  Linking best{0, -1};
  for_each_subset(free, [&](Set z) {
    const int rz = m.rank(z);
    const int v = m.rank(s | z) + m.rank(t | z) - m.rank(s | t | z) - rz;
    if (v > best.value || (v == best.value && (set_size(z) < set_size(best.z) ||
                                              (set_size(z) == set_size(best.z) && lex_less(z, best.z))))) {
      best = {z, v};
    }
  });
  return best;
}

ThreeConnectivity is_3connected(const Matroid& m) {
  check_bound(m);
  const int n = m.size();
  if (n == 0) return {};
  std::optional<Separation> found;
  // The lexicographically least violator contains element 0: complements
  // violate together and the side holding 0 sorts first.
  for_each_subset(m.all() & ~bit(0), [&](Set rest) {
    const Set x = rest | bit(0);
    const int sx = set_size(x), sy = n - sx;
    if (sy == 0) return;
    const int l = lambda(m, x);
    const bool bad = l == 0 || (l <= 1 && sx >= 2 && sy >= 2);
    if (bad && (!found || lex_less(x, found->side))) found = Separation{x, l};
  });
  if (found) return {false, found};
  // Small circuits and cocircuits.
  for (int e = 0; e < n; ++e) {
    for (int f = e; f < n; ++f) {
      const Set x = bit(e) | bit(f);
      const bool circuit = m.rank(x) < set_size(x) && (e == f || (m.rank(bit(e)) == 1 && m.rank(bit(f)) == 1));
      const bool cocircuit = m.rank(m.all() & ~x) < m.rank() &&
                             (e == f || (m.rank(m.all() & ~bit(e)) == m.rank() &&
                                         m.rank(m.all() & ~bit(f)) == m.rank()));
      if (circuit || cocircuit) return {false, Separation{x, lambda(m, x)}};
    }
  }
  return {};
}

}  // namespace mforge

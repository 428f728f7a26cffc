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

#ifndef MFORGE_SUBFIELD_HPP_
#define MFORGE_SUBFIELD_HPP_

#include <utility>
#include <vector>

#include "mforge/matroid.hpp"

namespace mforge {

// Outcome of deciding whether rows and columns of a matrix can be scaled so
// that every entry lies in GF(q).
struct ScalingCertificate {
  bool scaled = false;
  // Positive outcome: the scalings.
  std::vector<Element> row_scales;
  std::vector<Element> col_scales;
  // Negative outcome: a closed walk of nonzero positions (row, col); each
  // consecutive pair shares a row or a column, and the first position is the
  // entry that closes the cycle. The alternating product
  // A[e0] / A[e1] * A[e2] / ... is invariant under scaling and lies outside
  // GF(q).
  std::vector<std::pair<int, int>> cycle;
  Element cycle_product;
};

// Sound and complete decision by propagating scale classes in the quotient
// group F^x / GF(q)^x along a spanning forest of the nonzero-entry graph.
// Vertices are ordered rows first, then columns; the least vertex of each
// component gets scale 1. Throws when F has no subfield of order q.
ScalingCertificate scaled_subfield_check(const Matrix& a, long long q);

// Re-checks a certificate without searching.
bool verify_scaling_certificate(const Matrix& a, long long q, const ScalingCertificate& cert);

// True iff every entry of the matrix lies in GF(q).
bool entries_in_subfield(const Matrix& a, long long q);

// For A representing PG(n-1, q) with n >= 3: standard form with respect to the
// greedy first basis, then the scaled-subfield decision.
bool pg_subfield_verify(const Matrix& a, int n, long long q);

// Checks the confinement condition for one representation and one embedding:
// A is in standard form with respect to its row labels B u C, the embedded
// minor is M / C \ D with representation A[B, E - (C u D)] over GF(q). Returns
// whether A is a scaled GF(q)-matrix. When `target` is given the embedded minor
// must be isomorphic to it.
bool confinement_check(const Matrix& a, const MinorSpec& embedding, long long q,
                       const Matroid* target = nullptr);

}  // namespace mforge

#endif  // MFORGE_SUBFIELD_HPP_

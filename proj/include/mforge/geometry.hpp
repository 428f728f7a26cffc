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

#ifndef MFORGE_GEOMETRY_HPP_
#define MFORGE_GEOMETRY_HPP_

#include <memory>
#include <string>
#include <vector>

#include "mforge/matroid.hpp"

namespace mforge {

enum class GeometryKind { kProjective, kAffine };

struct GeometryId {
  GeometryKind kind = GeometryKind::kProjective;
  int rank = 0;
  long long order = 0;
};

std::string to_string(const GeometryId& id);

// Label of a coordinate vector: the element codes concatenated, dot-separated
// when the field has more than ten elements.
std::string point_label(const std::vector<Element>& coords, std::uint32_t field_order);

// The normalized points of PG(n-1, q): every nonzero length-n vector whose
// first nonzero coordinate is 1, in lexicographic order.
std::vector<std::vector<Element>> projective_points(const FieldSpec& field, int n);

// PG(n-1, q) as the column matroid of its normalized points.
std::shared_ptr<const LinearMatroid> pg(int n, long long q);

// AG(n-1, q): PG(n-1, q) minus the hyperplane {first coordinate = 0}.
std::shared_ptr<const LinearMatroid> ag(int n, long long q);

// Matches M against the canonical instance after point and line count
// prefilters.
Isomorphism verify_geometry(const Matroid& m, const GeometryId& id);

// (q^k - 1) / (q - 1)
long long projective_point_count(long long q, int k);

}  // namespace mforge

#endif  // MFORGE_GEOMETRY_HPP_

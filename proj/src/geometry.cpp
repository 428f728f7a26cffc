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

#include "mforge/geometry.hpp"

#include "mforge/error.hpp"

namespace mforge {

std::string to_string(const GeometryId& id) {
  return std::string(id.kind == GeometryKind::kProjective ? "PG(" : "AG(") + std::to_string(id.rank - 1) + "," +
         std::to_string(id.order) + ")";
}

std::string point_label(const std::vector<Element>& coords, std::uint32_t field_order) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (field_order > 10 && i > 0) out += '.';
    out += std::to_string(coords[i].code);
  }
  return out;
}

std::vector<std::vector<Element>> projective_points(const FieldSpec& field, int n) {
  if (n < 1) throw PreconditionError("geometry rank must be at least 1");
  std::vector<std::vector<Element>> out;
  const std::uint32_t q = field.order();
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    int lead = 0;
    while (lead < n && digits[lead] == 0) ++lead;
    if (lead < n && digits[lead] == 1) {
      std::vector<Element> v;
      for (auto d : digits) v.push_back(Element{d});
      out.push_back(std::move(v));
    }
    int i = n - 1;
    while (i >= 0 && digits[i] == q - 1) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  return out;
}

namespace {

std::shared_ptr<const LinearMatroid> from_points(const FieldSpec& f, int n,
                                                 const std::vector<std::vector<Element>>& pts) {
  Labels cols;
  for (const auto& p : pts) cols.push_back(point_label(p, f.order()));
  Matrix a(f, Matrix::default_row_labels(n), cols);
  for (std::size_t c = 0; c < pts.size(); ++c) {
    for (int r = 0; r < n; ++r) a(r, static_cast<int>(c)) = pts[c][r];
  }
  return std::make_shared<LinearMatroid>(std::move(a));
}

}  // namespace

std::shared_ptr<const LinearMatroid> pg(int n, long long q) {
  const FieldSpec f = FieldSpec::of_order(q);
  const auto pts = projective_points(f, n);
  if (pts.size() > static_cast<std::size_t>(kMaxGround)) throw BoundExceeded("geometry exceeds 64 points");
  return from_points(f, n, pts);
}

std::shared_ptr<const LinearMatroid> ag(int n, long long q) {
  if (n < 2) throw PreconditionError("affine geometry needs rank at least 2");
  const FieldSpec f = FieldSpec::of_order(q);
  std::vector<std::vector<Element>> pts;
  for (auto& p : projective_points(f, n)) {
    if (!p[0].is_zero()) pts.push_back(std::move(p));
  }
  if (pts.size() > static_cast<std::size_t>(kMaxGround)) throw BoundExceeded("geometry exceeds 64 points");
  return from_points(f, n, pts);
}

long long projective_point_count(long long q, int k) {
  long long total = 0, power = 1;
  for (int i = 0; i < k; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

Isomorphism verify_geometry(const Matroid& m, const GeometryId& id) {
  const auto canonical = id.kind == GeometryKind::kProjective ? pg(id.rank, id.order) : ag(id.rank, id.order);
  if (m.size() != canonical->size() || m.rank() != canonical->rank()) return {};
  if (m.size() > kMaxGround) throw BoundExceeded("isomorphism test limited to 64 elements");
  if (m.rank() >= 2 && flats(m, 1).size() != flats(*canonical, 1).size()) return {};
  if (m.rank() >= 3 && flats(m, 2).size() != flats(*canonical, 2).size()) return {};
  return is_isomorphic(m, *canonical);
}

}  // namespace mforge

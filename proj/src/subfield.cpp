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

#include "mforge/subfield.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "mforge/error.hpp"
#include "mforge/geometry.hpp"

namespace mforge {

namespace {

// Index of F^x / GF(q)^x, checking that the subfield exists.
std::uint32_t quotient_order(const FieldSpec& f, long long q) {
  const auto pk = prime_power(q);
  if (!pk || pk->first != f.characteristic() || f.degree() % pk->second != 0) {
    throw PreconditionError("GF(" + std::to_string(f.order()) + ") has no subfield of order " + std::to_string(q));
  }
  return (f.order() - 1) / static_cast<std::uint32_t>(q - 1);
}

}  // namespace

bool entries_in_subfield(const Matrix& a, long long q) {
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (!in_subfield_of_order(a.field(), q, a(r, c))) return false;
    }
  }
  return true;
}

ScalingCertificate scaled_subfield_check(const Matrix& a, long long q) {
  const FieldSpec& f = a.field();
  const std::uint32_t mod = quotient_order(f, q);
  const int m = a.rows(), n = a.cols(), total = m + n;
  auto entry = [&](int u, int v) { return u < m ? a(u, v - m) : a(v, u - m); };

  std::vector<int> cls(total, -1), parent(total, -1), depth(total, 0);
  ScalingCertificate cert;
  for (int root = 0; root < total; ++root) {
    if (cls[root] >= 0) continue;
    cls[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      const int lo = u < m ? m : 0, hi = u < m ? total : m;
      for (int v = lo; v < hi; ++v) {
        const Element e = entry(u, v);
        if (e.is_zero()) continue;
        const std::uint32_t need = (2 * mod - (cls[u] + f.log(e) % mod) % mod) % mod;
        if (cls[v] < 0) {
          cls[v] = static_cast<int>(need);
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (static_cast<std::uint32_t>(cls[v]) != need) {
          // Close the cycle u - v through the forest.
          std::vector<int> up_u{u}, up_v{v};
          int x = u, y = v;
          while (depth[x] > depth[y]) up_u.push_back(x = parent[x]);
          while (depth[y] > depth[x]) up_v.push_back(y = parent[y]);
          while (x != y) {
            up_u.push_back(x = parent[x]);
            up_v.push_back(y = parent[y]);
          }
          // Walk u -> v -> ... -> lca -> ... -> u, starting at the closing entry.
          std::vector<int> walk{u};
          walk.insert(walk.end(), up_v.begin(), up_v.end());
          for (auto it = up_u.rbegin() + 1; it + 1 != up_u.rend(); ++it) walk.push_back(*it);
          Element prod = f.one();
          for (std::size_t t = 0; t < walk.size(); ++t) {
            const int s = walk[t], d = walk[(t + 1) % walk.size()];
            const int row = s < m ? s : d, col = (s < m ? d : s) - m;
            cert.cycle.emplace_back(row, col);
            prod = t % 2 == 0 ? f.mul(prod, a(row, col)) : f.div(prod, a(row, col));
          }
          cert.cycle_product = prod;
          return cert;
        }
      }
    }
  }
  cert.scaled = true;
  for (int u = 0; u < total; ++u) {
    const Element s = f.pow(f.primitive(), static_cast<std::uint64_t>(cls[u]));
    (u < m ? cert.row_scales : cert.col_scales).push_back(s);
  }
  return cert;
}

bool verify_scaling_certificate(const Matrix& a, long long q, const ScalingCertificate& cert) {
  const FieldSpec& f = a.field();
  if (cert.scaled) {
    if (static_cast<int>(cert.row_scales.size()) != a.rows() || static_cast<int>(cert.col_scales.size()) != a.cols()) {
      return false;
    }
    for (Element s : cert.row_scales) {
      if (s.is_zero() || !f.contains(s)) return false;
    }
    for (Element s : cert.col_scales) {
      if (s.is_zero() || !f.contains(s)) return false;
    }
    for (int r = 0; r < a.rows(); ++r) {
      for (int c = 0; c < a.cols(); ++c) {
        const Element v = f.mul(f.mul(cert.row_scales[r], a(r, c)), cert.col_scales[c]);
        if (!in_subfield_of_order(f, q, v)) return false;
      }
    }
    return true;
  }
  const auto& cyc = cert.cycle;
  if (cyc.size() < 4 || cyc.size() % 2 != 0) return false;
  Element prod = f.one();
  for (std::size_t t = 0; t < cyc.size(); ++t) {
    const auto [r, c] = cyc[t];
    if (r < 0 || r >= a.rows() || c < 0 || c >= a.cols() || a(r, c).is_zero()) return false;
    const auto [r2, c2] = cyc[(t + 1) % cyc.size()];
    // Consecutive positions alternate between sharing a column and a row.
    const bool share_col = c == c2 && r != r2, share_row = r == r2 && c != c2;
    if (!(share_col || share_row)) return false;
    if (t + 1 < cyc.size()) {
      const auto [r3, c3] = cyc[(t + 2) % cyc.size()];
      if ((share_col && !(r2 == r3)) || (share_row && !(c2 == c3))) return false;
    }
    prod = t % 2 == 0 ? f.mul(prod, a(r, c)) : f.div(prod, a(r, c));
  }
  return prod == cert.cycle_product && !in_subfield_of_order(f, q, prod);
}

bool pg_subfield_verify(const Matrix& a, int n, long long q) {
  if (n < 3) throw PreconditionError("the subfield property needs rank at least 3");
  LinearMatroid m(a);
  if (!verify_geometry(m, {GeometryKind::kProjective, n, q}).isomorphic) {
    throw PreconditionError("matrix does not represent PG(" + std::to_string(n - 1) + "," + std::to_string(q) + ")");
  }
  const Set basis = extend_to_basis(m, 0);
  const Matrix s = standard_form(a, m.labels_of(basis));
  return scaled_subfield_check(s, q).scaled;
}

bool confinement_check(const Matrix& a, const MinorSpec& embedding, long long q, const Matroid* target) {
  std::set<std::string> rows(a.row_labels().begin(), a.row_labels().end());
  Labels basis;
  for (const auto& r : a.row_labels()) {
    if (std::find(embedding.contract.begin(), embedding.contract.end(), r) == embedding.contract.end()) {
      basis.push_back(r);
    }
  }
  for (const auto& c : embedding.contract) {
    if (!rows.count(c)) throw PreconditionError("contracted element '" + c + "' is not a row of the standard form");
  }
  const Matrix induced = induce_representation(a, embedding.contract, embedding.remove, basis);
  if (!entries_in_subfield(induced, q)) {
    throw PreconditionError("induced representation is not over GF(" + std::to_string(q) + ")");
  }
  if (target != nullptr && !is_isomorphic(LinearMatroid(induced), *target).isomorphic) {
    throw PreconditionError("embedded minor is not isomorphic to the target");
  }
  return scaled_subfield_check(a, q).scaled;
}

}  // namespace mforge

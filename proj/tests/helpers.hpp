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

#ifndef MFORGE_TESTS_HELPERS_HPP_
#define MFORGE_TESTS_HELPERS_HPP_

#include <random>
#include <string>

#include "mforge/field.hpp"
#include "mforge/matrix.hpp"
#include "mforge/matroid.hpp"
#include "oracles.hpp"

namespace testing {

inline mforge::Element random_element(const mforge::FieldSpec& f, std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<std::uint32_t> pick(nonzero ? 1 : 0, f.order() - 1);
  return mforge::Element{pick(rng)};
}

inline mforge::Matrix random_matrix(const mforge::FieldSpec& f, int rows, int cols, std::mt19937_64& rng) {
  mforge::Labels labels;
  for (int c = 0; c < cols; ++c) labels.push_back("e" + std::string(c < 10 ? "0" : "") + std::to_string(c));
  mforge::Matrix a(f, mforge::Matrix::default_row_labels(rows), labels);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a(r, c) = random_element(f, rng);
  }
  return a;
}

// Rejection-sampled invertible n x n matrix, checked by the oracle rank.
inline mforge::Matrix random_invertible(const mforge::FieldSpec& f, int n, std::mt19937_64& rng) {
  while (true) {
    mforge::Matrix t = random_matrix(f, n, n, rng);
    if (oracle::column_rank(t, (mforge::Set{1} << n) - 1) == n) return t;
  }
}

inline std::vector<mforge::Element> random_scales(const mforge::FieldSpec& f, int n, std::mt19937_64& rng) {
  std::vector<mforge::Element> out;
  for (int i = 0; i < n; ++i) out.push_back(random_element(f, rng, true));
  return out;
}

// A copy of `a` with entries read in a larger field via the embedding.
inline mforge::Matrix lift(const mforge::Matrix& a, const mforge::FieldSpec& big) {
  const mforge::SubfieldEmbedding emb(a.field(), big);
  mforge::Matrix out(big, a.row_labels(), a.col_labels());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = emb(a(r, c));
  }
  return out;
}

// m and the column matroid of a agree on every subset (matched by label).
inline bool matches_matrix(const mforge::Matroid& m, const mforge::Matrix& a) {
  if (m.size() != a.cols()) return false;
  std::vector<int> col(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) col[static_cast<std::size_t>(i)] = a.col_index(m.ground()[static_cast<std::size_t>(i)]);
  for (mforge::Set s = 0; s <= m.all(); ++s) {
    mforge::Set cols = 0;
    for (int i = 0; i < m.size(); ++i) {
      if ((s >> i) & 1) cols |= mforge::Set{1} << col[static_cast<std::size_t>(i)];
    }
    if (m.rank(s) != oracle::column_rank(a, cols)) return false;
  }
  return true;
}

// PG(2,2) in standard form over GF(4) with an extra row x and column x. The
// row x is (1 at 011, w at 101); with `triad` a column y parallel to 011 on
// the other rows carries w in row x instead.
inline mforge::Matrix lifted_fano(bool triad) {
  using mforge::Element;
  const mforge::FieldSpec gf4 = mforge::FieldSpec::make(2, 2);
  const mforge::Labels pts = {"001", "010", "011", "100", "101", "110", "111"};
  mforge::Labels cols = pts;
  cols.push_back("x");
  if (triad) cols.push_back("y");
  mforge::Matrix a(gf4, {"100", "010", "001", "x"}, cols);
  for (std::size_t c = 0; c < pts.size(); ++c) {
    for (int r = 0; r < 3; ++r) a(r, static_cast<int>(c)) = Element{static_cast<std::uint32_t>(pts[c][static_cast<std::size_t>(r)] - '0')};
  }
  a(3, a.col_index("x")) = Element{1};
  a(3, a.col_index("011")) = Element{1};
  if (triad) {
    for (int r = 0; r < 3; ++r) a(r, a.col_index("y")) = a(r, a.col_index("011"));
    a(3, a.col_index("y")) = Element{2};
  } else {
    a(3, a.col_index("101")) = Element{2};
  }
  return a;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(MFORGE_SOURCE_DIR) + "/tests/fixtures/" + name;
}

inline oracle::RankFn rank_fn(const mforge::Matroid& m) {
  return [&m](mforge::Set s) { return m.rank(s); };
}

}  // namespace testing

#endif  // MFORGE_TESTS_HELPERS_HPP_

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

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mforge/error.hpp"
#include "mforge/geometry.hpp"
#include "mforge/matrix.hpp"
#include "mforge/matroid.hpp"

using namespace mforge;

namespace {

Matrix identity(const FieldSpec& f, int n) {
  Labels cols;
  for (int i = 0; i < n; ++i) cols.push_back("c" + std::to_string(i));
  Matrix a(f, Matrix::default_row_labels(n), cols);
  for (int i = 0; i < n; ++i) a(i, i) = f.one();
  return a;
}

Matrix fano() { return pg(3, 2)->matrix(); }

}  // namespace

TEST_CASE("rref_rank") {
  const FieldSpec gf3 = FieldSpec::make(3, 1);
  const Matrix id = identity(gf3, 3);
  const RrefResult r = rref_rank(id);
  CHECK(r.rank == 3);
  CHECK(r.rref == id);

  const Matrix zero(gf3, Matrix::default_row_labels(2), {"a", "b", "c"});
  CHECK(rref_rank(zero).rank == 0);
  CHECK(rref_rank(zero).rref == zero);

  CHECK(rref_rank(fano()).rank == 3);
}

TEST_CASE("rref is a fixed point and its rank matches the oracle") {
  std::mt19937_64 rng(11);
  for (long long q : {2, 3, 4, 5, 9}) {
    const FieldSpec f = FieldSpec::of_order(q);
    for (int i = 0; i < 40; ++i) {
      const int rows = 1 + static_cast<int>(rng() % 4);
      const int cols = 1 + static_cast<int>(rng() % 6);
      const Matrix a = testing::random_matrix(f, rows, cols, rng);
      const RrefResult r = rref_rank(a);
      CHECK(r.rank == oracle::column_rank(a, full_set(cols)));
      CHECK(rref_rank(r.rref).rref == r.rref);
      // Row space preserved: stacking does not raise the rank.
      std::vector<std::vector<std::uint32_t>> stacked;
      for (const Matrix* m : {&a, &r.rref}) {
        for (int row = 0; row < m->rows(); ++row) {
          std::vector<std::uint32_t> v;
          for (int c = 0; c < cols; ++c) v.push_back((*m)(row, c).code);
          stacked.push_back(v);
        }
      }
      CHECK(oracle::rank(oracle::field_of(a), stacked) == r.rank);
    }
  }
}

TEST_CASE("standard_form") {
  const Matrix a = fano();
  const Labels basis = {"001", "010", "100"};
  const Matrix s = standard_form(a, basis);
  CHECK(s.row_labels() == basis);
  CHECK(is_standard_form(s));
  CHECK(s.col_labels() == a.col_labels());
  for (const auto& b : basis) {
    for (const auto& r : basis) CHECK(s.at(r, b) == (r == b ? Element{1} : Element{0}));
  }
  CHECK(testing::matches_matrix(LinearMatroid(a), s));
  CHECK(standard_form(s, basis) == s);

  // Parallel basis columns.
  Matrix dup = Matrix::from_rows(FieldSpec::make(2, 1), {"a", "b", "c"}, {{Element{1}, Element{1}, Element{0}},
                                                                           {Element{0}, Element{0}, Element{1}}});
  CHECK_THROWS_AS(standard_form(dup, Labels{"a", "b"}), PreconditionError);
  try {
    standard_form(dup, Labels{"a", "b"});
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("'b'") != std::string::npos);
  }
}

TEST_CASE("standard_form on random bases preserves the matroid") {
  std::mt19937_64 rng(5);
  for (long long q : {3, 4, 7}) {
    const FieldSpec f = FieldSpec::of_order(q);
    for (int i = 0; i < 15; ++i) {
      const Matrix a = testing::random_matrix(f, 3, 7, rng);
      const LinearMatroid m(a);
      if (m.rank() != 3) continue;
      const Set b = extend_to_basis(m, 0);
      const Matrix s = standard_form(a, m.labels_of(b));
      CHECK(is_standard_form(s));
      CHECK(testing::matches_matrix(m, s));
    }
  }
}

TEST_CASE("induce_representation") {
  const Matrix a = standard_form(pg(4, 2)->matrix(), Labels{"0001", "0010", "0100", "1000"});
  CHECK(induce_representation(a, Labels{}, Labels{}, a.row_labels()) == a);

  const auto m = std::make_shared<const LinearMatroid>(a);
  const Matrix con = induce_representation(a, Labels{"1000"}, Labels{}, Labels{"0001", "0010", "0100"});
  CHECK(con.rows() == 3);
  CHECK(con.cols() == 14);
  CHECK(testing::matches_matrix(*minor(m, {{"1000"}, {}}), con));

  const Matrix del = induce_representation(a, Labels{}, Labels{"1111"}, a.row_labels());
  CHECK(del.rows() == 4);
  CHECK(del.cols() == 14);
  CHECK_FALSE(del.has_col("1111"));
  CHECK(del.row_labels() == a.row_labels());

  CHECK_THROWS_AS(induce_representation(fano(), Labels{}, Labels{}, Labels{"001", "010", "100"}), PreconditionError);
}

TEST_CASE("apply_projective") {
  std::mt19937_64 rng(3);
  const Matrix a = fano();
  const Matrix id = identity(a.field(), 3).with_row_labels(a.row_labels());
  CHECK(apply_projective(a, id, std::vector<Element>(7, Element{1})) == a);

  for (int i = 0; i < 20; ++i) {
    const Matrix t = testing::random_invertible(a.field(), 3, rng);
    const Matrix b = apply_projective(a, t, std::vector<Element>(7, Element{1}));
    CHECK(testing::matches_matrix(LinearMatroid(a), b));
  }

  const FieldSpec gf4 = FieldSpec::make(2, 2);
  const Matrix a4 = testing::lift(a, gf4);
  std::vector<Element> scales(7, Element{1});
  scales[3] = Element{2};
  CHECK(testing::matches_matrix(LinearMatroid(a4), apply_projective(a4, identity(gf4, 3), scales)));

  scales[3] = Element{0};
  CHECK_THROWS_AS(apply_projective(a4, identity(gf4, 3), scales), PreconditionError);
  Matrix singular = identity(gf4, 3);
  singular(2, 2) = Element{0};
  CHECK_THROWS_AS(apply_projective(a4, singular, std::vector<Element>(7, Element{1})), PreconditionError);
}

TEST_CASE("projective transformations preserve the matroid on up to 12 columns") {
  std::mt19937_64 rng(13);
  for (long long q : {2, 3, 4, 9}) {
    const FieldSpec f = FieldSpec::of_order(q);
    for (int i = 0; i < 10; ++i) {
      const int rows = 2 + static_cast<int>(rng() % 3);
      const int cols = 4 + static_cast<int>(rng() % 9);
      const Matrix a = testing::random_matrix(f, rows, cols, rng);
      const Matrix t = testing::random_invertible(f, rows, rng);
      const Matrix b = apply_projective(a, t, testing::random_scales(f, cols, rng));
      CHECK(testing::matches_matrix(LinearMatroid(a), b));
    }
  }
}

TEST_CASE("parallel_classes") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const FieldSpec f = FieldSpec::of_order(t % 2 == 0 ? 3 : 4);
    const Matrix a = testing::random_matrix(f, 2, 12, rng);
    CHECK(parallel_classes(a) == simplify_epsilon(std::make_shared<LinearMatroid>(a)).epsilon);
  }
  const FieldSpec gf4 = FieldSpec::make(2, 2);
  Labels cols;
  for (int c = 0; c < 80; ++c) cols.push_back("c" + std::to_string(c));
  Matrix a(gf4, {"r0", "r1"}, cols);
  for (int c = 0; c < 80; ++c) {
    a(0, c) = Element{static_cast<std::uint32_t>(c % 4)};
    a(1, c) = Element{static_cast<std::uint32_t>((c / 4) % 4)};
  }
  CHECK(parallel_classes(a) == 5);
}

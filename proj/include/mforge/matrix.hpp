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

#ifndef MFORGE_MATRIX_HPP_
#define MFORGE_MATRIX_HPP_

#include <span>
#include <string>
#include <vector>

#include "mforge/field.hpp"

namespace mforge {

using Labels = std::vector<std::string>;

// A dense matrix over a finite field whose rows and columns carry labels.
// Column labels name ground-set elements; in standard form the row labels
// name the basis elements.
class Matrix {
 public:
  // Zero matrix.
  Matrix(FieldSpec field, Labels row_labels, Labels col_labels);
  Matrix(FieldSpec field, Labels row_labels, Labels col_labels, std::vector<Element> entries);

  // Row labels default to r0, r1, ...
  static Matrix from_rows(FieldSpec field, Labels col_labels, const std::vector<std::vector<Element>>& rows);
  static Labels default_row_labels(int n);

  const FieldSpec& field() const { return field_; }
  int rows() const { return static_cast<int>(row_labels_.size()); }
  int cols() const { return static_cast<int>(col_labels_.size()); }
  const Labels& row_labels() const { return row_labels_; }
  const Labels& col_labels() const { return col_labels_; }

  Element operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols() + c]; }
  Element& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols() + c]; }
  Element at(const std::string& row, const std::string& col) const {
    return (*this)(row_index(row), col_index(col));
  }

  // Index lookups throw PreconditionError for unknown labels.
  int row_index(const std::string& label) const;
  int col_index(const std::string& label) const;
  bool has_col(const std::string& label) const;

  // A[X, Y] in the given label orders.
  Matrix submatrix(std::span<const std::string> rows, std::span<const std::string> cols) const;
  Matrix select_columns(std::span<const std::string> cols) const;
  Matrix with_row_labels(Labels labels) const;

  void scale_row(int r, Element s);
  void scale_col(int c, Element s);
  // row[dst] += s * row[src]
  void add_row_multiple(int dst, int src, Element s);
  void swap_rows(int a, int b);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  Labels row_labels_;
  Labels col_labels_;
  std::vector<Element> entries_;
};

struct RrefResult {
  Matrix rref;
  int rank = 0;
  std::vector<int> pivot_cols;
};

// Reduced row-echelon form; pivots are chosen as the first nonzero entry in
// a row-major scan. Zero rows are kept at the bottom.
RrefResult rref_rank(const Matrix& a);

// Rank of the submatrix formed by the given column indices.
int column_rank(const Matrix& a, std::span<const int> cols);

// Number of parallel classes of nonzero columns, with no bound on the number
// of columns.
int parallel_classes(const Matrix& a);

// Rewrites A as [I A'] with respect to the column basis B. Output rows are
// labeled by B in the column order of A; column order is preserved.
// Throws PreconditionError naming a dependent (or non-spanned) column when B
// is not a column basis.
Matrix standard_form(const Matrix& a, std::span<const std::string> basis);

// True iff the rows are labeled by B (any order) and A[B, B] is the identity.
bool is_standard_form(const Matrix& a);

// A[B, E - (C u D)] for A in standard form with respect to B u C.
Matrix induce_representation(const Matrix& a, std::span<const std::string> contract,
                             std::span<const std::string> remove, std::span<const std::string> basis);

// T * A followed by column scaling. T must be square and invertible and every
// scale nonzero.
Matrix apply_projective(const Matrix& a, const Matrix& row_transform, std::span<const Element> col_scales);

// Moves columns (with labels) into the given order.
Matrix permute_columns(const Matrix& a, std::span<const int> order);

}  // namespace mforge

#endif  // MFORGE_MATRIX_HPP_

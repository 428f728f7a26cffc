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

#include "mforge/matrix.hpp"

#include <algorithm>
#include <set>

#include "mforge/error.hpp"

namespace mforge {

namespace {

void check_distinct(const Labels& labels, const char* axis) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw PreconditionError(std::string("duplicate ") + axis + " label '" + l + "'");
  }
}

}  // namespace

Matrix::Matrix(FieldSpec field, Labels row_labels, Labels col_labels)
    : field_(std::move(field)), row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  check_distinct(row_labels_, "row");
  check_distinct(col_labels_, "column");
  entries_.assign(static_cast<std::size_t>(rows()) * cols(), field_.zero());
}

Matrix::Matrix(FieldSpec field, Labels row_labels, Labels col_labels, std::vector<Element> entries)
    : Matrix(std::move(field), std::move(row_labels), std::move(col_labels)) {
  if (entries.size() != entries_.size()) throw PreconditionError("entry count does not match dimensions");
  for (Element e : entries) {
    if (!field_.contains(e)) throw PreconditionError("entry outside the field");
  }
  entries_ = std::move(entries);
}

Labels Matrix::default_row_labels(int n) {
  Labels out;
  for (int i = 0; i < n; ++i) out.push_back("r" + std::to_string(i));
  return out;
}

Matrix Matrix::from_rows(FieldSpec field, Labels col_labels, const std::vector<std::vector<Element>>& rows) {
  std::vector<Element> entries;
  for (const auto& row : rows) {
    if (row.size() != col_labels.size()) throw PreconditionError("ragged row");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), default_row_labels(static_cast<int>(rows.size())), std::move(col_labels),
                std::move(entries));
}

int Matrix::row_index(const std::string& label) const {
  auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
  if (it == row_labels_.end()) throw PreconditionError("unknown row label '" + label + "'");
  return static_cast<int>(it - row_labels_.begin());
}

int Matrix::col_index(const std::string& label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  if (it == col_labels_.end()) throw PreconditionError("unknown column label '" + label + "'");
  return static_cast<int>(it - col_labels_.begin());
}

bool Matrix::has_col(const std::string& label) const {
  return std::find(col_labels_.begin(), col_labels_.end(), label) != col_labels_.end();
}

Matrix Matrix::submatrix(std::span<const std::string> rs, std::span<const std::string> cs) const {
  Matrix out(field_, Labels(rs.begin(), rs.end()), Labels(cs.begin(), cs.end()));
  std::vector<int> ri, ci;
  for (const auto& r : rs) ri.push_back(row_index(r));
  for (const auto& c : cs) ci.push_back(col_index(c));
  for (std::size_t i = 0; i < ri.size(); ++i) {
    for (std::size_t j = 0; j < ci.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = (*this)(ri[i], ci[j]);
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::string> cs) const { return submatrix(row_labels_, cs); }

Matrix Matrix::with_row_labels(Labels labels) const {
  if (static_cast<int>(labels.size()) != rows()) throw PreconditionError("row label count mismatch");
  return Matrix(field_, std::move(labels), col_labels_, entries_);
}

void Matrix::scale_row(int r, Element s) {
  for (int c = 0; c < cols(); ++c) (*this)(r, c) = field_.mul((*this)(r, c), s);
}

void Matrix::scale_col(int c, Element s) {
  for (int r = 0; r < rows(); ++r) (*this)(r, c) = field_.mul((*this)(r, c), s);
}

void Matrix::add_row_multiple(int dst, int src, Element s) {
  if (s.is_zero()) return;
  for (int c = 0; c < cols(); ++c) {
    (*this)(dst, c) = field_.add((*this)(dst, c), field_.mul(s, (*this)(src, c)));
  }
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols(); ++c) std::swap((*this)(a, c), (*this)(b, c));
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ &&
         a.entries_ == b.entries_;
}

RrefResult rref_rank(const Matrix& a) {
  Matrix r = a;
  const FieldSpec& f = a.field();
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < r.cols() && row < r.rows(); ++c) {
    int pick = -1;
    for (int i = row; i < r.rows(); ++i) {
      if (!r(i, c).is_zero()) {
        pick = i;
        break;
      }
    }
    if (pick < 0) continue;
    r.swap_rows(row, pick);
    r.scale_row(row, f.inv(r(row, c)));
    for (int i = 0; i < r.rows(); ++i) {
      if (i != row) r.add_row_multiple(i, row, f.neg(r(i, c)));
    }
    pivots.push_back(c);
    ++row;
  }
  return RrefResult{std::move(r), row, std::move(pivots)};
}

int column_rank(const Matrix& a, std::span<const int> cols) {
  const FieldSpec& f = a.field();
  const int m = a.rows();
  // Echelon basis of the span so far; basis[i] has a unit at pivot[i].
  std::vector<std::vector<Element>> basis;
  std::vector<int> pivot;
  std::vector<Element> v(m);
  for (int c : cols) {
    for (int i = 0; i < m; ++i) v[i] = a(i, c);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Element coef = v[pivot[b]];
      if (coef.is_zero()) continue;
      const Element s = f.neg(coef);
      for (int i = 0; i < m; ++i) v[i] = f.add(v[i], f.mul(s, basis[b][i]));
    }
    int p = -1;
    for (int i = 0; i < m; ++i) {
      if (!v[i].is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    const Element s = f.inv(v[p]);
    for (int i = 0; i < m; ++i) v[i] = f.mul(v[i], s);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Element coef = basis[b][p];
      if (coef.is_zero()) continue;
      const Element t = f.neg(coef);
      for (int i = 0; i < m; ++i) basis[b][i] = f.add(basis[b][i], f.mul(t, v[i]));
    }
    basis.push_back(v);
    pivot.push_back(p);
    if (static_cast<int>(basis.size()) == m) break;
  }
  return static_cast<int>(basis.size());
}

int parallel_classes(const Matrix& a) {
  std::vector<int> reps;
  for (int c = 0; c < a.cols(); ++c) {
    const int single[] = {c};
    if (column_rank(a, single) == 0) continue;
    bool seen = false;
    for (int r : reps) {
      const int pair[] = {r, c};
      if (column_rank(a, pair) == 1) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.push_back(c);
  }
  return static_cast<int>(reps.size());
}

Matrix standard_form(const Matrix& a, std::span<const std::string> basis) {
  std::set<std::string> in_basis(basis.begin(), basis.end());
  if (in_basis.size() != basis.size()) throw PreconditionError("basis labels are not distinct");
  for (const auto& b : basis) a.col_index(b);

  const FieldSpec& f = a.field();
  Matrix r = a;
  Labels row_labels;
  int row = 0;
  for (int c = 0; c < a.cols(); ++c) {
    const std::string& label = a.col_labels()[c];
    if (!in_basis.count(label)) continue;
    int pick = -1;
    for (int i = row; i < r.rows(); ++i) {
      if (!r(i, c).is_zero()) {
        pick = i;
        break;
      }
    }
    if (pick < 0) {
      throw PreconditionError("basis column '" + label + "' depends on the earlier basis columns");
    }
    r.swap_rows(row, pick);
    r.scale_row(row, f.inv(r(row, c)));
    for (int i = 0; i < r.rows(); ++i) {
      if (i != row) r.add_row_multiple(i, row, f.neg(r(i, c)));
    }
    row_labels.push_back(label);
    ++row;
  }
  for (int i = row; i < r.rows(); ++i) {
    for (int c = 0; c < r.cols(); ++c) {
      if (!r(i, c).is_zero()) {
        throw PreconditionError("basis does not span column '" + a.col_labels()[c] + "'");
      }
    }
  }
  Matrix out(f, row_labels, a.col_labels());
  for (int i = 0; i < row; ++i) {
    for (int c = 0; c < r.cols(); ++c) out(i, c) = r(i, c);
  }
  return out;
}

bool is_standard_form(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    if (!a.has_col(a.row_labels()[i])) return false;
    for (int j = 0; j < a.rows(); ++j) {
      const Element want = i == j ? a.field().one() : a.field().zero();
      if (a(i, a.col_index(a.row_labels()[j])) != want) return false;
    }
  }
  return true;
}

Matrix induce_representation(const Matrix& a, std::span<const std::string> contract,
                             std::span<const std::string> remove, std::span<const std::string> basis) {
  std::set<std::string> b(basis.begin(), basis.end()), c(contract.begin(), contract.end()),
      d(remove.begin(), remove.end());
  for (const auto& x : c) {
    if (b.count(x)) throw PreconditionError("contract set meets the basis at '" + x + "'");
  }
  for (const auto& x : d) {
    if (b.count(x) || c.count(x)) throw PreconditionError("delete set meets B u C at '" + x + "'");
    a.col_index(x);
  }
  std::set<std::string> rows(a.row_labels().begin(), a.row_labels().end());
  std::set<std::string> want = b;
  want.insert(c.begin(), c.end());
  if (rows != want || !is_standard_form(a)) {
    throw PreconditionError("matrix is not in standard form with respect to B u C");
  }
  Labels out_rows, out_cols;
  for (const auto& r : a.row_labels()) {
    if (b.count(r)) out_rows.push_back(r);
  }
  for (const auto& col : a.col_labels()) {
    if (!c.count(col) && !d.count(col)) out_cols.push_back(col);
  }
  return a.submatrix(out_rows, out_cols);
}

Matrix apply_projective(const Matrix& a, const Matrix& t, std::span<const Element> col_scales) {
  const FieldSpec& f = a.field();
  if (!(t.field() == f)) throw PreconditionError("row transform over a different field");
  if (t.rows() != a.rows() || t.cols() != a.rows()) throw PreconditionError("row transform has the wrong shape");
  if (static_cast<int>(col_scales.size()) != a.cols()) throw PreconditionError("one scale per column required");
  for (Element s : col_scales) {
    if (s.is_zero()) throw PreconditionError("zero column scale");
  }
  if (rref_rank(t).rank != t.rows()) throw PreconditionError("singular row transform");
  Matrix out(f, a.row_labels(), a.col_labels());
  for (int i = 0; i < a.rows(); ++i) {
    for (int c = 0; c < a.cols(); ++c) {
      Element acc = f.zero();
      for (int k = 0; k < a.rows(); ++k) acc = f.add(acc, f.mul(t(i, k), a(k, c)));
      out(i, c) = f.mul(acc, col_scales[c]);
    }
  }
  return out;
}

Matrix permute_columns(const Matrix& a, std::span<const int> order) {
  if (static_cast<int>(order.size()) != a.cols()) throw PreconditionError("permutation has the wrong length");
  Labels cols;
  for (int c : order) cols.push_back(a.col_labels().at(c));
  return a.select_columns(cols);
}

}  // namespace mforge

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

#include "mforge/witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "mforge/connectivity.hpp"
#include "mforge/geometry.hpp"
#include "mforge/subfield.hpp"

namespace mforge {
namespace {

bool in_gf(const FieldSpec& field, long long q, Element a) { return in_subfield_of_order(field, q, a); }

void check_order(const FieldSpec& field, long long q) {
  const auto pk = prime_power(q);
  if (!pk || pk->first != field.characteristic() || field.degree() % pk->second != 0) {
    throw PreconditionError("GF(" + std::to_string(q) + ") is not a subfield of GF(" + std::to_string(field.order()) +
                            ")");
  }
}

Labels sorted_labels(const Matroid& m, const Labels& labels) { return m.labels_of(m.set_of(labels)); }

Labels minus(const Labels& a, const Labels& b) {
  Labels out;
  for (const auto& s : a) {
    if (std::find(b.begin(), b.end(), s) == b.end()) out.push_back(s);
  }
  return out;
}

Labels concat(Labels a, const Labels& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Rank agreement on every subset, or on a fixed sample above 16 elements.
bool same_matroid(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  auto check = [&](Set s) { return a.rank(s) == b.rank(b.set_of(a.labels_of(s))); };
  if (a.size() <= 16) {
    for (Set s = 0; s <= a.all(); ++s) {
      if (!check(s)) return false;
    }
    return true;
  }
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 4096; ++i) {
    if (!check(rng() & a.all())) return false;
  }
  return true;
}

// M / contract restricted to keep, checked to be U_{2,k}.
void check_line_minor(const MatroidPtr& m, const MinorSpec& spec, int k) {
  const auto line = minor(m, spec);
  if (line->rank() != 2 || line->size() != k || simplify_epsilon(line).epsilon != k) {
    throw Error("extracted minor is not U_{2," + std::to_string(k) + "}");
  }
}

MinorSpec line_spec(const Matroid& m, const Labels& contract, const Labels& keep) {
  MinorSpec spec;
  spec.contract = sorted_labels(m, contract);
  spec.remove = minus(minus(m.ground(), spec.contract), keep);
  return spec;
}

std::vector<std::uint32_t> codes(const std::vector<Element>& v) {
  std::vector<std::uint32_t> out;
  for (Element e : v) out.push_back(e.code);
  return out;
}

}  // namespace

LineWitness line_from_pg_extension(const MatroidPtr& p, const std::string& e, long long q) {
  if (!p->has(e)) throw PreconditionError("element '" + e + "' is not in P");
  if (p->rank() != 3) throw PreconditionError("P has rank " + std::to_string(p->rank()) + ", expected 3");
  if (simplify_epsilon(p).epsilon != p->size()) throw PreconditionError("P is not simple");
  const Set ie = bit(p->index(e));
  if (!verify_geometry(*deletion(p, ie), {GeometryKind::kProjective, 3, q}).isomorphic) {
    throw PreconditionError("P \\ " + e + " is not PG(2, " + std::to_string(q) + ")");
  }
  const auto contracted = contraction(p, ie);
  const auto simple = simplify_epsilon(contracted);
  if (simple.epsilon < q * q + 1) {
    throw Error("P / " + e + " has " + std::to_string(simple.epsilon) + " parallel classes, expected at least " +
                std::to_string(q * q + 1));
  }
  LineWitness out;
  out.k = simple.epsilon;
  out.spec.contract = {e};
  for (const auto& label : contracted->ground()) {
    const auto it = simple.representative.find(label);
    if (it == simple.representative.end() || it->second != label) out.spec.remove.push_back(label);
  }
  return out;
}

PairResult nonsubfield_pair(const Matrix& a, const std::string& x, long long q, const MatroidPtr& m) {
  const FieldSpec& field = a.field();
  check_order(field, q);
  if (scaled_subfield_check(a, q).scaled) {
    throw HypothesisError("A is not a scaled GF(" + std::to_string(q) + ")-matrix",
                          "the matrix is projectively equivalent to one over the subfield");
  }
  const int rx = a.row_index(x);
  const int ix = m->index(x);
  const int rank_x = m->rank(bit(ix));
  Labels support;
  for (const auto& label : m->ground()) {
    if (label != x && !a(rx, a.col_index(label)).is_zero()) support.push_back(label);
  }
  auto ratio = [&](const std::string& f, const std::string& g) {
    return field.div(a(rx, a.col_index(g)), a(rx, a.col_index(f)));
  };
  std::optional<std::pair<std::string, std::string>> dependent;
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const auto& f = support[i];
      const auto& g = support[j];
      if (in_gf(field, q, ratio(f, g))) continue;
      const Set fg = bit(m->index(f)) | bit(m->index(g));
      if (m->rank(fg | bit(ix)) - rank_x != 2) {
        if (!dependent) dependent = {f, g};
        continue;
      }
      PairResult out{f, g, ratio(f, g), a};
      const Element s = field.inv(a(rx, a.col_index(f)));
      out.scaled.scale_row(rx, s);
      out.scaled.scale_col(a.col_index(x), field.inv(s));
      return out;
    }
  }
  if (!dependent) {
    throw HypothesisError("A is not a scaled GF(" + std::to_string(q) + ")-matrix",
                          "every ratio of nonzero entries in row " + x + " lies in the subfield");
  }
  const auto& [f, y] = *dependent;
  const Set triad = bit(m->index(f)) | bit(m->index(y)) | bit(ix);
  const bool circuit = m->rank(triad) == 2;
  const Set rest = m->all() & ~triad;
  const bool cocircuit = m->rank(rest) == m->rank() - 1 && is_flat(*m, rest);
  throw HypothesisError("M' is 3-connected",
                        "{" + f + ", " + x + ", " + y + "} is " + (circuit ? "a circuit" : "not a circuit") +
                            (cocircuit ? " and a cocircuit" : "") + " with lambda = " +
                            std::to_string(lambda(*m, triad)));
}

std::optional<Set> monochromatic_ag(const Matroid& g, const std::map<std::string, std::uint32_t>& coloring, int k) {
  const int n = g.rank();
  if (n < 2) throw PreconditionError("G must have rank at least 2");
  if (k < 1 || k > n) throw PreconditionError("k must lie in [1, " + std::to_string(n) + "]");
  const auto q = static_cast<long long>(std::llround(std::pow(g.size(), 1.0 / (n - 1))));
  long long count = 1;
  for (int i = 0; i < n - 1; ++i) count *= q;
  if (count != g.size() || !prime_power(q) ||
      !verify_geometry(g, {GeometryKind::kAffine, n, q}).isomorphic) {
    throw PreconditionError("G is not an affine geometry of rank " + std::to_string(n));
  }
  std::vector<std::uint32_t> color;
  for (const auto& label : g.ground()) {
    const auto it = coloring.find(label);
    if (it == coloring.end()) throw PreconditionError("element '" + label + "' has no color");
    color.push_back(it->second);
  }
  for (Set flat : flats(g, k)) {
    const std::uint32_t c = color[lowest(flat)];
    bool mono = true;
    for_each_element(flat, [&](int i) { mono = mono && color[i] == c; });
    if (mono) return flat;
  }
  return std::nullopt;
}

ExtractionResult extract_long_line(const MatroidPtr& m, const std::string& x, const std::optional<std::string>& y,
                                   const Matrix& a, long long q) {
  const FieldSpec& field = a.field();
  check_order(field, q);
  WitnessTrace t;
  t.x = x;
  t.y = y;
  auto fail = [&](const std::string& stage, const std::string& detail) { throw StageFailure(stage, detail, t); };

  // Hypotheses.
  if (!m->has(x) || (y && (!m->has(*y) || *y == x))) throw PreconditionError("x and y must be distinct elements");
  if (std::set<std::string>(a.col_labels().begin(), a.col_labels().end()) !=
          std::set<std::string>(m->ground().begin(), m->ground().end()) ||
      a.cols() != m->size()) {
    throw PreconditionError("matrix columns do not match the ground set");
  }
  a.row_index(x);
  if (!is_standard_form(a)) throw PreconditionError("A is not in standard form");
  if (!same_matroid(*m, LinearMatroid(a))) throw PreconditionError("A does not represent M'");
  if (!is_3connected(*m).three_connected) throw HypothesisError("M' is 3-connected", "a 2-separation exists");
  const MinorSpec embedding{{x}, y ? Labels{*y} : Labels{}};
  const auto n_minor = minor(m, embedding);
  const int n = n_minor->rank();
  if (!verify_geometry(*n_minor, {GeometryKind::kProjective, n, q}).isomorphic) {
    throw HypothesisError("N is PG(" + std::to_string(n - 1) + ", " + std::to_string(q) + ")",
                          "M'/x" + std::string(y ? " \\ y" : "") + " is not a projective geometry");
  }
  const Labels rows_b = minus(a.row_labels(), {x});
  const Labels n_labels = n_minor->ground();
  if (!entries_in_subfield(a.submatrix(rows_b, n_labels), q)) {
    throw PreconditionError("A[B, E(N)] has entries outside GF(" + std::to_string(q) + ")");
  }

  Matrix work = a;
  if (y) {
    const int cy = work.col_index(*y);
    std::vector<int> nonzero;
    for (const auto& b : rows_b) {
      if (!work(work.row_index(b), cy).is_zero()) nonzero.push_back(work.row_index(b));
    }
    if (nonzero.empty()) throw PreconditionError("y is a loop of M'/x");
    const Element first = work(nonzero[0], cy);
    std::optional<std::pair<int, int>> bad;
    for (std::size_t i = 0; i < nonzero.size() && !bad; ++i) {
      for (std::size_t j = i + 1; j < nonzero.size() && !bad; ++j) {
        if (!in_gf(field, q, field.div(work(nonzero[j], cy), work(nonzero[i], cy)))) bad = {nonzero[i], nonzero[j]};
      }
    }
    if (!bad) {
      work.scale_col(cy, field.inv(first));
    } else {
      // y is not a subfield point: project N onto a plane through the two
      // offending coordinates.
      t.route = "extension";
      const std::string ra = work.row_labels()[bad->first];
      const std::string rb = work.row_labels()[bad->second];
      std::string rc;
      for (const auto& b : rows_b) {
        if (b != ra && b != rb) {
          rc = b;
          break;
        }
      }
      if (rc.empty()) throw PreconditionError("N must have rank at least 3");
      const Labels contract = concat({x}, minus(rows_b, {ra, rb, rc}));
      const auto plane = minor(m, {contract, {}});
      const auto simple = simplify_epsilon(plane);
      if (simple.representative.at(*y) != *y) fail("LineExtraction", "y is parallel to a subfield point");
      LineWitness lw;
      try {
        lw = line_from_pg_extension(simple.si, *y, q);
      } catch (const PreconditionError& err) {
        fail("LineExtraction", err.what());
      }
      const Labels keep = minus(minus(simple.si->ground(), {*y}), lw.spec.remove);
      t.output = line_spec(*m, concat(contract, {*y}), keep);
      t.k = lw.k;
      check_line_minor(m, t.output, t.k);
      return {t.output, t};
    }
  }

  // Stage 1.
  const PairResult pair = nonsubfield_pair(work, x, q, m);
  work = pair.scaled;
  t.stage = 1;
  t.f = pair.f;
  t.g = pair.g;
  t.omega = pair.omega.code;

  // Stage 2.
  const auto mx = contraction(m, bit(m->index(x)));
  const int r = mx->rank();
  const Set fg = mx->set_of(Labels{t.f, t.g});
  Set h = 0;
  for (Set flat : flats(*mx, r - 1)) {
    if (is_subset(fg, flat)) {
      h = flat;
      break;
    }
  }
  t.hyperplane = mx->labels_of(h);
  for (const auto& label : n_labels) {
    if (!contains(h, mx->index(label))) {
      t.z = label;
      break;
    }
  }
  t.cocircuit = minus(minus(mx->ground(), t.hyperplane), y ? Labels{*y} : Labels{});
  t.stage = 2;

  // Stage 3: standard form with respect to B' u {x}, rows of B' over GF(q).
  const Labels b_prime = concat({t.z}, mx->labels_of(max_independent_subset(*mx, h)));
  const Matrix rho = standard_form(work.submatrix(rows_b, work.col_labels()), b_prime);
  Matrix ap(field, concat({x}, rho.row_labels()), work.col_labels());
  const int rx = work.row_index(x);
  for (int c = 0; c < ap.cols(); ++c) {
    Element v = work(rx, c);
    for (int i = 0; i < rho.rows(); ++i) {
      const Element wb = work(rx, work.col_index(rho.row_labels()[i]));
      v = field.sub(v, field.mul(wb, rho(i, c)));
    }
    ap(0, c) = v;
    for (int i = 0; i < rho.rows(); ++i) ap(i + 1, c) = rho(i, c);
  }
  const int rz = ap.row_index(t.z);
  for (const auto& e : t.cocircuit) {
    const int c = ap.col_index(e);
    if (ap(rz, c).is_zero()) fail("Coloring", "column " + e + " vanishes in row " + t.z);
    ap.scale_col(c, field.inv(ap(rz, c)));
  }
  std::map<std::uint32_t, std::string> first_of_color;
  for (const auto& e : t.cocircuit) {
    const std::uint32_t c = ap(0, ap.col_index(e)).code;
    t.coloring[e] = c;
    first_of_color.emplace(c, e);
  }
  t.distinct_colors = static_cast<int>(first_of_color.size());
  t.stage = 3;
  if (t.distinct_colors >= q * q + 1) {
    t.route = "shortcut";
    Labels keep;
    for (const auto& [c, e] : first_of_color) keep.push_back(e);
    t.output = line_spec(*m, minus(b_prime, {t.z}), keep);
    t.k = t.distinct_colors;
    check_line_minor(m, t.output, t.k);
    return {t.output, t};
  }

  // Stage 4.
  t.stage = 4;
  if (r < 4) fail("NoMonochromaticAG", "M'/x has rank " + std::to_string(r) + ", below 4");
  const auto g_matroid = restrict_to(mx, mx->set_of(t.cocircuit));
  const auto mono = monochromatic_ag(*g_matroid, t.coloring, 4);
  if (!mono) fail("NoMonochromaticAG", "no monochromatic AG(3, " + std::to_string(q) + ") among the colored points");
  t.monochromatic = g_matroid->labels_of(*mono);
  t.beta = t.coloring.at(t.monochromatic.front());

  // Stage 5.
  t.stage = 5;
  const Set y_set = mx->set_of(t.monochromatic);
  const Linking link = linking_set(*mx, fg, y_set);
  t.linking = mx->labels_of(link.z);
  t.linking_value = link.value;
  if (link.value != 2) fail("NoLinkingValue", "kappa({f, g}, Y) = " + std::to_string(link.value));

  // Stage 6.
  t.stage = 6;
  Set basis = link.z;
  Labels y_basis;
  for (int i : elements_of(y_set)) {
    if (is_independent(*mx, basis | bit(i))) {
      basis |= bit(i);
      y_basis.push_back(mx->ground()[i]);
    }
  }
  basis = extend_to_basis(*mx, basis);
  const Labels b2 = mx->labels_of(basis);
  t.contracted = minus(b2, y_basis);
  const Matrix rho2 = standard_form(ap.submatrix(rho.row_labels(), ap.col_labels()), b2);

  std::vector<Element> v(static_cast<std::size_t>(ap.cols()));
  const Element beta = field.element(t.beta);
  for (int c = 0; c < ap.cols(); ++c) {
    const Element u = field.neg(field.mul(beta, ap(rz, c)));
    t.u.push_back(u.code);
    v[c] = field.add(ap(0, c), u);
  }
  const std::vector<Element> v0 = v;
  for (const auto& b : t.contracted) {
    const Element s = v0[ap.col_index(b)];
    const int rb = rho2.row_index(b);
    for (int c = 0; c < ap.cols(); ++c) v[c] = field.sub(v[c], field.mul(s, rho2(rb, c)));
  }
  for (const auto& e : concat(t.monochromatic, t.contracted)) {
    if (!v[ap.col_index(e)].is_zero()) fail("InconsistentBorder", "border row does not vanish at " + e);
  }

  t.border_rows = concat({x}, y_basis);
  t.border_cols = concat(t.monochromatic, {t.f, t.g});
  const Element va = v[ap.col_index(t.f)];
  const Element vb = v[ap.col_index(t.g)];
  if (va.is_zero()) fail("DegenerateBorder", "border row vanishes at f");
  Matrix d(field, t.border_rows, t.border_cols);
  for (int c = 0; c < d.cols(); ++c) {
    const int src = ap.col_index(t.border_cols[c]);
    d(0, c) = field.div(v[src], va);
    for (std::size_t i = 0; i < y_basis.size(); ++i) {
      d(static_cast<int>(i) + 1, c) = rho2(rho2.row_index(y_basis[i]), src);
    }
  }
  for (int i = 0; i < d.rows(); ++i) {
    for (int c = 0; c < d.cols(); ++c) t.border.push_back(d(i, c).code);
  }
  {
    const Labels removed = minus(minus(m->ground(), t.contracted), t.border_cols);
    if (!same_matroid(*minor(m, {t.contracted, removed}), LinearMatroid(d))) {
      fail("InconsistentBorder", "D does not represent (M'/K)|(Y u {f, g})");
    }
  }
  const Element ratio = field.div(vb, va);
  t.ratio = ratio.code;
  if (ratio.is_zero() || in_gf(field, q, ratio)) {
    fail("RatioInSubfield", "D[x, g] / D[x, f] lies in GF(" + std::to_string(q) + ")");
  }
  std::vector<Element> alpha, alpha_prime, column;
  for (std::size_t i = 0; i < y_basis.size(); ++i) {
    const int row = static_cast<int>(i) + 1;
    alpha.push_back(d(row, d.col_index(t.f)));
    alpha_prime.push_back(d(row, d.col_index(t.g)));
    column.push_back(field.sub(alpha_prime.back(), field.mul(ratio, alpha.back())));
  }
  t.alpha = codes(alpha);
  t.alpha_prime = codes(alpha_prime);
  t.contracted_column = codes(column);
  {
    Matrix pair_cols(field, y_basis, {t.f, t.g});
    for (std::size_t i = 0; i < y_basis.size(); ++i) {
      pair_cols(static_cast<int>(i), 0) = alpha[i];
      pair_cols(static_cast<int>(i), 1) = alpha_prime[i];
    }
    if (rref_rank(pair_cols).rank != 2) fail("DegenerateBorder", "alpha and alpha' are parallel or zero");
  }
  const Matrix d1 = d.submatrix(y_basis, t.monochromatic);
  if (!verify_geometry(LinearMatroid(d1), {GeometryKind::kAffine, 4, q}).isomorphic) {
    fail("InconsistentBorder", "D[Y_b, Y] is not AG(3, " + std::to_string(q) + ")");
  }
  Matrix ext(field, y_basis, concat(t.monochromatic, {t.g}));
  for (int i = 0; i < ext.rows(); ++i) {
    for (int c = 0; c + 1 < ext.cols(); ++c) ext(i, c) = d1(i, c);
    ext(i, ext.cols() - 1) = column[i];
  }
  if (scaled_subfield_check(ext, q).scaled) {
    fail("RatioInSubfield", "alpha' - omega alpha is parallel to a subfield vector");
  }

  // Stage 7.
  t.stage = 7;
  const auto l = std::make_shared<const LinearMatroid>(ext);
  const int ig = l->index(t.g);
  std::vector<Set> bad_lines;
  for (Set line : flats(*l, 2)) {
    if (!contains(line, ig) && l->rank(line | bit(ig)) == 2) bad_lines.push_back(line);
  }
  t.bad_lines = static_cast<int>(bad_lines.size());
  if (t.bad_lines > 1) fail("BadLineCount", std::to_string(t.bad_lines) + " lines of Y span g");
  for (const auto& label : t.monochromatic) {
    const int i = l->index(label);
    bool avoided = l->rank(bit(i) | bit(ig)) == 2;
    for (Set line : bad_lines) avoided = avoided && !contains(line, i);
    if (avoided) {
      t.e = label;
      break;
    }
  }
  if (t.e.empty()) fail("NoAvoidingElement", "every element of Y lies on a line spanning g");

  // Stage 8.
  t.stage = 8;
  const auto plane = simplify_epsilon(contraction(l, bit(l->index(t.e))));
  if (plane.representative.at(t.g) != t.g) fail("LineExtraction", "g is parallel to an element of Y in M''/f/e");
  LineWitness lw;
  try {
    lw = line_from_pg_extension(plane.si, t.g, q);
  } catch (const PreconditionError& err) {
    fail("LineExtraction", err.what());
  }
  const Labels keep = minus(minus(plane.si->ground(), {t.g}), lw.spec.remove);
  t.output = line_spec(*m, concat(t.contracted, {t.f, t.e, t.g}), keep);
  t.k = lw.k;
  check_line_minor(m, t.output, t.k);
  if (longest_line(minor(m, t.output)).k < q * q + 1) fail("LineExtraction", "extracted line is too short");
  return {t.output, t};
}

}  // namespace mforge

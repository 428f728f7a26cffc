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

#include "mforge/construct.hpp"

#include <algorithm>
#include <set>

#include "mforge/geometry.hpp"

namespace mforge {

namespace {

// The first |C| - 3 elements of C in ground order.
Set pappus_contract_set(Set c) {
  Set x = 0;
  const int want = set_size(c) - 3;
  for (int e : elements_of(c)) {
    if (set_size(x) == want) break;
    x |= bit(e);
  }
  return x;
}

MatroidPtr unrelaxed(const MatroidPtr& m, Set c) {
  if (auto r = std::dynamic_pointer_cast<const RelaxedMatroid>(m); r && r->relaxed_set() == c) return r->base();
  return m;
}

long long infer_q(const Matroid& n) {
  std::size_t longest = 0;
  for (Set l : flats(n, 2)) longest = std::max<std::size_t>(longest, set_size(l));
  return static_cast<long long>(longest) - 1;
}

std::vector<std::pair<std::string, std::string>> bijection_pairs(const Matroid& from, const Matroid& to,
                                                                 const std::vector<int>& bij) {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < from.size(); ++i) out.emplace_back(from.ground()[i], to.ground()[bij[i]]);
  return out;
}

// Minor of M with the given contract set, restricted to one representative
// per parallel class of `keep`.
MinorSpec simple_minor_spec(const MatroidPtr& m, Set contract, Set keep) {
  const MatroidPtr con = contraction(m, contract);
  Set reps = 0;
  for (int e : elements_of(keep)) {
    const int ie = con->index(m->ground()[e]);
    if (con->rank(bit(ie)) == 0) continue;
    bool parallel = false;
    for_each_element(reps, [&](int r) {
      if (con->rank(bit(ie) | bit(con->index(m->ground()[r]))) == 1) parallel = true;
    });
    if (!parallel) reps |= bit(e);
  }
  return {m->labels_of(contract), m->labels_of(m->all() & ~(contract | reps))};
}

bool bijection_matches(const MatroidPtr& m, const MinorSpec& spec,
                       const std::vector<std::pair<std::string, std::string>>& map, const MatroidPtr& canonical) {
  const MatroidPtr mn = minor(m, spec);
  if (mn->size() != canonical->size() || static_cast<int>(map.size()) != mn->size()) return false;
  std::vector<int> bij(mn->size(), -1);
  for (const auto& [from, to] : map) {
    if (!mn->has(from) || !canonical->has(to)) return false;
    bij[mn->index(from)] = canonical->index(to);
  }
  Set image = 0;
  for (int w : bij) {
    if (w < 0 || contains(image, w)) return false;
    image |= bit(w);
  }
  bool ok = true;
  for_each_subset(mn->all(), [&](Set s) {
    if (!ok) return;
    Set t = 0;
    for_each_element(s, [&](int i) { t |= bit(bij[i]); });
    if (mn->rank(s) != canonical->rank(t)) ok = false;
  });
  return ok;
}

}  // namespace

RelaxedMatroid::RelaxedMatroid(MatroidPtr base, Set c) : Matroid(base->ground()), base_(std::move(base)), c_(c) {
  const Matroid& m = *base_;
  if (!is_subset(c, m.all())) throw PreconditionError("relaxed set outside the ground set");
  const Labels cl = m.labels_of(c);
  if (m.rank(c) == set_size(c)) throw RelaxError("set is independent, not a circuit", cl);
  for (int e : elements_of(c)) {
    const Set sub = c & ~bit(e);
    if (m.rank(sub) < set_size(sub)) throw RelaxError("a proper subset is dependent, not a circuit", m.labels_of(sub));
  }
  if (m.rank(c) != m.rank() - 1) throw RelaxError("set does not have corank 1, not a hyperplane", cl);
  for (int e : elements_of(m.all() & ~c)) {
    if (m.rank(c | bit(e)) == m.rank(c)) throw RelaxError("set is not closed, not a hyperplane", m.labels_of(c | bit(e)));
  }
}

std::shared_ptr<const RelaxedMatroid> relax(const MatroidPtr& m, Set c) {
  return std::make_shared<RelaxedMatroid>(m, c);
}

Counterexample counterexample(int n, long long q) {
  if (n < 3) throw PreconditionError("the counterexample family needs n >= 3");
  const FieldSpec f = FieldSpec::of_order(q);
  const int rank = n + 1;
  std::vector<std::vector<Element>> circuit_points;
  for (int i = 1; i <= n; ++i) {
    std::vector<Element> v(rank, f.zero());
    v[i] = f.one();
    circuit_points.push_back(v);
  }
  std::vector<Element> sum(rank, f.one());
  sum[0] = f.zero();
  circuit_points.push_back(sum);

  std::vector<std::vector<Element>> kept;
  for (auto& p : projective_points(f, rank)) {
    const bool in_c = std::find(circuit_points.begin(), circuit_points.end(), p) != circuit_points.end();
    if (!p[0].is_zero() || in_c) kept.push_back(std::move(p));
  }
  if (kept.size() > static_cast<std::size_t>(kMaxGround)) {
    throw BoundExceeded("counterexample(" + std::to_string(n) + "," + std::to_string(q) + ") exceeds 64 elements");
  }
  Labels cols;
  for (const auto& p : kept) cols.push_back(point_label(p, f.order()));
  Matrix a(f, Matrix::default_row_labels(rank), cols);
  for (std::size_t c = 0; c < kept.size(); ++c) {
    for (int r = 0; r < rank; ++r) a(r, static_cast<int>(c)) = kept[c][r];
  }
  Counterexample out;
  out.n = n;
  out.q = q;
  out.base = std::make_shared<LinearMatroid>(std::move(a));
  for (const auto& p : circuit_points) out.circuit |= bit(out.base->index(point_label(p, f.order())));
  out.relaxed = relax(out.base, out.circuit);
  return out;
}

std::vector<RankClaim> pappus_claims(const PappusPoints& p) {
  const auto& [a, b, c, d, e, f, g, h, i] = p;
  std::vector<RankClaim> out;
  out.push_back({{a, b, c}, 3});
  out.push_back({{d, e, f}, 2});
  out.push_back({{g, h, i}, 2});
  out.push_back({{d, e, f, g, h, i}, 3});
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t t = s + 1; t < p.size(); ++t) out.push_back({{p[s], p[t]}, 2});
  }
  for (const auto& t : {d, e, f}) out.push_back({{g, h, i, t}, 3});
  for (const auto& t : {g, h, i}) out.push_back({{d, e, f, t}, 3});
  out.push_back({{d, h, a}, 2});
  out.push_back({{e, g, a}, 2});
  out.push_back({{d, i, b}, 2});
  out.push_back({{f, g, b}, 2});
  out.push_back({{e, i, c}, 2});
  out.push_back({{f, h, c}, 2});
  return out;
}

MatroidPtr canonical_fano() { return pg(3, 2); }

MatroidPtr canonical_non_fano() {
  const MatroidPtr fano = canonical_fano();
  return relax(fano, flats(*fano, 2).front());
}

Certificate pappus_certificate(const MatroidPtr& relaxed, Set c, std::optional<long long> q) {
  if (set_size(c) < 3) throw PreconditionError("relaxed set needs at least three elements");
  const Set x = pappus_contract_set(c);
  const MatroidPtr contracted = contraction(relaxed, x);
  const MatroidPtr base_contracted = contraction(unrelaxed(relaxed, c), x);
  const Simplification si = simplify_epsilon(base_contracted);
  const Matroid& n = *si.si;
  if (n.rank() != 3) throw PreconditionError("contraction does not have rank 3");
  const long long order = q ? *q : infer_q(n);
  if (order == 2) throw PreconditionError("q = 2 input: use charconflict_certificate");

  // Ranks inside the contraction, addressed by label.
  auto rank_n = [&](const Labels& ls) { return base_contracted->rank(base_contracted->set_of(ls)); };
  auto rank_relaxed = [&](const Labels& ls) { return contracted->rank(contracted->set_of(ls)); };

  Labels abc;
  for (int e : elements_of(c & ~x)) abc.push_back(si.representative.at(relaxed->ground()[e]));
  const std::string& a = abc[0];
  const std::string& b = abc[1];
  const std::string& cc = abc[2];
  const Labels& pts = n.ground();

  // The unique point of N on both lines, if present.
  auto meet = [&](const std::string& p1, const std::string& p2, const std::string& p3, const std::string& p4)
      -> std::optional<std::string> {
    for (const auto& t : pts) {
      if (t == p1 || t == p2 || t == p3 || t == p4) continue;
      if (rank_n({p1, p2, t}) == 2 && rank_n({p3, p4, t}) == 2) return t;
    }
    return std::nullopt;
  };

  const int np = static_cast<int>(pts.size());
  for (int i1 = 0; i1 < np; ++i1) {
    for (int i2 = i1 + 1; i2 < np; ++i2) {
      for (int i3 = i2 + 1; i3 < np; ++i3) {
        const std::string &d = pts[i1], &e = pts[i2], &f = pts[i3];
        if (d == a || d == b || d == cc || e == a || e == b || e == cc || f == a || f == b || f == cc) continue;
        if (rank_n({d, e, f}) != 2) continue;
        if (rank_n({d, e, f, a}) != 3 || rank_n({d, e, f, b}) != 3 || rank_n({d, e, f, cc}) != 3) continue;
        const auto g = meet(e, a, f, b);
        const auto h = meet(d, a, f, cc);
        const auto i = meet(d, b, e, cc);
        if (!g || !h || !i) continue;
        if (rank_n({*g, *h, *i}) != 2) {
          throw Error("Pappus configuration fails in the unrelaxed contraction");
        }
        Certificate cert;
        cert.kind = Certificate::Kind::kPappusViolation;
        cert.minor = {relaxed->labels_of(x), {}};
        cert.points = {a, b, cc, d, e, f, *g, *h, *i};
        cert.claims = pappus_claims(cert.points);
        for (const auto& claim : cert.claims) {
          if (rank_relaxed(claim.set) != claim.rank) {
            throw Error("configuration found but a rank claim fails in the relaxed matroid");
          }
        }
        return cert;
      }
    }
  }
  throw Error("no Pappus configuration found (stage: triangle search)");
}

Certificate charconflict_certificate(const MatroidPtr& relaxed, Set c, std::optional<long long> q) {
  if (set_size(c) < 3) throw PreconditionError("relaxed set needs at least three elements");
  const Set x = pappus_contract_set(c);
  const long long order = q ? *q : infer_q(*simplify_epsilon(contraction(unrelaxed(relaxed, c), x)).si);
  if (order != 2) throw PreconditionError("characteristic-conflict certificates need q = 2");

  Certificate cert;
  cert.kind = Certificate::Kind::kCharConflict;
  const MatroidPtr fano = canonical_fano();
  const MatroidPtr non_fano = canonical_non_fano();

  // PG(2,2): contract an element outside C, then take a plane.
  bool found = false;
  for (int e : elements_of(relaxed->all() & ~c)) {
    const MatroidPtr con = contraction(relaxed, bit(e));
    if (con->rank() < 3) continue;
    for (Set plane : flats(*con, 3)) {
      Set keep = 0;
      for (const auto& l : con->labels_of(plane)) keep |= bit(relaxed->index(l));
      const MinorSpec spec = simple_minor_spec(relaxed, bit(e), keep);
      const MatroidPtr mn = minor(relaxed, spec);
      const Isomorphism iso = is_isomorphic(*mn, *fano);
      if (iso.isomorphic) {
        cert.fano_minor = spec;
        cert.fano_map = bijection_pairs(*mn, *fano, iso.bijection);
        found = true;
        break;
      }
    }
    if (found) break;
  }
  if (!found) throw Error("no PG(2,2) minor found");

  const MinorSpec spec = simple_minor_spec(relaxed, x, relaxed->all() & ~x);
  const MatroidPtr mn = minor(relaxed, spec);
  const Isomorphism iso = is_isomorphic(*mn, *non_fano);
  if (!iso.isomorphic) throw Error("contraction by |C| - 3 elements of C is not the non-Fano matroid");
  cert.non_fano_minor = spec;
  cert.non_fano_map = bijection_pairs(*mn, *non_fano, iso.bijection);
  return cert;
}

bool verify_certificate(const Certificate& cert, const MatroidPtr& m) {
  auto check_labels = [&](const Labels& ls) {
    for (const auto& l : ls) {
      if (!m->has(l)) throw PreconditionError("certificate references unknown label '" + l + "'");
    }
  };
  if (cert.kind == Certificate::Kind::kPappusViolation) {
    check_labels(cert.minor.contract);
    check_labels(cert.minor.remove);
    check_labels(Labels(cert.points.begin(), cert.points.end()));
    const Set x = m->set_of(cert.minor.contract);
    if (!is_independent(*m, x)) return false;
    if (cert.claims != pappus_claims(cert.points)) return false;
    const int rx = m->rank(x);
    for (const auto& claim : cert.claims) {
      if (m->rank(m->set_of(claim.set) | x) - rx != claim.rank) return false;
    }
    return true;
  }
  for (const auto* spec : {&cert.fano_minor, &cert.non_fano_minor}) {
    check_labels(spec->contract);
    check_labels(spec->remove);
  }
  for (const auto* map : {&cert.fano_map, &cert.non_fano_map}) {
    for (const auto& pr : *map) check_labels({pr.first});
  }
  if (!is_independent(*m, m->set_of(cert.fano_minor.contract)) ||
      !is_independent(*m, m->set_of(cert.non_fano_minor.contract))) {
    return false;
  }
  const MatroidPtr fano = canonical_fano();
  const MatroidPtr non_fano = canonical_non_fano();
  if (!bijection_matches(m, cert.fano_minor, cert.fano_map, fano)) return false;
  if (!bijection_matches(m, cert.non_fano_minor, cert.non_fano_map, non_fano)) return false;
  return count_bases(*minor(m, cert.fano_minor)) == 28 && count_bases(*minor(m, cert.non_fano_minor)) == 29;
}

}  // namespace mforge

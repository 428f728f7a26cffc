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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is exact.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "helpers.hpp"
#include "mforge/cli.hpp"
#include "mforge/connectivity.hpp"
#include "mforge/construct.hpp"
#include "mforge/geometry.hpp"
#include "mforge/io.hpp"
#include "mforge/subfield.hpp"
#include "mforge/witness.hpp"

using namespace mforge;

namespace {

// Collects failed checks for one criterion.
struct Checker {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

struct Cli {
  int code;
  std::string out;
};

Cli cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = dispatch(args, out, err);
  return {code, out.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = "acceptance_" + name;
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

Matrix with_column(const Matrix& a, const std::string& label, const std::vector<Element>& col) {
  Labels cols = a.col_labels();
  cols.push_back(label);
  Matrix out(a.field(), a.row_labels(), cols);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    out(r, a.cols()) = col[static_cast<std::size_t>(r)];
  }
  return out;
}

bool is_line(const Matroid& m, int k) { return m.size() == k && oracle_equal(m, UniformMatroid(2, m.ground())); }

std::vector<Set> sorted(std::vector<Set> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Rank function computed from the matrix by schoolbook elimination.
oracle::RankFn matrix_rank(const Matrix& a) {
  return [a](Set s) { return oracle::column_rank(a, s); };
}

void counterexample_q2(Checker& c) {
  const Cli gen = cli({"gen", "counterexample", "--n", "3", "--q", "2"});
  c.expect(gen.code == 0, "gen counterexample exit code");
  const std::string file = temp_file("m3_q2.json", gen.out);
  const MatroidPtr m = matroid_from_json(parse_json(gen.out, "gen"));
  const auto rel = std::dynamic_pointer_cast<const RelaxedMatroid>(m);
  c.expect(rel != nullptr, "relaxed matroid file");
  if (!rel) return;
  c.expect(m->size() == 12, "|E| = 12");
  c.expect(m->rank() == 4, "rank 4");
  c.expect(is_3connected(*m).three_connected, "3-connected");
  c.expect(longest_line(m).k == 4, "longest line 4");
  c.expect(oracle::longest_line(m->size(), testing::rank_fn(*m)) == 4, "naive longest line 4");
  const Cli lm = cli({"check", "line-minor", "--k", "5", file});
  c.expect(lm.code == 0 && parse_json(lm.out, "line-minor")["result"] == "absent", "no U_{2,5}-minor");
  int outside = 0;
  for (int e = 0; e < m->size(); ++e) {
    if (contains(rel->relaxed_set(), e)) continue;
    ++outside;
    const auto si = simplify_epsilon(contraction(m, bit(e))).si;
    c.expect(is_isomorphic(*si, *pg(3, 2)).isomorphic, "si(M'/" + m->ground()[e] + ") is PG(2,2)");
  }
  c.expect(outside == 8, "eight elements outside C");
  const Cli cert = cli({"certify", "nonrep", file});
  c.expect(cert.code == 0, "certify exit code");
  const Json cj = parse_json(cert.out, "certify");
  c.expect(cj["kind"] == "char-conflict", "characteristic-conflict certificate");
  const std::string cert_file = temp_file("m3_q2_cert.json", cert.out);
  const Cli ver = cli({"verify", cert_file, file});
  c.expect(ver.code == 0 && parse_json(ver.out, "verify")["valid"] == true, "certificate re-verified");
  c.expect(verify_certificate(certificate_from_json(cj), m), "certificate re-verified in process");
}

void counterexample_q3(Checker& c) {
  const Cli gen = cli({"gen", "counterexample", "--n", "3", "--q", "3"});
  c.expect(gen.code == 0, "gen counterexample exit code");
  const std::string file = temp_file("m3_q3.json", gen.out);
  const MatroidPtr m = matroid_from_json(parse_json(gen.out, "gen"));
  c.expect(m->size() == 31, "|E| = 31");
  c.expect(m->rank() == 4, "rank 4");
  c.expect(longest_line(m).k == 5, "longest line 5");
  const Cli cert = cli({"certify", "nonrep", file});
  c.expect(cert.code == 0, "certify exit code");
  const Certificate pc = certificate_from_json(parse_json(cert.out, "certify"));
  c.expect(pc.kind == Certificate::Kind::kPappusViolation, "Pappus-violation certificate");
  const auto n = minor(m, pc.minor);
  c.expect(n->rank(n->set_of(Labels{pc.points[0], pc.points[1], pc.points[2]})) == 3, "r({a,b,c}) = 3");
  const bool claim_abc = std::find(pc.claims.begin(), pc.claims.end(),
                                   RankClaim{{pc.points[0], pc.points[1], pc.points[2]}, 3}) != pc.claims.end();
  c.expect(claim_abc, "certificate claims r({a,b,c}) = 3");
  const Cli ver = cli({"verify", temp_file("m3_q3_cert.json", cert.out), file});
  c.expect(ver.code == 0, "certificate re-verified");
}

void relaxation(Checker& c) {
  const auto fano = pg(3, 2);
  const auto ce = counterexample(3, 2);
  const std::vector<std::pair<std::shared_ptr<const LinearMatroid>, Set>> cases{
      {fano, flats(*fano, 2).front()}, {ce.base, ce.circuit}};
  for (const auto& [base, circ] : cases) {
    const auto rel = relax(base, circ);
    std::vector<Set> expect = oracle::bases(base->size(), matrix_rank(base->matrix()));
    expect.push_back(circ);
    c.expect(sorted(bases(*rel)) == sorted(expect), "bases(relax) = bases(M) + C");
  }
}

void subfield_pg(Checker& c) {
  std::mt19937_64 rng(4);
  for (auto [n, q, p, k, count] : std::vector<std::tuple<int, long long, int, int, int>>{{3, 2, 2, 2, 100},
                                                                                         {3, 3, 3, 2, 50}}) {
    const FieldSpec big = FieldSpec::make(p, k);
    const Matrix base = testing::lift(pg(n, q)->matrix(), big);
    for (int t = 0; t < count; ++t) {
      const Matrix a = apply_projective(base, testing::random_invertible(big, n, rng),
                                        testing::random_scales(big, base.cols(), rng));
      c.expect(pg_subfield_verify(a, n, q), "transform " + std::to_string(t) + " over GF(" +
                                                std::to_string(big.order()) + ")");
    }
  }
}

void linking(Checker& c) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const long long q = trial % 2 == 0 ? 2 : 3;
    const int rows = std::uniform_int_distribution<int>(1, 5)(rng);
    const int cols = std::uniform_int_distribution<int>(2, 10)(rng);
    const Matrix a = testing::random_matrix(FieldSpec::of_order(q), rows, cols, rng);
    const LinearMatroid m(a);
    Set s = 0, t = 0;
    std::uniform_int_distribution<int> side(0, 2);
    for (int e = 0; e < cols; ++e) {
      const int k = side(rng);
      if (k == 0) s |= bit(e);
      if (k == 1) t |= bit(e);
    }
    const auto rank = matrix_rank(a);
    const int kmin = oracle::kappa_min(cols, rank, s, t);
    const int kmax = oracle::kappa_max(cols, rank, s, t);
    const std::string id = "trial " + std::to_string(trial);
    c.expect(kmin == kmax, id + ": min side equals max side");
    c.expect(kappa(m, s, t) == kmin, id + ": kappa");
    const Linking link = linking_set(m, s, t);
    c.expect(link.value == kmax, id + ": linking value");
    const int rz = rank(link.z);
    c.expect(rank(s) + rz == rank(s | link.z), id + ": Z skew to S");
    c.expect(rank(t) + rz == rank(t | link.z), id + ": Z skew to T");
    const int local = rank(s | link.z) + rank(t | link.z) - rank(s | t | link.z) - rz;
    c.expect(local == kmax, id + ": local connectivity in M/Z");
  }
}

void extensions(Checker& c) {
  std::mt19937_64 rng(6);
  for (auto [q, p] : std::vector<std::pair<long long, int>>{{2, 2}, {3, 3}}) {
    const FieldSpec big = FieldSpec::make(p, 2);
    const Matrix plane = testing::lift(pg(3, q)->matrix(), big);
    int done = 0;
    while (done < 50) {
      std::vector<Element> col(3);
      for (auto& v : col) v = testing::random_element(big, rng);
      const auto pm = std::make_shared<LinearMatroid>(with_column(plane, "e", col));
      if (pm->rank(bit(pm->index("e"))) == 0 || simplify_epsilon(pm).epsilon != pm->size()) continue;
      ++done;
      const LineWitness w = line_from_pg_extension(pm, "e", q);
      const int want = static_cast<int>(q * q + 1);
      c.expect(w.k == want, "k = q^2 + 1");
      const auto out = minor(pm, w.spec);
      c.expect(is_line(*out, want), "witness is U_{2,q^2+1}");
      c.expect(oracle::longest_line(out->size(), testing::rank_fn(*out)) == want, "naive longest line");
    }
  }
}

void scaled_decision(Checker& c) {
  std::mt19937_64 rng(7);
  for (auto [p, q] : std::vector<std::pair<int, long long>>{{2, 2}, {3, 3}}) {
    const FieldSpec f = FieldSpec::make(p, 2);
    const std::uint32_t o = f.order();
    auto check = [&](const Matrix& a) {
      const ScalingCertificate cert = scaled_subfield_check(a, q);
      c.expect(cert.scaled == oracle::scaled_exhaustive(a, q), "agreement over GF(" + std::to_string(o) + ")");
      c.expect(verify_scaling_certificate(a, q, cert), "certificate re-verifies");
    };
    for (std::uint32_t code = 0; code < o * o * o * o; ++code) {
      std::vector<std::vector<Element>> rows(2, std::vector<Element>(2));
      std::uint32_t v = code;
      for (auto& row : rows) {
        for (auto& e : row) {
          e = Element{v % o};
          v /= o;
        }
      }
      check(Matrix::from_rows(f, {"a", "b"}, rows));
    }
    for (int t = 0; t < 1000; ++t) check(testing::random_matrix(f, 3, 3, rng));
  }
}

void proof_replay(Checker& c) {
  const std::string dir = std::string(MFORGE_SOURCE_DIR) + "/tests/fixtures/";
  const MatroidPtr m = matroid_from_json(read_json_file(dir + "witness_rank5_gf4.json"));
  const Matrix a = matrix_from_json(read_json_file(dir + "witness_rank5_gf4_matrix.json"));
  const long long q = 2;
  const ExtractionResult res = extract_long_line(m, "x", std::nullopt, a, q);
  const WitnessTrace& t = res.trace;
  const auto out = minor(m, res.spec);
  c.expect(longest_line(out).k == 5 && is_line(*out, 5), "output is U_{2,5}");
  c.expect(t.distinct_colors <= q * q, "at most q^2 colors");
  std::set<std::uint32_t> colors;
  for (const auto& e : t.cocircuit) colors.insert(t.coloring.at(e));
  c.expect(static_cast<int>(colors.size()) == t.distinct_colors, "color count");

  c.expect(!t.border.empty(), "border recorded");
  if (!t.border.empty()) {
    const Matrix d(a.field(), t.border_rows, t.border_cols,
                   [&] {
                     std::vector<Element> v;
                     for (auto code : t.border) v.push_back(Element{code});
                     return v;
                   }());
    const Labels y_b(t.border_rows.begin() + 1, t.border_rows.end());
    const auto d1 = std::make_shared<LinearMatroid>(d.submatrix(y_b, t.monochromatic));
    c.expect(verify_geometry(*d1, {GeometryKind::kAffine, 4, 2}).isomorphic, "D1 is AG(3,2)");
    Labels keep = t.monochromatic;
    keep.push_back(t.f);
    keep.push_back(t.g);
    Labels rest;
    for (const auto& l : m->ground()) {
      if (std::find(keep.begin(), keep.end(), l) == keep.end() &&
          std::find(t.contracted.begin(), t.contracted.end(), l) == t.contracted.end()) {
        rest.push_back(l);
      }
    }
    c.expect(testing::matches_matrix(*minor(m, {t.contracted, rest}), d), "D represents (M'/K)|(Y u {f,g})");
  }
  c.expect(t.alpha.size() == t.alpha_prime.size() && !t.alpha.empty(), "alpha recorded");
  if (!t.alpha.empty()) {
    std::vector<std::vector<Element>> rows;
    for (std::size_t i = 0; i < t.alpha.size(); ++i) rows.push_back({Element{t.alpha[i]}, Element{t.alpha_prime[i]}});
    const Matrix pair = Matrix::from_rows(a.field(), {"alpha", "alphaPrime"}, rows);
    c.expect(oracle::column_rank(pair, 0b11) == 2, "alpha and alpha' not parallel");
  }
  c.expect(t.bad_lines <= 1, "at most one bad line");
}

void axioms(Checker& c) {
  std::mt19937_64 rng(9);
  const auto ce = counterexample(3, 2);
  const MatroidPtr lin = pg(4, 2);
  const std::vector<std::pair<std::string, MatroidPtr>> kinds{
      {"linear", lin},
      {"uniform", std::make_shared<UniformMatroid>(3, 9)},
      {"relaxed", ce.relaxed},
      {"minor", minor(ce.relaxed, {{"0001"}, {"1111"}})},
      {"dual", dual(ce.relaxed)},
  };
  for (const auto& [name, m] : kinds) {
    const AxiomReport rep = check_rank_axioms(*m, 10000, rng);
    c.expect(rep.violations == 0, name + ": " + rep.first_violation);
    c.expect(rep.checked >= 10000, name + ": sample count");
    const auto d = dual(m);
    std::uniform_int_distribution<Set> pick(0, m->all());
    for (int s = 0; s < 10000; ++s) {
      const Set x = pick(rng);
      c.expect(lambda(*m, x) == lambda(*d, x), name + ": lambda duality");
    }
  }
}

void growth(Checker& c) {
  for (long long q : {2, 3, 4}) {
    const Cli r = cli({"growth-table", "--q", std::to_string(q), "--maxrank", "4"});
    c.expect(r.code == 0, "growth-table exit code");
    const Json j = parse_json(r.out, "growth-table");
    long long power = 1;
    for (int k = 1; k <= 4; ++k) {
      power *= q;
      const long long expect = (power - 1) / (q - 1);
      c.expect(j["rows"][k - 1]["epsilon"] == expect, "epsilon(PG(" + std::to_string(k - 1) + "," +
                                                          std::to_string(q) + "))");
      if (expect <= kMaxGround) c.expect(simplify_epsilon(pg(k, q)).epsilon == expect, "in-process epsilon");
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Checker&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "counterexample family q=2 n=3", 60, counterexample_q2},
      {2, "counterexample family q=3 n=3", 600, counterexample_q3},
      {3, "relaxation basis identity", 10, relaxation},
      {4, "PG subfield representations", 60, subfield_pg},
      {5, "Tutte linking equality", 300, linking},
      {6, "long lines from extension points", 120, extensions},
      {7, "scaled-subfield decision", 120, scaled_decision},
      {8, "proof replay on the rank-5 fixture", 300, proof_replay},
      {9, "rank axioms and duality", 60, axioms},
      {10, "growth table", 10, growth},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) c.failures.push_back("runtime above " + std::to_string(cr.limit_seconds) + " s");
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.name << " ("
              << timing << ")";
    for (const auto& f : c.failures) std::cout << "\n    " << f;
    std::cout << std::endl;
    if (!c.failures.empty()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

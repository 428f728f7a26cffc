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

#include <numeric>
#include <random>
#include <thread>

#include "doctest.h"
#include "helpers.hpp"
#include "mforge/construct.hpp"
#include "mforge/connectivity.hpp"
#include "mforge/error.hpp"
#include "mforge/geometry.hpp"
#include "mforge/matroid.hpp"

using namespace mforge;

namespace {

MatroidPtr uniform(int r, int n) { return std::make_shared<const UniformMatroid>(r, n); }

MatroidPtr random_linear(long long q, int rows, int cols, std::mt19937_64& rng) {
  return std::make_shared<const LinearMatroid>(testing::random_matrix(FieldSpec::of_order(q), rows, cols, rng));
}

// Closed sets of rank r, by closing every subset.
std::set<Set> naive_flats(const Matroid& m, int r) {
  std::set<Set> out;
  for (Set s = 0; s <= m.all(); ++s) {
    if (m.rank(s) != r) continue;
    Set cl = s;
    for (int e = 0; e < m.size(); ++e) {
      if (m.rank(s | bit(e)) == r) cl |= bit(e);
    }
    out.insert(cl);
  }
  return out;
}

}  // namespace

TEST_CASE("minor") {
  const MatroidPtr fano = pg(3, 2);
  CHECK(oracle_equal(*minor(fano, {}), *fano));

  const MatroidPtr u34 = uniform(3, 4);
  const MatroidPtr m = minor(u34, {{"e0"}, {}});
  CHECK(m->size() == 3);
  CHECK(oracle_equal(*m, UniformMatroid(2, Labels{"e1", "e2", "e3"})));

  const MatroidPtr pg42 = pg(4, 2);
  const MatroidPtr con = minor(pg42, {{"0001"}, {}});
  CHECK(con->size() == 14);
  const Simplification si = simplify_epsilon(con);
  CHECK(si.epsilon == 7);
  CHECK(is_isomorphic(*si.si, *fano).isomorphic);

  CHECK_THROWS_AS(minor(fano, {{"nope"}, {}}), PreconditionError);
}

TEST_CASE("minor spec normalization") {
  const MatroidPtr fano = pg(3, 2);
  // {001, 010, 011} is a line: the greedy independent part is {001, 010}.
  const MinorSpec norm = normalize_minor_spec(*fano, {{"001", "010", "011"}, {"111"}});
  CHECK(norm.contract == Labels{"001", "010"});
  CHECK(norm.remove == Labels{"011", "111"});
  CHECK(oracle_equal(*minor(fano, {{"001", "010", "011"}, {"111"}}), *minor(fano, norm)));
}

TEST_CASE("minor rank formula and composition") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const MatroidPtr m = random_linear(i % 2 ? 3 : 2, 4, 10 + i % 3, rng);
    const Set c1 = rng() & m->all() & 0x0f;
    const Set d1 = rng() & m->all() & ~c1 & 0xf0;
    const MatroidPtr n1 = minor(m, {m->labels_of(c1), m->labels_of(d1)});
    const Set rest = n1->all();
    for (Set x = 0; x <= rest; ++x) {
      const Set xm = m->set_of(n1->labels_of(x));
      REQUIRE(n1->rank(x) == m->rank(xm | c1) - m->rank(c1));
    }
    const Set c2 = rng() & n1->all() & 0x3;
    const Set d2 = rng() & n1->all() & ~c2 & 0xc;
    const MatroidPtr n2 = minor(n1, {n1->labels_of(c2), n1->labels_of(d2)});
    MinorSpec composed{m->labels_of(c1 | m->set_of(n1->labels_of(c2))), m->labels_of(d1 | m->set_of(n1->labels_of(d2)))};
    CHECK(oracle_equal(*n2, *minor(m, composed)));
  }
}

TEST_CASE("simplify_epsilon") {
  const MatroidPtr fano = pg(3, 2);
  const Simplification s = simplify_epsilon(fano);
  CHECK(s.epsilon == 7);
  CHECK(oracle_equal(*s.si, *fano));
  CHECK(simplify_epsilon(pg(4, 2)).epsilon == 15);

  const FieldSpec gf3 = FieldSpec::make(3, 1);
  const Matrix a = Matrix::from_rows(gf3, {"a", "b", "c", "d", "z"},
                                     {{Element{1}, Element{0}, Element{2}, Element{1}, Element{0}},
                                      {Element{0}, Element{1}, Element{0}, Element{1}, Element{0}}});
  const Simplification t = simplify_epsilon(std::make_shared<const LinearMatroid>(a));
  // c = 2a is parallel to a; z is a loop.
  CHECK(t.epsilon == 3);
  CHECK(t.si->ground() == Labels{"a", "b", "d"});
  CHECK(t.representative.at("c") == "a");
  CHECK(t.representative.count("z") == 0);
}

TEST_CASE("flats") {
  const MatroidPtr fano = pg(3, 2);
  const auto lines = flats(*fano, 2);
  CHECK(lines.size() == 7);
  for (Set l : lines) {
    CHECK(set_size(l) == 3);
    CHECK(closure(*fano, l) == l);
  }
  CHECK(std::is_sorted(lines.begin(), lines.end(), lex_less));
  CHECK(flats(*fano, 3) == std::vector<Set>{fano->all()});
  const auto points = flats(*uniform(2, 4), 1);
  CHECK(points == std::vector<Set>{bit(0), bit(1), bit(2), bit(3)});

  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const MatroidPtr m = random_linear(3, 3, 8, rng);
    for (int r = 0; r <= m->rank(); ++r) {
      const auto got = flats(*m, r);
      CHECK(std::set<Set>(got.begin(), got.end()) == naive_flats(*m, r));
      CHECK(got.size() == naive_flats(*m, r).size());
    }
  }
}

TEST_CASE("dual") {
  const MatroidPtr u24 = uniform(2, 4);
  CHECK(oracle_equal(*dual(u24), *u24));
  const MatroidPtr fano = pg(3, 2);
  CHECK(oracle_equal(*dual(dual(fano)), *fano));
  const MatroidPtr d = dual(fano);
  for (Set x = 0; x <= fano->all(); ++x) {
    CHECK(d->rank(x) == set_size(x) + fano->rank(fano->all() & ~x) - fano->rank());
  }
  // The complement of a line of PG(2,2) is a circuit of the dual.
  for (Set h : flats(*fano, 2)) {
    const Set c = fano->all() & ~h;
    CHECK(d->rank(c) == set_size(c) - 1);
    for_each_element(c, [&](int e) { CHECK(d->rank(c & ~bit(e)) == set_size(c) - 1); });
  }
}

TEST_CASE("lambda is the same in M and its dual") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    const MatroidPtr m = random_linear(i % 2 ? 2 : 5, 3, 9, rng);
    const MatroidPtr d = dual(m);
    for (int j = 0; j < 50; ++j) {
      const Set x = rng() & m->all();
      CHECK(lambda(*m, x) == lambda(*d, x));
    }
  }
}

TEST_CASE("longest_line") {
  CHECK(longest_line(pg(3, 2)).k == 3);
  CHECK(longest_line(uniform(2, 6)).k == 6);
  const Counterexample ce = counterexample(3, 2);
  const LongestLine ll = longest_line(ce.relaxed);
  CHECK(ll.k == 4);
  const MatroidPtr w = minor(ce.relaxed, ll.witness);
  CHECK(oracle_equal(*w, UniformMatroid(2, w->ground())));
  CHECK_THROWS_AS(longest_line(uniform(1, 3)), PreconditionError);
}

TEST_CASE("longest_line agrees with the naive search") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const long long q = i % 3 == 0 ? 4 : (i % 3 == 1 ? 3 : 2);
    const int rows = 2 + static_cast<int>(rng() % 3);
    const MatroidPtr m = random_linear(q, rows, 6 + static_cast<int>(rng() % 5), rng);
    if (m->rank() < 2) continue;
    const LongestLine ll = longest_line(m);
    CHECK(ll.k == oracle::longest_line(m->size(), testing::rank_fn(*m)));
    const MatroidPtr w = minor(m, ll.witness);
    CHECK(oracle_equal(*w, UniformMatroid(2, w->ground())));
  }
}

TEST_CASE("is_isomorphic") {
  const MatroidPtr fano = pg(3, 2);
  const Isomorphism self = is_isomorphic(*fano, *fano);
  CHECK(self.isomorphic);
  CHECK(check_isomorphism(*fano, *fano, self.bijection));
  std::vector<int> identity(7);
  std::iota(identity.begin(), identity.end(), 0);
  CHECK(self.bijection == identity);

  CHECK_FALSE(is_isomorphic(*fano, *canonical_non_fano()).isomorphic);
  CHECK(count_bases(*fano) == 28);
  CHECK(count_bases(*canonical_non_fano()) == 29);

  const MatroidPtr ag42 = ag(4, 2);
  for (int e = 0; e < ag42->size(); ++e) {
    const auto si = simplify_epsilon(contraction(ag42, bit(e))).si;
    const Isomorphism iso = is_isomorphic(*si, *fano);
    CHECK(iso.isomorphic);
    CHECK(check_isomorphism(*si, *fano, iso.bijection));
  }
  CHECK_THROWS_AS(is_isomorphic(*fano, *fano, 5), BoundExceeded);
}

TEST_CASE("isomorphism survives relabeling by a random permutation") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 15; ++i) {
    const Matrix a = testing::random_matrix(FieldSpec::of_order(3), 3, 8, rng);
    std::vector<int> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const LinearMatroid m(a);
    const LinearMatroid n(permute_columns(a, perm));
    const Isomorphism iso = is_isomorphic(m, n);
    CHECK(iso.isomorphic);
    CHECK(check_isomorphism(m, n, iso.bijection));
  }
}

TEST_CASE("bases") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    const MatroidPtr m = random_linear(2, 3, 8, rng);
    const auto got = bases(*m);
    const auto expect = oracle::bases(m->size(), testing::rank_fn(*m));
    CHECK(std::set<Set>(got.begin(), got.end()) == std::set<Set>(expect.begin(), expect.end()));
    CHECK(got.size() == expect.size());
    CHECK(std::is_sorted(got.begin(), got.end(), lex_less));
    CHECK(count_bases(*m) == static_cast<long long>(got.size()));
  }
}

TEST_CASE("rank axioms hold for every realization") {
  std::mt19937_64 rng(99);
  const Counterexample ce = counterexample(3, 2);
  const MatroidPtr lin = random_linear(4, 4, 12, rng);
  const std::vector<MatroidPtr> ms = {lin, ce.relaxed, minor(ce.relaxed, {{"0001"}, {"1111"}}), dual(lin),
                                      uniform(3, 7)};
  for (const auto& m : ms) {
    const AxiomReport r = check_rank_axioms(*m, 2000, rng);
    CHECK(r.checked > 0);
    CHECK(r.violations == 0);
  }
}

TEST_CASE("check_rank_axioms catches a broken oracle") {
  class Broken : public Matroid {
   public:
    Broken() : Matroid(Labels{"a", "b", "c"}) {}
    std::string kind() const override { return "broken"; }

   protected:
    int compute_rank(Set x) const override { return x == 7 ? 1 : set_size(x); }
  };
  std::mt19937_64 rng(1);
  CHECK(check_rank_axioms(Broken(), 500, rng).violations > 0);
}

TEST_CASE("the rank memo is safe under concurrent queries") {
  std::mt19937_64 rng(12);
  const Matrix a = testing::random_matrix(FieldSpec::of_order(4), 4, 14, rng);
  const auto shared = std::make_shared<const LinearMatroid>(a);
  const LinearMatroid fresh(a);
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (Set s = static_cast<Set>(t); s <= shared->all(); s += 4) {
        if (shared->rank(s) != oracle::column_rank(a, s)) ++mismatches[static_cast<std::size_t>(t)];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int v : mismatches) CHECK(v == 0);
  for (Set s = 0; s <= fresh.all(); s += 97) CHECK(fresh.rank(s) == shared->rank(s));
}

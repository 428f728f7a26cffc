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

#include "mforge/matroid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mforge/error.hpp"

namespace mforge {

namespace {

constexpr std::size_t kCacheLimit = std::size_t{1} << 20;

Labels labels_in_order(const Matroid& m, Set s) { return m.labels_of(s); }

}  // namespace

Matroid::Matroid(Labels ground) : ground_(std::move(ground)) {
  if (ground_.size() > static_cast<std::size_t>(kMaxGround)) {
    throw BoundExceeded("ground sets are limited to 64 elements");
  }
  for (std::size_t i = 0; i < ground_.size(); ++i) {
    if (!index_.emplace(ground_[i], static_cast<int>(i)).second) {
      throw PreconditionError("duplicate ground label '" + ground_[i] + "'");
    }
  }
}

int Matroid::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw PreconditionError("label '" + label + "' is not in the ground set");
  return it->second;
}

Set Matroid::set_of(std::span<const std::string> labels) const {
  Set s = 0;
  for (const auto& l : labels) s |= bit(index(l));
  return s;
}

Labels Matroid::labels_of(Set s) const {
  Labels out;
  for_each_element(s, [&](int i) { out.push_back(ground_[i]); });
  return out;
}

int Matroid::rank(Set x) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
  }
  const int r = compute_rank(x);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (cache_.size() >= kCacheLimit) cache_.clear();
  cache_.emplace(x, r);
  return r;
}

LinearMatroid::LinearMatroid(Matrix matrix) : Matroid(matrix.col_labels()), matrix_(std::move(matrix)) {}

int LinearMatroid::compute_rank(Set x) const {
  int cols[kMaxGround];
  int n = 0;
  for_each_element(x, [&](int i) { cols[n++] = i; });
  return column_rank(matrix_, std::span<const int>(cols, n));
}

UniformMatroid::UniformMatroid(int r, int n) : UniformMatroid(r, [n] {
  Labels l;
  for (int i = 0; i < n; ++i) l.push_back("e" + std::to_string(i));
  return l;
}()) {}

UniformMatroid::UniformMatroid(int r, Labels ground) : Matroid(std::move(ground)), r_(r) {
  if (r < 0 || r > size()) throw PreconditionError("uniform matroid needs 0 <= r <= n");
}

MinorMatroid::MinorMatroid(MatroidPtr base, Set contract, Set remove)
    : Matroid(base->labels_of(base->all() & ~(contract | remove))),
      base_(std::move(base)),
      contract_(contract),
      remove_(remove) {
  if ((contract & remove) != 0) throw PreconditionError("contract and delete sets overlap");
  contract_rank_ = base_->rank(contract_);
  for_each_element(base_->all() & ~(contract_ | remove_), [&](int i) { to_base_.push_back(i); });
}

int MinorMatroid::compute_rank(Set x) const {
  Set lifted = contract_;
  for_each_element(x, [&](int i) { lifted |= bit(to_base_[i]); });
  return base_->rank(lifted) - contract_rank_;
}

MinorSpec MinorMatroid::spec() const { return {base_->labels_of(contract_), base_->labels_of(remove_)}; }

DualMatroid::DualMatroid(MatroidPtr base) : Matroid(base->ground()), base_(std::move(base)) {
  base_rank_ = base_->rank();
}

int DualMatroid::compute_rank(Set x) const { return set_size(x) + base_->rank(all() & ~x) - base_rank_; }

MinorSpec normalize_minor_spec(const Matroid& m, const MinorSpec& spec) {
  const Set c = m.set_of(spec.contract);
  const Set d = m.set_of(spec.remove);
  if ((c & d) != 0) throw PreconditionError("contract and delete sets overlap");
  const Set kept = max_independent_subset(m, c);
  return {m.labels_of(kept), m.labels_of(d | (c & ~kept))};
}

MatroidPtr minor(const MatroidPtr& m, const MinorSpec& spec) {
  const MinorSpec n = normalize_minor_spec(*m, spec);
  Set c = m->set_of(n.contract);
  Set d = m->set_of(n.remove);
  if (auto mm = std::dynamic_pointer_cast<const MinorMatroid>(m)) {
    const Set free = mm->base()->all() & ~(mm->contract_set() | mm->remove_set());
    const auto idx = elements_of(free);
    Set bc = mm->contract_set(), bd = mm->remove_set();
    for_each_element(c, [&](int i) { bc |= bit(idx[i]); });
    for_each_element(d, [&](int i) { bd |= bit(idx[i]); });
    return std::make_shared<MinorMatroid>(mm->base(), bc, bd);
  }
  return std::make_shared<MinorMatroid>(m, c, d);
}

MatroidPtr contraction(const MatroidPtr& m, Set c) { return minor(m, {m->labels_of(c), {}}); }
MatroidPtr deletion(const MatroidPtr& m, Set d) { return minor(m, {{}, m->labels_of(d)}); }
MatroidPtr restrict_to(const MatroidPtr& m, Set keep) { return deletion(m, m->all() & ~keep); }

Set closure(const Matroid& m, Set x) {
  const int r = m.rank(x);
  Set cl = x;
  for_each_element(m.all() & ~x, [&](int e) {
    if (m.rank(x | bit(e)) == r) cl |= bit(e);
  });
  return cl;
}

bool is_flat(const Matroid& m, Set x) { return closure(m, x) == x; }

bool is_independent(const Matroid& m, Set x) { return m.rank(x) == set_size(x); }

Set max_independent_subset(const Matroid& m, Set x) {
  Set s = 0;
  for_each_element(x, [&](int e) {
    if (m.rank(s | bit(e)) > set_size(s)) s |= bit(e);
  });
  return s;
}

Set extend_to_basis(const Matroid& m, Set independent) {
  Set s = independent;
  for_each_element(m.all() & ~independent, [&](int e) {
    if (m.rank(s | bit(e)) > m.rank(s)) s |= bit(e);
  });
  return s;
}

Simplification simplify_epsilon(const MatroidPtr& m) {
  Simplification out;
  Set reps = 0;
  std::vector<int> rep_of(m->size(), -1);
  for (int e = 0; e < m->size(); ++e) {
    if (m->rank(bit(e)) == 0) continue;
    for (int f = 0; f < e; ++f) {
      if (rep_of[f] == f && m->rank(bit(e) | bit(f)) == 1) {
        rep_of[e] = f;
        break;
      }
    }
    if (rep_of[e] < 0) {
      rep_of[e] = e;
      reps |= bit(e);
    }
    out.representative[m->ground()[e]] = m->ground()[rep_of[e]];
  }
  out.epsilon = set_size(reps);
  out.si = reps == m->all() ? m : restrict_to(m, reps);
  return out;
}

std::vector<Set> flats(const Matroid& m, int r) {
  if (r < 0 || r > m.rank()) throw PreconditionError("flat rank out of range");
  std::vector<Set> level{closure(m, 0)};
  for (int j = 0; j < r; ++j) {
    std::set<Set> next;
    for (Set f : level) {
      Set done = f;
      for (int e = 0; e < m.size(); ++e) {
        if (contains(done, e)) continue;
        const Set g = closure(m, f | bit(e));
        done |= g;
        next.insert(g);
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::sort(level.begin(), level.end(), lex_less);
  return level;
}

MatroidPtr dual(const MatroidPtr& m) {
  if (auto d = std::dynamic_pointer_cast<const DualMatroid>(m)) return d->base();
  return std::make_shared<DualMatroid>(m);
}

LongestLine longest_line(const MatroidPtr& m) {
  const int r = m->rank();
  if (r < 2) throw PreconditionError("longest_line needs rank at least 2");
  LongestLine best;
  Set best_flat = 0;
  Set best_reps = 0;
  for (Set f : flats(*m, r - 2)) {
    Set done = f;
    Set reps = 0;
    int k = 0;
    for (int e = 0; e < m->size(); ++e) {
      if (contains(done, e)) continue;
      done |= closure(*m, f | bit(e));
      reps |= bit(e);
      ++k;
    }
    if (k > best.k) {
      best.k = k;
      best_flat = f;
      best_reps = reps;
    }
  }
  const Set c = max_independent_subset(*m, best_flat);
  best.witness = {labels_in_order(*m, c), labels_in_order(*m, m->all() & ~(c | best_reps))};
  return best;
}

std::vector<Set> bases(const Matroid& m) {
  std::vector<Set> out;
  const int r = m.rank();
  const int n = m.size();
  if (r == 0) return {0};
  // Combinations of size r in lexicographic order.
  std::vector<int> comb(r);
  for (int i = 0; i < r; ++i) comb[i] = i;
  while (true) {
    Set s = 0;
    for (int i : comb) s |= bit(i);
    if (m.rank(s) == r) out.push_back(s);
    int i = r - 1;
    while (i >= 0 && comb[i] == n - r + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

long long count_bases(const Matroid& m) { return static_cast<long long>(bases(m).size()); }

bool oracle_equal(const Matroid& a, const Matroid& b) {
  if (a.ground() != b.ground()) return false;
  if (a.size() > 24) throw BoundExceeded("exhaustive oracle comparison is limited to 24 elements");
  bool equal = true;
  for_each_subset(a.all(), [&](Set s) {
    if (equal && a.rank(s) != b.rank(s)) equal = false;
  });
  return equal;
}

namespace {

Set map_set(Set s, std::span<const int> bij) {
  Set out = 0;
  for_each_element(s, [&](int i) { out |= bit(bij[i]); });
  return out;
}

struct ElementSignature {
  int rank = 0;
  int parallel = 0;
  std::vector<int> line_sizes;
  friend auto operator<=>(const ElementSignature&, const ElementSignature&) = default;
};

std::vector<ElementSignature> signatures(const Matroid& m) {
  std::vector<ElementSignature> out(m.size());
  for (int e = 0; e < m.size(); ++e) {
    auto& sig = out[e];
    sig.rank = m.rank(bit(e));
    if (sig.rank == 0) continue;
    const Set point = closure(m, bit(e));
    sig.parallel = set_size(point) - 1 - set_size(closure(m, 0));
    Set seen = point;
    for (int f = 0; f < m.size(); ++f) {
      if (contains(seen, f)) continue;
      const Set line = closure(m, bit(e) | bit(f));
      seen |= line;
      sig.line_sizes.push_back(set_size(line));
    }
    std::sort(sig.line_sizes.begin(), sig.line_sizes.end());
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Matroid& m, const Matroid& n) : m_(m), n_(n), sig_m_(signatures(m)), sig_n_(signatures(n)) {
    const Set basis = extend_to_basis(m, 0);
    for_each_element(basis, [&](int i) { order_.push_back(i); });
    for_each_element(m.all() & ~basis, [&](int i) { order_.push_back(i); });
    depth_ = std::min(m.rank(), m.size() <= 20 ? 4 : 3);
    bij_.assign(m.size(), -1);
  }

  bool prefilter() const {
    if (m_.size() != n_.size() || m_.rank() != n_.rank()) return false;
    auto a = sig_m_, b = sig_n_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool run() { return extend(0, 0); }
  const std::vector<int>& bijection() const { return bij_; }

 private:
  // Checks every subset S of the assigned prefix with |S| < depth_.
  bool consistent(int step, int v, int w, Set m_acc, Set n_acc, int size, int start) {
    if (m_.rank(m_acc | bit(v)) != n_.rank(n_acc | bit(w))) return false;
    if (size + 1 >= depth_) return true;
    for (int j = start; j < step; ++j) {
      const int u = order_[j];
      if (!consistent(step, v, w, m_acc | bit(u), n_acc | bit(bij_[u]), size + 1, j + 1)) return false;
    }
    return true;
  }

  bool extend(int step, Set used) {
    if (step == m_.size()) return check_isomorphism(m_, n_, bij_);
    const int v = order_[step];
    for (int w = 0; w < n_.size(); ++w) {
      if (contains(used, w) || sig_m_[v] != sig_n_[w]) continue;
      if (!consistent(step, v, w, 0, 0, 0, 0)) continue;
      bij_[v] = w;
      if (extend(step + 1, used | bit(w))) return true;
      bij_[v] = -1;
    }
    return false;
  }

  const Matroid& m_;
  const Matroid& n_;
  std::vector<ElementSignature> sig_m_, sig_n_;
  std::vector<int> order_;
  std::vector<int> bij_;
  int depth_ = 3;
};

}  // namespace

bool check_isomorphism(const Matroid& m, const Matroid& n, std::span<const int> bijection) {
  if (m.size() != n.size() || static_cast<int>(bijection.size()) != m.size()) return false;
  Set image = 0;
  for (int w : bijection) {
    if (w < 0 || w >= n.size() || contains(image, w)) return false;
    image |= bit(w);
  }
  if (m.rank() != n.rank()) return false;
  for (int j = 0; j <= m.rank(); ++j) {
    std::vector<Set> fm;
    for (Set f : flats(m, j)) fm.push_back(map_set(f, bijection));
    std::vector<Set> fn = flats(n, j);
    std::sort(fm.begin(), fm.end());
    std::sort(fn.begin(), fn.end());
    if (fm != fn) return false;
  }
  return true;
}

Isomorphism is_isomorphic(const Matroid& m, const Matroid& n, int bound) {
  if (m.size() > bound || n.size() > bound) {
    throw BoundExceeded("isomorphism test limited to " + std::to_string(bound) + " elements");
  }
  IsoSearch search(m, n);
  if (!search.prefilter()) return {};
  if (!search.run()) return {};
  return {true, search.bijection()};
}

AxiomReport check_rank_axioms(const Matroid& m, int samples, std::mt19937_64& rng) {
  AxiomReport rep;
  auto fail = [&](const std::string& what, Set x, Set y) {
    ++rep.violations;
    if (rep.first_violation.empty()) {
      std::ostringstream os;
      os << what << " at X=" << x << " Y=" << y;
      rep.first_violation = os.str();
    }
  };
  if (m.rank(0) != 0) fail("normalization", 0, 0);
  const Set all = m.all();
  for (int s = 0; s < samples; ++s) {
    const Set x = rng() & all, y = rng() & all;
    const int rx = m.rank(x), ry = m.rank(y);
    ++rep.checked;
    if (rx < 0 || rx > set_size(x)) fail("bounded by size", x, y);
    if (m.rank(x | y) + m.rank(x & y) > rx + ry) fail("submodularity", x, y);
    if (m.rank(x & y) > rx || rx > m.rank(x | y)) fail("monotonicity", x, y);
    if (m.size() > 0) {
      const int e = static_cast<int>(rng() % static_cast<std::uint64_t>(m.size()));
      const int rxe = m.rank(x | bit(e));
      if (rxe < rx || rxe > rx + 1) fail("unit increase", x, bit(e));
    }
  }
  return rep;
}

}  // namespace mforge

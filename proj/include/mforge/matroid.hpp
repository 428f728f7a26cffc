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

#ifndef MFORGE_MATROID_HPP_
#define MFORGE_MATROID_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mforge/bits.hpp"
#include "mforge/matrix.hpp"

namespace mforge {

// A matroid given by its rank oracle on a labeled ground set of at most 64
// elements. Element i is bit i of a Set; the ground order is the order used
// for every deterministic tie-break.
class Matroid {
 public:
  explicit Matroid(Labels ground);
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  const Labels& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Set all() const { return full_set(size()); }

  int index(const std::string& label) const;
  bool has(const std::string& label) const { return index_.count(label) > 0; }
  Set set_of(std::span<const std::string> labels) const;
  Labels labels_of(Set s) const;

  // Memoized rank.
  int rank(Set x) const;
  int rank() const { return rank(all()); }

  // "linear", "relaxed", "minor", "dual" or "uniform".
  virtual std::string kind() const = 0;

 protected:
  virtual int compute_rank(Set x) const = 0;

 private:
  Labels ground_;
  std::map<std::string, int> index_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Set, int> cache_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

// The column matroid of a matrix.
class LinearMatroid : public Matroid {
 public:
  explicit LinearMatroid(Matrix matrix);
  const Matrix& matrix() const { return matrix_; }
  std::string kind() const override { return "linear"; }

 protected:
  int compute_rank(Set x) const override;

 private:
  Matrix matrix_;
};

// U_{r,n}; labels default to e0 .. e{n-1}.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int r, int n);
  UniformMatroid(int r, Labels ground);
  std::string kind() const override { return "uniform"; }

 protected:
  int compute_rank(Set x) const override { return std::min(set_size(x), r_); }

 private:
  int r_;
};

// Contract C, delete D, in the normalized form with C independent.
struct MinorSpec {
  Labels contract;
  Labels remove;

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;
};

// M / C \ D. Construct through minor().
class MinorMatroid : public Matroid {
 public:
  MinorMatroid(MatroidPtr base, Set contract, Set remove);
  const MatroidPtr& base() const { return base_; }
  Set contract_set() const { return contract_; }
  Set remove_set() const { return remove_; }
  std::string kind() const override { return "minor"; }
  // Spec relative to the base, labels in ground order.
  MinorSpec spec() const;

 protected:
  int compute_rank(Set x) const override;

 private:
  MatroidPtr base_;
  Set contract_;
  Set remove_;
  int contract_rank_;
  std::vector<int> to_base_;
};

class DualMatroid : public Matroid {
 public:
  explicit DualMatroid(MatroidPtr base);
  const MatroidPtr& base() const { return base_; }
  std::string kind() const override { return "dual"; }

 protected:
  int compute_rank(Set x) const override;

 private:
  MatroidPtr base_;
  int base_rank_;
};

// Replaces the contract set by its greedy maximal independent subset (ground
// order) and moves the dropped elements to the delete set.
MinorSpec normalize_minor_spec(const Matroid& m, const MinorSpec& spec);

// The minor M / C \ D after normalization. Minors of minors are flattened onto
// the original base.
MatroidPtr minor(const MatroidPtr& m, const MinorSpec& spec);
MatroidPtr contraction(const MatroidPtr& m, Set c);
MatroidPtr deletion(const MatroidPtr& m, Set d);
MatroidPtr restrict_to(const MatroidPtr& m, Set keep);

Set closure(const Matroid& m, Set x);
bool is_flat(const Matroid& m, Set x);
bool is_independent(const Matroid& m, Set x);
// Greedy maximal independent subset of x in ground order.
Set max_independent_subset(const Matroid& m, Set x);
// Greedy extension of an independent set to a basis, in ground order.
Set extend_to_basis(const Matroid& m, Set independent);

struct Simplification {
  MatroidPtr si;
  // Every non-loop label mapped to its representative (least class member).
  std::map<std::string, std::string> representative;
  int epsilon = 0;
};

Simplification simplify_epsilon(const MatroidPtr& m);

// All flats of rank r sorted lexicographically.
std::vector<Set> flats(const Matroid& m, int r);

MatroidPtr dual(const MatroidPtr& m);

struct LongestLine {
  int k = 0;
  // A minor that is exactly U_{2,k}.
  MinorSpec witness;
};

// Largest k such that M has a U_{2,k}-minor. Requires r(M) >= 2.
LongestLine longest_line(const MatroidPtr& m);

struct Isomorphism {
  bool isomorphic = false;
  // bijection[i] is the element of N matched with element i of M.
  std::vector<int> bijection;
};

// Exact backtracking search; the returned bijection maps the flats of M onto
// the flats of N rank by rank. Throws BoundExceeded above `bound` elements.
Isomorphism is_isomorphic(const Matroid& m, const Matroid& n, int bound = kMaxGround);

// True iff the bijection preserves the rank of every flat in both directions.
bool check_isomorphism(const Matroid& m, const Matroid& n, std::span<const int> bijection);

// All bases, in lexicographic order.
std::vector<Set> bases(const Matroid& m);
long long count_bases(const Matroid& m);

// Same labels and same rank on every subset. Exhaustive up to 24 elements.
bool oracle_equal(const Matroid& a, const Matroid& b);

struct AxiomReport {
  long long checked = 0;
  long long violations = 0;
  std::string first_violation;
};

// Samples subset pairs and checks normalization, monotonicity, unit increase
// and submodularity.
AxiomReport check_rank_axioms(const Matroid& m, int samples, std::mt19937_64& rng);

}  // namespace mforge

#endif  // MFORGE_MATROID_HPP_

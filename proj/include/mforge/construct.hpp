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

#ifndef MFORGE_CONSTRUCT_HPP_
#define MFORGE_CONSTRUCT_HPP_

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mforge/error.hpp"
#include "mforge/matroid.hpp"

namespace mforge {

// The matroid obtained by declaring a circuit-hyperplane C of the base a
// basis: r'(C) = r(C) + 1, every other rank unchanged.
class RelaxedMatroid : public Matroid {
 public:
  // Validates that C is a circuit-hyperplane; see relax().
  RelaxedMatroid(MatroidPtr base, Set c);
  const MatroidPtr& base() const { return base_; }
  Set relaxed_set() const { return c_; }
  std::string kind() const override { return "relaxed"; }

 protected:
  int compute_rank(Set x) const override { return base_->rank(x) + (x == c_ ? 1 : 0); }

 private:
  MatroidPtr base_;
  Set c_;
};

// Raised by relax(); `witness` is a subset exhibiting the failure.
class RelaxError : public PreconditionError {
 public:
  RelaxError(const std::string& what, Labels witness) : PreconditionError(what), witness(std::move(witness)) {}
  Labels witness;
};

std::shared_ptr<const RelaxedMatroid> relax(const MatroidPtr& m, Set c);

// PG(n, q) with the points of a hyperplane H deleted except for a circuit C
// of size n + 1 inside H, together with its relaxation at C.
struct Counterexample {
  int n = 0;
  long long q = 0;
  std::shared_ptr<const LinearMatroid> base;
  std::shared_ptr<const RelaxedMatroid> relaxed;
  Set circuit = 0;
};

// H is {first coordinate = 0}; C is the n unit points of H plus their sum.
Counterexample counterexample(int n, long long q);

struct RankClaim {
  Labels set;
  int rank = 0;
  friend bool operator==(const RankClaim&, const RankClaim&) = default;
};

// Letters a..i of the Pappus configuration.
using PappusPoints = std::array<std::string, 9>;

// Machine-checkable evidence that a matroid is not representable.
struct Certificate {
  enum class Kind { kPappusViolation, kCharConflict };
  Kind kind = Kind::kPappusViolation;

  // Pappus violation: ranks measured in M / contract.
  MinorSpec minor;
  PappusPoints points;
  std::vector<RankClaim> claims;

  // Characteristic conflict: a PG(2,2) minor and a non-Fano minor, each with
  // a label bijection (minor label, canonical label) onto the canonical
  // instances built by canonical_fano() and canonical_non_fano().
  MinorSpec fano_minor;
  std::vector<std::pair<std::string, std::string>> fano_map;
  MinorSpec non_fano_minor;
  std::vector<std::pair<std::string, std::string>> non_fano_map;
};

// The claims a Pappus violation must satisfy for the given points.
std::vector<RankClaim> pappus_claims(const PappusPoints& p);

MatroidPtr canonical_fano();
// PG(2,2) relaxed at its first line.
MatroidPtr canonical_non_fano();

// Contracts |C| - 3 elements of C, then searches for the Pappus configuration
// around the relaxed triple. Throws PreconditionError for q = 2 inputs, where
// charconflict_certificate() applies; `q` is inferred from line lengths when
// not given.
Certificate pappus_certificate(const MatroidPtr& relaxed, Set c, std::optional<long long> q = std::nullopt);

// q = 2 only: a PG(2,2) minor (characteristic 2 forced) plus a non-Fano minor
// (characteristic 2 excluded).
Certificate charconflict_certificate(const MatroidPtr& relaxed, Set c, std::optional<long long> q = std::nullopt);

// Recomputes every claim against the oracle of M without searching. Throws
// PreconditionError for labels not in M.
bool verify_certificate(const Certificate& cert, const MatroidPtr& m);

}  // namespace mforge

#endif  // MFORGE_CONSTRUCT_HPP_

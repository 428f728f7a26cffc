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

#ifndef MFORGE_FIELD_HPP_
#define MFORGE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mforge {

// An element of some GF(p^k), stored as its base-p integer encoding
// sum c_i p^i of the coefficient vector (c_0, ..., c_{k-1}).
struct Element {
  std::uint32_t code = 0;

  bool is_zero() const { return code == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

bool is_prime(int n);

// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(long long q);

// An exact finite field GF(p^k) = GF(p)[x] / (modulus). Cheap to copy: all
// copies share one immutable table set.
class FieldSpec {
 public:
  // The field of order p^k whose modulus is the lexicographically least monic
  // irreducible polynomial, comparing ascending coefficient tuples.
  static FieldSpec make(int p, int k);
  // The field of order q (a prime power), built as make(p, k).
  static FieldSpec of_order(long long q);

  // Uses the given monic modulus (ascending coefficients, length k + 1).
  FieldSpec(int p, std::vector<int> modulus);

  int characteristic() const;
  int degree() const;
  std::uint32_t order() const;
  const std::vector<int>& modulus() const;

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  // The class of x.
  Element generator() const;
  // The primitive element used for discrete logs.
  Element primitive() const;

  bool contains(Element a) const { return a.code < order(); }
  Element element(std::uint32_t code) const;
  // Image of an integer under Z -> GF(p) -> GF(p^k).
  Element from_int(long long v) const;
  std::vector<int> coefficients(Element a) const;
  Element from_coefficients(std::span<const int> coeffs) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  // Throws PreconditionError on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  // Discrete log base primitive(); a must be nonzero.
  std::uint32_t log(Element a) const;
  Element exp(std::uint64_t e) const;

  // Every element, ordered lexicographically by ascending coefficient tuple.
  std::vector<Element> lex_elements() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Tables;
  explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

// An element bundled with its field; arithmetic across different fields
// throws PreconditionError.
class FieldElement {
 public:
  FieldElement(FieldSpec field, Element value);

  const FieldSpec& field() const { return field_; }
  Element value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same(const FieldElement& o) const;
  FieldSpec field_;
  Element value_;
};

// True iff a lies in the subfield of order p^m; m must divide the degree.
// Decided by the Frobenius fixed-point test a^(p^m) = a.
bool subfield_member(const FieldSpec& field, int m, Element a);

// Subfield test by order: q must be p^m with m dividing the degree.
bool in_subfield_of_order(const FieldSpec& field, long long q, Element a);

// The embedding GF(p^m) -> GF(p^k) sending the class of x to the
// lexicographically least root of the small field's modulus.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldSpec small, FieldSpec big);

  const FieldSpec& source() const { return small_; }
  const FieldSpec& target() const { return big_; }
  Element root() const { return image_[small_.generator().code]; }
  Element operator()(Element a) const;

 private:
  FieldSpec small_;
  FieldSpec big_;
  std::vector<Element> image_;
};

Element subfield_embed(const FieldSpec& small, const FieldSpec& big, Element a);

}  // namespace mforge

#endif  // MFORGE_FIELD_HPP_

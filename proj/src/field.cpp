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

#include "mforge/field.hpp"

#include <algorithm>
#include <string>

#include "mforge/error.hpp"

namespace mforge {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kAddTableLimit = 256;

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int lead = a.back();
    for (int i = 0; i <= dm; ++i) {
      a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& m, int p) {
  const int k = static_cast<int>(m.size()) - 1;
  if (k <= 1) return k == 1;
  for (int d = 1; d <= k / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
      Poly div(d + 1);
      long long v = t;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(v % p);
        v /= p;
      }
      div[d] = 1;
      if (poly_mod(m, div, p).empty()) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power(long long q) {
  if (q < 2) return std::nullopt;
  const auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  int k = 0;
  while (q > 1) {
    q /= factors[0];
    ++k;
  }
  return std::make_pair(static_cast<int>(factors[0]), k);
}

struct FieldSpec::Tables {
  int p = 0;
  int k = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::vector<std::uint32_t> pow_p;
  Element primitive;
  std::vector<Element> exp;          // length 2(q-1)
  std::vector<std::uint32_t> log;    // log[0] unused
  std::vector<Element> add;          // q*q table when small
  std::vector<Element> neg;
  std::vector<Element> inv;

  Poly decode(std::uint32_t c) const {
    Poly out(k);
    for (int i = 0; i < k; ++i) {
      out[i] = static_cast<int>(c % p);
      c /= p;
    }
    return out;
  }
  std::uint32_t encode(const Poly& a) const {
    std::uint32_t c = 0;
    for (int i = std::min<int>(k, static_cast<int>(a.size())) - 1; i >= 0; --i) {
      c = c * p + static_cast<std::uint32_t>(a[i]);
    }
    return c;
  }
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const Poly pa = decode(a), pb = decode(b);
    Poly prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    }
    return encode(poly_mod(prod, modulus, p));
  }
  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t c = 0;
    for (int i = 0; i < k; ++i) {
      const std::uint32_t d = (a % p + b % p) % p;
      c += d * pow_p[i];
      a /= p;
      b /= p;
    }
    return c;
  }
  std::uint32_t digit_neg(std::uint32_t a) const {
    std::uint32_t c = 0;
    for (int i = 0; i < k; ++i) {
      const std::uint32_t d = (p - a % p) % p;
      c += d * pow_p[i];
      a /= p;
    }
    return c;
  }
};

FieldSpec::FieldSpec(int p, std::vector<int> modulus) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw PreconditionError("modulus must have degree at least 1");
  for (int c : modulus) {
    if (c < 0 || c >= p) throw PreconditionError("modulus coefficient out of range [0, p)");
  }
  if (modulus.back() != 1) throw PreconditionError("modulus must be monic");
  if (!is_irreducible(modulus, p)) throw PreconditionError("modulus is reducible");

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = static_cast<int>(modulus.size()) - 1;
  t->modulus = std::move(modulus);
  std::uint64_t q = 1;
  for (int i = 0; i < t->k; ++i) {
    t->pow_p.push_back(static_cast<std::uint32_t>(q));
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxOrder) throw PreconditionError("field order exceeds 65536");
  }
  t->q = static_cast<std::uint32_t>(q);

  const std::uint32_t group = t->q - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t g = 1; g < t->q; ++g) {
    bool ok = true;
    for (long long r : factors) {
      if (t->slow_pow(g, group / static_cast<std::uint64_t>(r)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      t->primitive = Element{g};
      break;
    }
  }
  t->exp.resize(2 * static_cast<std::size_t>(group));
  t->log.assign(t->q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    t->exp[i] = t->exp[i + group] = Element{cur};
    t->log[cur] = i;
    cur = t->slow_mul(cur, t->primitive.code);
  }
  t->neg.resize(t->q);
  t->inv.resize(t->q);
  for (std::uint32_t a = 0; a < t->q; ++a) {
    t->neg[a] = Element{t->digit_neg(a)};
    if (a != 0) t->inv[a] = t->exp[(group - t->log[a]) % group];
  }
  if (t->q <= kAddTableLimit) {
    t->add.resize(static_cast<std::size_t>(t->q) * t->q);
    for (std::uint32_t a = 0; a < t->q; ++a) {
      for (std::uint32_t b = 0; b < t->q; ++b) t->add[a * t->q + b] = Element{t->digit_add(a, b)};
    }
  }
  t_ = std::move(t);
}

FieldSpec FieldSpec::make(int p, int k) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (k < 1) throw PreconditionError("extension degree must be at least 1");
  long long count = 1;
  for (int i = 0; i < k; ++i) {
    count *= p;
    if (count > kMaxOrder) throw PreconditionError("field order exceeds 65536");
  }
  // Enumerate (c_0, ..., c_{k-1}) with c_0 most significant.
  for (long long t = 0; t < count; ++t) {
    Poly m(k + 1);
    long long v = t;
    for (int i = k - 1; i >= 0; --i) {
      m[i] = static_cast<int>(v % p);
      v /= p;
    }
    m[k] = 1;
    if (is_irreducible(m, p)) return FieldSpec(p, std::move(m));
  }
  throw Error("no irreducible polynomial found");  // unreachable
}

FieldSpec FieldSpec::of_order(long long q) {
  const auto pk = prime_power(q);
  if (!pk) throw PreconditionError(std::to_string(q) + " is not a prime power");
  return make(pk->first, pk->second);
}

int FieldSpec::characteristic() const { return t_->p; }
int FieldSpec::degree() const { return t_->k; }
std::uint32_t FieldSpec::order() const { return t_->q; }
const std::vector<int>& FieldSpec::modulus() const { return t_->modulus; }
Element FieldSpec::primitive() const { return t_->primitive; }

Element FieldSpec::generator() const {
  if (t_->k == 1) return Element{static_cast<std::uint32_t>((t_->p - t_->modulus[0]) % t_->p)};
  return Element{static_cast<std::uint32_t>(t_->p)};
}

Element FieldSpec::element(std::uint32_t code) const {
  if (code >= t_->q) throw FormatError("element code " + std::to_string(code) + " out of range");
  return Element{code};
}

Element FieldSpec::from_int(long long v) const {
  const long long p = t_->p;
  return Element{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

std::vector<int> FieldSpec::coefficients(Element a) const { return t_->decode(a.code); }

Element FieldSpec::from_coefficients(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > t_->k) throw PreconditionError("too many coefficients");
  Poly a(coeffs.begin(), coeffs.end());
  for (int& c : a) c = ((c % t_->p) + t_->p) % t_->p;
  return Element{t_->encode(a)};
}

Element FieldSpec::add(Element a, Element b) const {
  if (!t_->add.empty()) return t_->add[a.code * t_->q + b.code];
  return Element{t_->digit_add(a.code, b.code)};
}

Element FieldSpec::neg(Element a) const { return t_->neg[a.code]; }
Element FieldSpec::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldSpec::mul(Element a, Element b) const {
  if (a.code == 0 || b.code == 0) return Element{0};
  return t_->exp[t_->log[a.code] + t_->log[b.code]];
}

Element FieldSpec::inv(Element a) const {
  if (a.code == 0) throw PreconditionError("inverse of zero");
  return t_->inv[a.code];
}

Element FieldSpec::pow(Element a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t group = t_->q - 1;
  return t_->exp[(static_cast<std::uint64_t>(t_->log[a.code]) * (e % group)) % group];
}

std::uint32_t FieldSpec::log(Element a) const {
  if (a.code == 0) throw PreconditionError("log of zero");
  return t_->log[a.code];
}

Element FieldSpec::exp(std::uint64_t e) const { return t_->exp[e % (t_->q - 1)]; }

std::vector<Element> FieldSpec::lex_elements() const {
  std::vector<Element> out;
  out.reserve(t_->q);
  for (std::uint32_t t = 0; t < t_->q; ++t) {
    // Reverse the base-p digits so c_0 becomes most significant.
    std::uint32_t v = t, code = 0;
    for (int i = t_->k - 1; i >= 0; --i) {
      code += (v % t_->p) * t_->pow_p[i];
      v /= t_->p;
    }
    out.push_back(Element{code});
  }
  return out;
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus);
}

FieldElement::FieldElement(FieldSpec field, Element value) : field_(std::move(field)), value_(value) {
  if (!field_.contains(value_)) throw PreconditionError("element not in field");
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!(field_ == o.field_)) throw PreconditionError("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_.div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

bool subfield_member(const FieldSpec& field, int m, Element a) {
  if (m < 1 || field.degree() % m != 0) {
    throw PreconditionError("subfield degree " + std::to_string(m) + " does not divide " +
                            std::to_string(field.degree()));
  }
  std::uint64_t pm = 1;
  for (int i = 0; i < m; ++i) pm *= static_cast<std::uint64_t>(field.characteristic());
  return field.pow(a, pm) == a;
}

bool in_subfield_of_order(const FieldSpec& field, long long q, Element a) {
  const auto pk = prime_power(q);
  if (!pk || pk->first != field.characteristic() || field.degree() % pk->second != 0) {
    throw PreconditionError("no subfield of order " + std::to_string(q));
  }
  return subfield_member(field, pk->second, a);
}

SubfieldEmbedding::SubfieldEmbedding(FieldSpec small, FieldSpec big)
    : small_(std::move(small)), big_(std::move(big)) {
  if (small_.characteristic() != big_.characteristic() || big_.degree() % small_.degree() != 0) {
    throw PreconditionError("GF(" + std::to_string(small_.order()) + ") does not embed in GF(" +
                            std::to_string(big_.order()) + ")");
  }
  const auto& m = small_.modulus();
  std::optional<Element> root;
  for (Element r : big_.lex_elements()) {
    Element acc = big_.zero();
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = big_.add(big_.mul(acc, r), big_.from_int(*it));
    if (acc.is_zero()) {
      root = r;
      break;
    }
  }
  if (!root) throw Error("modulus has no root in the extension");  // unreachable for valid fields
  image_.resize(small_.order());
  for (std::uint32_t c = 0; c < small_.order(); ++c) {
    const auto coeffs = small_.coefficients(Element{c});
    Element acc = big_.zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = big_.add(big_.mul(acc, *root), big_.from_int(*it));
    }
    image_[c] = acc;
  }
}

Element SubfieldEmbedding::operator()(Element a) const {
  if (!small_.contains(a)) throw PreconditionError("element not in source field");
  return image_[a.code];
}

Element subfield_embed(const FieldSpec& small, const FieldSpec& big, Element a) {
  return SubfieldEmbedding(small, big)(a);
}

}  // namespace mforge

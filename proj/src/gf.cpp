/* Copyright 2026 The chaincodes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "chaincodes/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian over GF(p)

// Fields up to this order keep full addition/multiplication tables.
constexpr std::uint64_t kTableLimit = 256;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p;
  for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero b.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
  while (a.size() > db) {
    const std::size_t shift = a.size() - 1 - db;
    const std::uint64_t f = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * b[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  if (deg == 0) return false;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exp, std::uint64_t bound) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (r > bound / base) throw BoundExceeded("field order exceeds the size bound " + std::to_string(bound));
    r *= base;
  }
  if (r > bound) throw BoundExceeded("field order exceeds the size bound " + std::to_string(bound));
  return r;
}

}  // namespace

namespace detail {

struct FieldImpl {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::uint32_t sqrt_q = 0;  // 0 when q is not a square
  Poly modulus;
  bool tabled = false;
  std::vector<std::uint32_t> add_table, mul_table, neg_table, inv_table;

  Poly unpack(std::uint32_t v) const {
    Poly c(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      c[i] = v % p;
      v /= p;
    }
    return c;
  }
  std::uint32_t pack(const Poly& c) const {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
  }

  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return r;
  }
  std::uint32_t neg_raw(std::uint32_t a) const {
    std::uint32_t r = 0, place = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      r += ((p - a % p) % p) * place;
      a /= p;
      place *= p;
    }
    return r;
  }
  // Schoolbook product followed by reduction modulo the modulus.
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const {
    const Poly x = unpack(a), y = unpack(b);
    Poly prod(2 * m - 1, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (x[i] == 0) continue;
      for (std::uint32_t j = 0; j < m; ++j) {
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{x[i]} * y[j]) % p);
      }
    }
    Poly r = poly_rem(prod, modulus, p);
    r.resize(m, 0);
    return pack(r);
  }
  std::uint32_t pow_raw(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    std::uint32_t base = a;
    for (; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return tabled ? add_table[a * q + b] : add_raw(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return tabled ? mul_table[a * q + b] : mul_raw(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const { return tabled ? neg_table[a] : neg_raw(a); }
  std::uint32_t inv(std::uint32_t a) const { return tabled ? inv_table[a] : pow_raw(a, q - 2); }

  void build_tables() {
    if (q > kTableLimit) return;
    add_table.resize(std::size_t{q} * q);
    mul_table.resize(std::size_t{q} * q);
    neg_table.resize(q);
    inv_table.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      neg_table[a] = neg_raw(a);
      for (std::uint32_t b = 0; b < q; ++b) {
        add_table[a * q + b] = add_raw(a, b);
        mul_table[a * q + b] = mul_raw(a, b);
      }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
      for (std::uint32_t b = 1; b < q; ++b) {
        if (mul_table[a * q + b] == 1) {
          inv_table[a] = b;
          break;
        }
      }
    }
    tabled = true;
  }
};

}  // namespace detail

namespace {

const detail::FieldImpl* intern(std::uint32_t p, Poly modulus, std::uint64_t q) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, Poly>, std::unique_ptr<detail::FieldImpl>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, modulus);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto impl = std::make_unique<detail::FieldImpl>();
  impl->p = p;
  impl->m = static_cast<std::uint32_t>(modulus.size() - 1);
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = std::move(modulus);
  impl->sqrt_q = impl->m % 2 == 0 ? static_cast<std::uint32_t>(exact_sqrt(q)) : 0;
  impl->build_tables();
  const detail::FieldImpl* raw = impl.get();
  registry.emplace(std::move(key), std::move(impl));
  return raw;
}

void require_square(const detail::FieldImpl* f) {
  if (f->sqrt_q == 0) {
    throw PreconditionError("field order " + std::to_string(f->q) + " is not a square; no conjugation");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw PreconditionError(std::to_string(q) + " is not a prime power");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t m = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) throw PreconditionError(std::to_string(q) + " is not a prime power");
  return {static_cast<std::uint32_t>(p), m};
}

std::uint64_t exact_sqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

Field Field::make(std::uint32_t p, std::uint32_t m, std::uint64_t size_bound) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, m, std::min<std::uint64_t>(size_bound, std::uint64_t{1} << 31));
  Poly f(m + 1, 0);
  f[m] = 1;
  // Lexicographic order on (c_0, c_1, ..., c_{m-1}): c_{m-1} varies fastest.
  while (!is_irreducible(f, p)) {
    std::size_t i = m;
    while (i-- > 0) {
      if (++f[i] < p) break;
      f[i] = 0;
    }
  }
  return Field(intern(p, std::move(f), q));
}

Field Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus, std::uint64_t size_bound) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1) throw PreconditionError("modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw PreconditionError("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus, p)) throw PreconditionError("modulus is reducible over GF(p)");
  const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
  const std::uint64_t q = checked_power(p, m, std::min<std::uint64_t>(size_bound, std::uint64_t{1} << 31));
  return Field(intern(p, std::move(modulus), q));
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->m; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }
bool Field::has_conjugation() const { return impl_->sqrt_q != 0; }

std::uint64_t Field::sqrt_order() const {
  require_square(impl_);
  return impl_->sqrt_q;
}

FieldElement Field::zero() const { return FieldElement(impl_, 0); }
FieldElement Field::one() const { return FieldElement(impl_, 1); }

FieldElement Field::element(std::uint64_t index) const {
  if (index >= impl_->q) throw PreconditionError("element index out of range");
  return FieldElement(impl_, static_cast<std::uint32_t>(index));
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != impl_->m) throw MismatchError("coefficient vector must have length m");
  for (auto c : coeffs) {
    if (c >= impl_->p) throw PreconditionError("coefficient out of range [0, p)");
  }
  return FieldElement(impl_, impl_->pack(Poly(coeffs.begin(), coeffs.end())));
}

FieldElement Field::from_integer(std::int64_t value) const {
  const auto p = static_cast<std::int64_t>(impl_->p);
  return FieldElement(impl_, static_cast<std::uint32_t>(((value % p) + p) % p));
}

FieldElement Field::x() const {
  if (impl_->m == 1) return FieldElement(impl_, impl_->neg(impl_->modulus[0]));
  return FieldElement(impl_, impl_->p);
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(impl_->q);
  for (std::uint32_t v = 0; v < impl_->q; ++v) out.push_back(FieldElement(impl_, v));
  return out;
}

FieldElement Field::frobenius(const FieldElement& a) const {
  a.checked(zero());
  return FieldElement(impl_, impl_->pow_raw(a.value_, impl_->p));
}

FieldElement Field::conjugate(const FieldElement& a) const {
  require_square(impl_);
  a.checked(zero());
  return FieldElement(impl_, impl_->pow_raw(a.value_, impl_->sqrt_q));
}

bool Field::in_subfield(const FieldElement& a) const { return conjugate(a) == a; }

FieldElement Field::trace_to_subfield(const FieldElement& a) const { return a + conjugate(a); }

std::vector<FieldElement> Field::trace_preimage(const FieldElement& t) const {
  if (!in_subfield(t)) throw PreconditionError("trace value does not lie in the quadratic subfield");
  std::vector<FieldElement> out;
  for (std::uint32_t v = 0; v < impl_->q; ++v) {
    FieldElement x(impl_, v);
    if (trace_to_subfield(x) == t) out.push_back(x);
  }
  return out;
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "GF(" << impl_->q << ")";
  return os.str();
}

const detail::FieldImpl* FieldElement::checked(const FieldElement& b) const {
  if (impl_ == nullptr || impl_ != b.impl_) throw MismatchError("field elements from different fields");
  return impl_;
}

std::vector<std::uint32_t> FieldElement::coeffs() const { return impl_->unpack(value_); }
bool FieldElement::is_one() const { return value_ == 1; }

FieldElement FieldElement::operator+(const FieldElement& b) const {
  return FieldElement(impl_, checked(b)->add(value_, b.value_));
}
FieldElement FieldElement::operator-(const FieldElement& b) const {
  const auto* f = checked(b);
  return FieldElement(impl_, f->add(value_, f->neg(b.value_)));
}
FieldElement FieldElement::operator*(const FieldElement& b) const {
  return FieldElement(impl_, checked(b)->mul(value_, b.value_));
}
FieldElement FieldElement::operator-() const { return FieldElement(impl_, impl_->neg(value_)); }

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw PreconditionError("inversion of zero");
  return FieldElement(impl_, impl_->inv(value_));
}

FieldElement FieldElement::pow(std::int64_t exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  return FieldElement(impl_, impl_->pow_raw(value_, static_cast<std::uint64_t>(exponent)));
}

std::string FieldElement::to_string() const {
  const auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace chaincodes

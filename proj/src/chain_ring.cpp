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

#include "chaincodes/chain_ring.hpp"

#include <sstream>

#include "chaincodes/error.hpp"

namespace chaincodes {

ChainRing::ChainRing(Field field, std::uint32_t e) : field_(field), e_(e) {
  if (e < 1) throw PreconditionError("nilpotency index must be at least 1");
}

std::uint64_t ChainRing::order() const {
  std::uint64_t r = 1;
  const std::uint64_t q = field_.order();
  for (std::uint32_t i = 0; i < e_; ++i) {
    if (r > (std::uint64_t{1} << 62) / q) throw BoundExceeded("ring order too large");
    r *= q;
  }
  return r;
}

ChainRingElement ChainRing::zero() const {
  return ChainRingElement(field_, std::vector<FieldElement>(e_, field_.zero()));
}

ChainRingElement ChainRing::one() const { return from_field(field_.one()); }

ChainRingElement ChainRing::u_power(std::uint32_t k) const {
  auto z = zero();
  if (k < e_) z.c_[k] = field_.one();
  return z;
}

ChainRingElement ChainRing::from_field(const FieldElement& a) const {
  if (!(a.field() == field_)) throw MismatchError("scalar from a different field");
  auto z = zero();
  z.c_[0] = a;
  return z;
}

ChainRingElement ChainRing::from_coeffs(std::vector<FieldElement> coeffs) const {
  if (coeffs.size() != e_) throw MismatchError("chain ring element needs exactly e coefficients");
  for (const auto& c : coeffs) {
    if (!(c.field() == field_)) throw MismatchError("coefficient from a different field");
  }
  return ChainRingElement(field_, std::move(coeffs));
}

ChainRingElement ChainRing::from_integer(std::int64_t value) const { return from_field(field_.from_integer(value)); }

ChainRingElement ChainRing::element(std::uint64_t index) const {
  const std::uint64_t q = field_.order();
  std::vector<FieldElement> c;
  c.reserve(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    c.push_back(field_.element(index % q));
    index /= q;
  }
  if (index != 0) throw PreconditionError("ring element index out of range");
  return ChainRingElement(field_, std::move(c));
}

std::vector<ChainRingElement> ChainRing::elements() const {
  const std::uint64_t n = order();
  if (n > (std::uint64_t{1} << 24)) throw BoundExceeded("ring too large to list");
  std::vector<ChainRingElement> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

std::string ChainRing::to_string() const {
  std::ostringstream os;
  os << "R_" << e_ << "(" << field_.order() << ")";
  return os.str();
}

void ChainRingElement::check_same(const ChainRingElement& b) const {
  if (c_.empty() || !(field_ == b.field_) || c_.size() != b.c_.size()) {
    throw MismatchError("chain ring elements from different rings");
  }
}

ChainRingElement ChainRingElement::operator+(const ChainRingElement& b) const {
  check_same(b);
  auto r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

ChainRingElement ChainRingElement::operator-(const ChainRingElement& b) const {
  check_same(b);
  auto r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

ChainRingElement ChainRingElement::operator*(const ChainRingElement& b) const {
  check_same(b);
  const std::size_t e = c_.size();
  ChainRingElement r(field_, std::vector<FieldElement>(e, field_.zero()));
  for (std::size_t i = 0; i < e; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < e; ++j) r.c_[i + j] += c_[i] * b.c_[j];
  }
  return r;
}

ChainRingElement ChainRingElement::operator*(const FieldElement& b) const {
  auto r = *this;
  for (auto& c : r.c_) c *= b;
  return r;
}

ChainRingElement ChainRingElement::operator-() const {
  auto r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool ChainRingElement::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::uint32_t ChainRingElement::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return static_cast<std::uint32_t>(i);
  }
  return nilpotency();
}

ChainRingElement ChainRingElement::inverse() const {
  if (!is_unit()) throw PreconditionError("element " + to_string() + " is not a unit");
  const std::size_t e = c_.size();
  const FieldElement a0_inv = c_[0].inverse();
  ChainRingElement b(field_, std::vector<FieldElement>(e, field_.zero()));
  b.c_[0] = a0_inv;
  for (std::size_t k = 1; k < e; ++k) {
    FieldElement s = field_.zero();
    for (std::size_t i = 1; i <= k; ++i) s += c_[i] * b.c_[k - i];
    b.c_[k] = -(a0_inv * s);
  }
  return b;
}

ChainRingElement ChainRingElement::conjugate() const {
  auto r = *this;
  for (auto& c : r.c_) c = field_.conjugate(c);
  return r;
}

ChainRingElement ChainRingElement::shifted_up(std::uint32_t k) const {
  const std::size_t e = c_.size();
  ChainRingElement r(field_, std::vector<FieldElement>(e, field_.zero()));
  for (std::size_t i = 0; i + k < e; ++i) r.c_[i + k] = c_[i];
  return r;
}

ChainRingElement ChainRingElement::shifted_down(std::uint32_t k) const {
  if (valuation() < k) throw PreconditionError("element is not divisible by the requested power of u");
  const std::size_t e = c_.size();
  ChainRingElement r(field_, std::vector<FieldElement>(e, field_.zero()));
  for (std::size_t i = k; i < e; ++i) r.c_[i - k] = c_[i];
  return r;
}

ChainRingElement ChainRingElement::truncated(std::uint32_t k) const {
  auto r = *this;
  for (std::size_t i = k; i < r.c_.size(); ++i) r.c_[i] = field_.zero();
  return r;
}

std::uint64_t ChainRingElement::index() const {
  const std::uint64_t q = field_.order();
  std::uint64_t v = 0;
  for (std::size_t i = c_.size(); i-- > 0;) v = v * q + c_[i].index();
  return v;
}

std::string ChainRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string coeff = c_[i].to_string();
    const bool compound = coeff.find('+') != std::string::npos;
    if (i == 0) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << (compound ? "(" + coeff + ")" : coeff);
    os << "u";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

ChainRing galois_extension(const ChainRing& ring, std::uint32_t d, std::uint64_t size_bound) {
  if (d < 1) throw PreconditionError("extension degree must be at least 1");
  if (d == 1) return ring;
  const Field& f = ring.field();
  return ChainRing(Field::make(f.characteristic(), f.degree() * d, size_bound), ring.nilpotency());
}

}  // namespace chaincodes

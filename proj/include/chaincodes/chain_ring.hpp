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

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "chaincodes/gf.hpp"

namespace chaincodes {

class ChainRingElement;

// R_e(q) = F_q[u]/(u^e): elements a_0 + u a_1 + ... + u^{e-1} a_{e-1}.
class ChainRing {
 public:
  ChainRing() = default;
  ChainRing(Field field, std::uint32_t e);

  const Field& field() const { return field_; }
  std::uint32_t nilpotency() const { return e_; }
  std::uint64_t residue_order() const { return field_.order(); }
  // q^e; throws BoundExceeded past 2^62.
  std::uint64_t order() const;
  bool has_conjugation() const { return field_.has_conjugation(); }

  ChainRingElement zero() const;
  ChainRingElement one() const;
  ChainRingElement u_power(std::uint32_t k) const;
  ChainRingElement from_field(const FieldElement& a) const;
  ChainRingElement from_coeffs(std::vector<FieldElement> coeffs) const;
  ChainRingElement from_integer(std::int64_t value) const;
  // Packed index sum_i index(a_i) q^i, the inverse of ChainRingElement::index().
  ChainRingElement element(std::uint64_t index) const;
  std::vector<ChainRingElement> elements() const;

  std::string to_string() const;

  friend bool operator==(const ChainRing& a, const ChainRing& b) {
    return a.field_ == b.field_ && a.e_ == b.e_;
  }

 private:
  Field field_;
  std::uint32_t e_ = 0;
};

class ChainRingElement {
 public:
  ChainRingElement() = default;

  ChainRing ring() const { return ChainRing(field_, static_cast<std::uint32_t>(c_.size())); }
  const Field& field() const { return field_; }
  std::uint32_t nilpotency() const { return static_cast<std::uint32_t>(c_.size()); }
  const FieldElement& coeff(std::uint32_t i) const { return c_.at(i); }
  const std::vector<FieldElement>& coeffs() const { return c_; }

  ChainRingElement operator+(const ChainRingElement& b) const;
  ChainRingElement operator-(const ChainRingElement& b) const;
  ChainRingElement operator*(const ChainRingElement& b) const;
  ChainRingElement operator*(const FieldElement& b) const;
  ChainRingElement operator-() const;
  ChainRingElement& operator+=(const ChainRingElement& b) { return *this = *this + b; }
  ChainRingElement& operator-=(const ChainRingElement& b) { return *this = *this - b; }
  ChainRingElement& operator*=(const ChainRingElement& b) { return *this = *this * b; }

  bool is_zero() const;
  bool is_unit() const { return !c_.empty() && !c_[0].is_zero(); }
  // Smallest i with a_i != 0; e for zero.
  std::uint32_t valuation() const;
  ChainRingElement inverse() const;
  ChainRingElement conjugate() const;

  // a * u^k (terms beyond u^{e-1} vanish).
  ChainRingElement shifted_up(std::uint32_t k) const;
  // The b with deg(b) < e - k and u^k b = a; requires valuation() >= k.
  ChainRingElement shifted_down(std::uint32_t k) const;
  // a mod u^k.
  ChainRingElement truncated(std::uint32_t k) const;

  std::uint64_t index() const;

  friend bool operator==(const ChainRingElement& a, const ChainRingElement& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  friend class ChainRing;
  ChainRingElement(Field field, std::vector<FieldElement> c) : field_(field), c_(std::move(c)) {}
  void check_same(const ChainRingElement& b) const;

  Field field_;
  std::vector<FieldElement> c_;
};

inline ChainRingElement unit_inverse(const ChainRingElement& a) { return a.inverse(); }
inline std::uint32_t valuation(const ChainRingElement& a) { return a.valuation(); }
inline ChainRingElement ring_conjugate(const ChainRingElement& a) { return a.conjugate(); }

// R_e(q^d), the degree-d Galois extension.
ChainRing galois_extension(const ChainRing& ring, std::uint32_t d,
                           std::uint64_t size_bound = kDefaultFieldSizeBound);

}  // namespace chaincodes

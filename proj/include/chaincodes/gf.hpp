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
#include <span>
#include <string>
#include <vector>

namespace chaincodes {

// Largest field order accepted by Field::make unless the caller overrides it.
inline constexpr std::uint64_t kDefaultFieldSizeBound = std::uint64_t{1} << 20;

namespace detail {
struct FieldImpl;
}

class FieldElement;

// GF(p^m) in a fixed polynomial basis over GF(p).
//
// Field objects are cheap handles onto interned, immutable tables; two handles
// compare equal iff they describe the same (p, modulus). Elements are packed as
// base-p integers: the element c_0 + c_1 x + ... + c_{m-1} x^{m-1} has index
// c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
class Field {
 public:
  Field() = default;

  // Field with the lexicographically smallest monic irreducible modulus of
  // degree m (coefficients compared from the constant term upward).
  static Field make(std::uint32_t p, std::uint32_t m,
                    std::uint64_t size_bound = kDefaultFieldSizeBound);

  // Field with an explicit monic modulus (little-endian, length m + 1).
  static Field with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                            std::uint64_t size_bound = kDefaultFieldSizeBound);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint64_t order() const;
  const std::vector<std::uint32_t>& modulus() const;

  // True when q is a perfect square, i.e. the conjugation a -> a^sqrt(q) exists.
  bool has_conjugation() const;
  std::uint64_t sqrt_order() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(std::uint64_t index) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  FieldElement from_integer(std::int64_t value) const;
  // The class of x modulo the modulus.
  FieldElement x() const;
  std::vector<FieldElement> elements() const;

  FieldElement frobenius(const FieldElement& a) const;
  FieldElement conjugate(const FieldElement& a) const;
  bool in_subfield(const FieldElement& a) const;
  FieldElement trace_to_subfield(const FieldElement& a) const;
  // All x with x + conj(x) = t, ascending by index. Exactly sqrt(q) of them.
  std::vector<FieldElement> trace_preimage(const FieldElement& t) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.impl_ == b.impl_; }

 private:
  friend class FieldElement;
  explicit Field(const detail::FieldImpl* impl) : impl_(impl) {}
  const detail::FieldImpl* impl_ = nullptr;
};

class FieldElement {
 public:
  FieldElement() = default;

  Field field() const { return Field(impl_); }
  std::uint32_t index() const { return value_; }
  std::vector<std::uint32_t> coeffs() const;
  bool is_zero() const { return value_ == 0; }
  bool is_one() const;

  FieldElement operator+(const FieldElement& b) const;
  FieldElement operator-(const FieldElement& b) const;
  FieldElement operator*(const FieldElement& b) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

  FieldElement inverse() const;
  // Negative exponents invert first.
  FieldElement pow(std::int64_t exponent) const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.impl_ == b.impl_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(const detail::FieldImpl* impl, std::uint32_t value) : impl_(impl), value_(value) {}
  const detail::FieldImpl* checked(const FieldElement& b) const;

  const detail::FieldImpl* impl_ = nullptr;
  std::uint32_t value_ = 0;
};

// Number-theoretic helpers shared by the counting and group modules.
bool is_prime(std::uint64_t n);
// Returns (p, m) with q = p^m, or throws PreconditionError when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);
// Integer square root when n is a perfect square, 0 otherwise.
std::uint64_t exact_sqrt(std::uint64_t n);

}  // namespace chaincodes

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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chaincodes/chain_ring.hpp"
#include "chaincodes/counting.hpp"
#include "chaincodes/field_code.hpp"
#include "chaincodes/gf.hpp"

namespace chaincodes {

using GroupElement = std::vector<std::uint64_t>;

// Z_{d_1} x ... x Z_{d_r}; elements are tuples, enumerated lexicographically.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<std::uint64_t> invariants);

  // "2,4" -> Z_2 x Z_4. An empty string or "1" is the trivial group.
  static AbelianGroup parse(const std::string& text);

  const std::vector<std::uint64_t>& invariants() const { return inv_; }
  std::uint64_t order() const;
  std::uint64_t exponent() const;
  std::string to_string() const;

  GroupElement zero() const { return GroupElement(inv_.size(), 0); }
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(std::uint64_t k, const GroupElement& a) const;
  bool contains(const GroupElement& a) const;

  std::uint64_t index_of(const GroupElement& a) const;
  GroupElement element(std::uint64_t index) const;
  std::vector<GroupElement> elements() const;

  // The group with `other`'s factors appended.
  AbelianGroup product(const AbelianGroup& other) const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::vector<std::uint64_t> inv_;
};

std::uint64_t element_order(const AbelianGroup& group, const GroupElement& a);
std::uint64_t n_of_order(const AbelianGroup& group, std::uint64_t d);

// Multiplicative order of q modulo j; requires gcd(q, j) = 1.
std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t j);

enum class ClassType { I, II, III, I_prime, II_prime };
const char* to_string(ClassType t);

struct CyclotomicClass {
  GroupElement rep;
  std::vector<GroupElement> members;  // a, qa, q^2 a, ...
  ClassType type_e = ClassType::I;
  std::optional<ClassType> type_h;  // present when q is a square
};

CyclotomicClass cyclotomic_class(const AbelianGroup& group, std::uint64_t q, const GroupElement& a);
// All classes, each represented by its smallest member, ordered by representative.
std::vector<CyclotomicClass> cyclotomic_classes(const AbelianGroup& group, std::uint64_t q);
ClassType class_type(const CyclotomicClass& cls, InnerProduct mode);

// 0 when j | q^t + 1 for some t >= 1, else 1.
int chi(std::uint64_t j, std::uint64_t q);
// 0 when j | q^t + 1 for some odd t >= 1, else 1.
int lambda_fn(std::uint64_t j, std::uint64_t q);

struct DecompositionFactor {
  std::uint64_t d = 1;            // order of the class representatives
  std::uint64_t class_size = 1;   // ord_d(p^m)
  std::uint64_t degree = 1;       // m * ord_d(p^m)
  std::uint64_t e = 1;            // p^s
  std::uint64_t multiplicity = 0;
  ClassType type_e = ClassType::I;
  std::optional<ClassType> type_h;
};

struct DecompositionReport {
  std::uint32_t p = 0, m = 0, s = 0;
  AbelianGroup group;
  std::vector<CyclotomicClass> classes;
  std::vector<DecompositionFactor> factors;
  std::uint64_t r_I = 0, r_II = 0, r_III = 0;
  std::optional<std::uint64_t> r_I_prime, r_II_prime;
  std::uint64_t class_total = 0;      // sum of multiplicity * class_size, equals |A|
  std::uint64_t dimension_total = 0;  // F_{p^m}-dimension of the product, equals |A| p^s

  std::string to_table() const;
  std::string to_json() const;
};

DecompositionReport decompose(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group);

// Element of F[G], dense over the group's element order.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  GroupAlgebraElement(Field field, AbelianGroup group);

  static GroupAlgebraElement monomial(Field field, AbelianGroup group, const GroupElement& g,
                                      const FieldElement& c);

  const Field& field() const { return field_; }
  const AbelianGroup& group() const { return group_; }
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement coeff(const GroupElement& g) const;
  void set(const GroupElement& g, const FieldElement& c);

  GroupAlgebraElement operator+(const GroupAlgebraElement& b) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& b) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& b) const;
  GroupAlgebraElement operator*(const FieldElement& c) const;

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.field_ == b.field_ && a.group_ == b.group_ && a.c_ == b.c_;
  }

 private:
  void check_same(const GroupAlgebraElement& b) const;

  Field field_;
  AbelianGroup group_;
  std::vector<FieldElement> c_;
};

// Coset decomposition of G by a subgroup H, with the smallest tuple of each
// coset as its representative.
struct CosetLayout {
  AbelianGroup group;
  std::vector<GroupElement> subgroup;  // H, sorted
  std::vector<GroupElement> reps;      // sorted
};

// Throws PreconditionError when `subgroup` is not a subgroup of `group`.
CosetLayout coset_layout(const AbelianGroup& group, std::vector<GroupElement> subgroup);

// x = sum_i Y^{r_i} x_i with x_i in F[H]; slot i holds the coefficients of x_i,
// indexed like layout.subgroup.
using PhiImage = std::vector<std::vector<FieldElement>>;

PhiImage phi_map(const CosetLayout& layout, const GroupAlgebraElement& x);
GroupAlgebraElement phi_inverse(const CosetLayout& layout, const Field& field, const PhiImage& image);

// F'[Z_{p^s}] -> R_{p^s}(q'); field scalars fixed and Y -> 1 + u.
ChainRingElement zps_iso(const GroupAlgebraElement& x);
GroupAlgebraElement zps_iso_inverse(const ChainRingElement& r);

// Number of ideals of F[G], by brute force: every principal ideal, then all
// sums. Requires |F|^|G| <= bound.
std::size_t group_algebra_ideal_count(const Field& field, const AbelianGroup& group,
                                      std::uint64_t bound = std::uint64_t{1} << 20);

// Quasi-abelian counts. Without a provider, e = p^s = 3 uses the certified
// closed forms and any other e raises MissingProvider.
CountResult count_qa(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group, std::uint64_t n,
                     const CodeCountProvider* provider = nullptr);
CountResult count_qa_esd(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                         std::uint64_t n, const CodeCountProvider* provider = nullptr);
CountResult count_qa_hsd(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                         std::uint64_t n, const CodeCountProvider* provider = nullptr);

// B enters only through |B|.
inline CountResult count_qa(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                            const AbelianGroup& b, const CodeCountProvider* provider = nullptr) {
  return count_qa(p, m, s, group, b.order(), provider);
}
inline CountResult count_qa_esd(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                                const AbelianGroup& b, const CodeCountProvider* provider = nullptr) {
  return count_qa_esd(p, m, s, group, b.order(), provider);
}
inline CountResult count_qa_hsd(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                                const AbelianGroup& b, const CodeCountProvider* provider = nullptr) {
  return count_qa_hsd(p, m, s, group, b.order(), provider);
}

}  // namespace chaincodes

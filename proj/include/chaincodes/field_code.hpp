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

#include <cstddef>
#include <string>
#include <vector>

#include "chaincodes/gf.hpp"

namespace chaincodes {

enum class InnerProduct { euclidean, hermitian };

const char* to_string(InnerProduct inner);
InnerProduct inner_product_from_string(const std::string& name);

using FieldVector = std::vector<FieldElement>;
using FieldMatrix = std::vector<FieldVector>;

// sum_i a_i b_i, or sum_i a_i conj(b_i) for the Hermitian form.
FieldElement inner_product(const FieldVector& a, const FieldVector& b, InnerProduct inner);

// Linear code over a field, held in reduced row echelon form. The RREF basis is
// canonical, so equality is basis equality.
class FieldCode {
 public:
  FieldCode() = default;

  static FieldCode from_generators(const Field& field, std::size_t n, FieldMatrix rows);
  static FieldCode zero(const Field& field, std::size_t n);
  static FieldCode full(const Field& field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return basis_.size(); }
  const FieldMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const FieldVector& v) const;
  bool is_subcode_of(const FieldCode& other) const;

  friend bool operator==(const FieldCode& a, const FieldCode& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  Field field_;
  std::size_t n_ = 0;
  FieldMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Reduced row echelon form in place; returns the pivot columns. Zero rows are removed.
std::vector<std::size_t> row_reduce(FieldMatrix& rows, std::size_t n);

FieldCode dual(const FieldCode& code, InnerProduct inner);
bool is_self_orthogonal(const FieldCode& code, InnerProduct inner);
bool is_self_dual(const FieldCode& code, InnerProduct inner);

}  // namespace chaincodes

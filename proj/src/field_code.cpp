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

#include "chaincodes/field_code.hpp"

#include "chaincodes/error.hpp"

namespace chaincodes {

const char* to_string(InnerProduct inner) {
  return inner == InnerProduct::euclidean ? "euclidean" : "hermitian";
}

InnerProduct inner_product_from_string(const std::string& name) {
  if (name == "euclidean") return InnerProduct::euclidean;
  if (name == "hermitian") return InnerProduct::hermitian;
  throw ParseError("unknown inner product '" + name + "'");
}

FieldElement inner_product(const FieldVector& a, const FieldVector& b, InnerProduct inner) {
  if (a.size() != b.size() || a.empty()) throw MismatchError("inner product of vectors of different lengths");
  const Field f = a[0].field();
  FieldElement s = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * (inner == InnerProduct::hermitian ? f.conjugate(b[i]) : b[i]);
  }
  return s;
}

std::vector<std::size_t> row_reduce(FieldMatrix& rows, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const FieldElement inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

FieldCode FieldCode::from_generators(const Field& field, std::size_t n, FieldMatrix rows) {
  for (const auto& row : rows) {
    if (row.size() != n) throw MismatchError("generator row length differs from n");
    for (const auto& x : row) {
      if (!(x.field() == field)) throw MismatchError("generator entry from a different field");
    }
  }
  FieldCode code;
  code.field_ = field;
  code.n_ = n;
  code.pivots_ = row_reduce(rows, n);
  code.basis_ = std::move(rows);
  return code;
}

FieldCode FieldCode::zero(const Field& field, std::size_t n) { return from_generators(field, n, {}); }

FieldCode FieldCode::full(const Field& field, std::size_t n) {
  FieldMatrix rows(n, FieldVector(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = field.one();
  return from_generators(field, n, std::move(rows));
}

bool FieldCode::contains(const FieldVector& v) const {
  if (v.size() != n_) throw MismatchError("vector length differs from code length");
  FieldVector w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElement f = w[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) w[j] -= f * basis_[i][j];
  }
  for (const auto& x : w) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool FieldCode::is_subcode_of(const FieldCode& other) const {
  if (!(field_ == other.field_) || n_ != other.n_) throw MismatchError("codes with different parameters");
  for (const auto& row : basis_) {
    if (!other.contains(row)) return false;
  }
  return true;
}

FieldCode dual(const FieldCode& code, InnerProduct inner) {
  const Field& f = code.field();
  const std::size_t n = code.length();
  if (inner == InnerProduct::hermitian && !f.has_conjugation()) {
    throw PreconditionError("Hermitian dual needs a square field order");
  }
  // v is Hermitian-orthogonal to g iff conj(g) . v = 0, so both forms reduce
  // to a right kernel; conjugation keeps the RREF shape.
  std::vector<bool> is_pivot(n, false);
  for (auto c : code.pivots()) is_pivot[c] = true;
  FieldMatrix kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(n, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
      FieldElement g = code.basis()[i][free];
      if (inner == InnerProduct::hermitian) g = f.conjugate(g);
      v[code.pivots()[i]] = -g;
    }
    kernel.push_back(std::move(v));
  }
  return FieldCode::from_generators(f, n, std::move(kernel));
}

bool is_self_orthogonal(const FieldCode& code, InnerProduct inner) {
  for (const auto& a : code.basis()) {
    for (const auto& b : code.basis()) {
      if (!inner_product(a, b, inner).is_zero()) return false;
    }
  }
  return true;
}

bool is_self_dual(const FieldCode& code, InnerProduct inner) {
  if (2 * code.dimension() != code.length()) return false;
  return is_self_orthogonal(code, inner);
}

}  // namespace chaincodes

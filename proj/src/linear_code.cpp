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

#include "chaincodes/linear_code.hpp"

#include <algorithm>
#include <numeric>

#include "chaincodes/error.hpp"

namespace chaincodes {

namespace {

void check_rows(const ChainRing& ring, std::size_t n, const RingMatrix& rows) {
  for (const auto& row : rows) {
    if (row.size() != n) throw MismatchError("generator row length differs from n");
    for (const auto& x : row) {
      if (!(x.ring() == ring)) throw MismatchError("generator entry from a different ring");
    }
  }
}

// row_a -= t * row_b
void subtract_multiple(RingVector& a, const ChainRingElement& t, const RingVector& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!b[j].is_zero()) a[j] -= t * b[j];
  }
}

// Entry (i, j) of X Y^* where * is transpose or conjugate transpose.
ChainRingElement gram_entry(const RingVector& x, const RingVector& y, InnerProduct inner) {
  return inner_product(x, y, inner);
}

bool gram_vanishes_mod(const RingMatrix& x, const RingMatrix& y, InnerProduct inner, std::uint32_t power) {
  for (const auto& a : x) {
    for (const auto& b : y) {
      if (gram_entry(a, b, inner).valuation() < power) return false;
    }
  }
  return true;
}

void require_conjugation(const ChainRing& ring, InnerProduct inner) {
  if (inner == InnerProduct::hermitian && !ring.has_conjugation()) {
    throw PreconditionError("Hermitian inner product needs a square residue field order");
  }
}

}  // namespace

std::vector<std::size_t> StandardForm::profile(std::uint32_t e) const {
  std::vector<std::size_t> out(e, 0);
  for (auto v : row_valuations) ++out.at(v);
  return out;
}

CodeType StandardForm::type() const {
  CodeType t;
  for (auto v : row_valuations) {
    if (v == 0) ++t.k;
    else if (v == 1) ++t.l;
    else if (v == 2) ++t.m;
    else throw PreconditionError("code type {k,l,m} is defined for e = 3 only");
  }
  return t;
}

RingMatrix StandardForm::unpermuted() const {
  RingMatrix out = matrix;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    for (std::size_t j = 0; j < perm.size(); ++j) out[i][perm[j]] = matrix[i][j];
  }
  return out;
}

StandardForm compute_standard_form(const ChainRing& ring, std::size_t n, RingMatrix m) {
  check_rows(ring, n, m);
  const std::uint32_t e = ring.nilpotency();
  StandardForm sf;
  sf.perm.resize(n);
  std::iota(sf.perm.begin(), sf.perm.end(), std::size_t{0});

  std::size_t r0 = 0;
  while (r0 < m.size() && r0 < n) {
    // Minimum valuation in the unprocessed block; scan column-major so the
    // leftmost columns become pivots when possible.
    std::uint32_t best = e;
    std::size_t bi = 0, bj = 0;
    for (std::size_t j = r0; j < n && best > 0; ++j) {
      for (std::size_t i = r0; i < m.size(); ++i) {
        const std::uint32_t v = m[i][j].valuation();
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (best == e) break;
    std::swap(m[r0], m[bi]);
    if (bj != r0) {
      for (auto& row : m) std::swap(row[r0], row[bj]);
      std::swap(sf.perm[r0], sf.perm[bj]);
    }
    const ChainRingElement unit_inv = m[r0][r0].shifted_down(best).inverse();
    for (auto& x : m[r0]) x *= unit_inv;

    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r0) continue;
      const ChainRingElement& x = m[i][r0];
      if (x.is_zero()) continue;
      // Below: valuation(x) >= best, clear completely. Above: clear the part of
      // degree >= best, leaving x mod u^best.
      const ChainRingElement high = i > r0 ? x : x - x.truncated(best);
      if (high.is_zero()) continue;
      subtract_multiple(m[i], high.shifted_down(best), m[r0]);
    }
    sf.row_valuations.push_back(best);
    ++r0;
  }
  m.resize(r0);
  sf.matrix = std::move(m);
  return sf;
}

LinearCode LinearCode::from_generators(const ChainRing& ring, std::size_t n, RingMatrix rows) {
  check_rows(ring, n, rows);
  LinearCode c;
  c.ring_ = ring;
  c.n_ = n;
  c.gens_ = std::move(rows);
  c.cache_ = std::make_shared<Cache>();
  return c;
}

LinearCode LinearCode::zero(const ChainRing& ring, std::size_t n) { return from_generators(ring, n, {}); }

LinearCode LinearCode::full(const ChainRing& ring, std::size_t n) {
  RingMatrix rows(n, RingVector(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) rows[i][i] = ring.one();
  return from_generators(ring, n, std::move(rows));
}

const StandardForm& LinearCode::standard_form() const {
  if (!cache_) throw PreconditionError("empty LinearCode handle");
  std::call_once(cache_->once, [this] { cache_->value = compute_standard_form(ring_, n_, gens_); });
  return *cache_->value;
}

CodeType code_type(const LinearCode& code) {
  if (code.ring().nilpotency() != 3) throw PreconditionError("code type {k,l,m} is defined for e = 3 only");
  return code.standard_form().type();
}

BigInt cardinality(const LinearCode& code) {
  const std::uint32_t e = code.ring().nilpotency();
  std::uint64_t exponent = 0;
  for (auto v : code.standard_form().row_valuations) exponent += e - v;
  return boost::multiprecision::pow(BigInt(code.ring().residue_order()), static_cast<unsigned>(exponent));
}

ChainRingElement inner_product(const RingVector& a, const RingVector& b, InnerProduct inner) {
  if (a.size() != b.size() || a.empty()) throw MismatchError("inner product of vectors of different lengths");
  ChainRingElement s = a[0].ring().zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * (inner == InnerProduct::hermitian ? b[i].conjugate() : b[i]);
  }
  return s;
}

bool contains(const LinearCode& code, const RingVector& word) {
  if (word.size() != code.length()) throw MismatchError("word length differs from code length");
  for (const auto& x : word) {
    if (!(x.ring() == code.ring())) throw MismatchError("word entry from a different ring");
  }
  const StandardForm& sf = code.standard_form();
  RingVector w(word.size());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = word[sf.perm[j]];
  for (std::size_t i = 0; i < sf.matrix.size(); ++i) {
    const ChainRingElement& x = w[i];
    if (x.is_zero()) continue;
    const std::uint32_t v = sf.row_valuations[i];
    if (x.valuation() < v) return false;
    subtract_multiple(w, x.shifted_down(v), sf.matrix[i]);
  }
  return std::all_of(w.begin(), w.end(), [](const auto& x) { return x.is_zero(); });
}

bool is_subcode(const LinearCode& a, const LinearCode& b) {
  if (!(a.ring() == b.ring()) || a.length() != b.length()) throw MismatchError("codes with different parameters");
  for (const auto& row : a.generators()) {
    if (!contains(b, row)) return false;
  }
  return true;
}

bool code_equal(const LinearCode& a, const LinearCode& b) { return is_subcode(a, b) && is_subcode(b, a); }

FieldCode torsion(const LinearCode& code, std::uint32_t i) {
  if (code.ring().nilpotency() != 3) throw PreconditionError("torsion codes are defined here for e = 3");
  if (i > 2) throw PreconditionError("torsion index must be 0, 1 or 2");
  const StandardForm& sf = code.standard_form();
  const Field& f = code.ring().field();
  FieldMatrix rows;
  for (std::size_t r = 0; r < sf.matrix.size(); ++r) {
    const std::uint32_t v = sf.row_valuations[r];
    if (v > i) continue;
    FieldVector row(code.length(), f.zero());
    for (std::size_t j = 0; j < code.length(); ++j) row[sf.perm[j]] = sf.matrix[r][j].shifted_down(v).coeff(0);
    rows.push_back(std::move(row));
  }
  return FieldCode::from_generators(f, code.length(), std::move(rows));
}

LinearCode dual(const LinearCode& code, InnerProduct inner) {
  const ChainRing& ring = code.ring();
  require_conjugation(ring, inner);
  const std::uint32_t e = ring.nilpotency();
  const std::size_t n = code.length();
  const StandardForm& sf = code.standard_form();

  // v is Hermitian-orthogonal to g iff conj(g) . v = 0; conjugation keeps the
  // block shape, so both forms become a right kernel of S.
  RingMatrix s = sf.matrix;
  if (inner == InnerProduct::hermitian) {
    for (auto& row : s) {
      for (auto& x : row) x = x.conjugate();
    }
  }
  // Column operations S Q = diag(u^{v_i}); row i only meets column i once the
  // rows above it are cleared.
  RingMatrix q(n, RingVector(n, ring.zero()));
  for (std::size_t i = 0; i < n; ++i) q[i][i] = ring.one();
  const std::size_t rank = s.size();
  for (std::size_t i = 0; i < rank; ++i) {
    const std::uint32_t v = sf.row_valuations[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s[i][j].is_zero()) continue;
      const ChainRingElement t = s[i][j].shifted_down(v);
      for (std::size_t r = 0; r < rank; ++r) {
        if (!s[r][i].is_zero()) s[r][j] -= t * s[r][i];
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (!q[r][i].is_zero()) q[r][j] -= t * q[r][i];
      }
    }
  }
  // Kernel of diag(u^{v_i}) is generated by u^{e - v_i} e_i and the free
  // coordinates; map back through Q and the column permutation.
  RingMatrix kernel;
  auto push_column = [&](std::size_t col, std::uint32_t shift) {
    RingVector w(n, ring.zero());
    for (std::size_t r = 0; r < n; ++r) w[sf.perm[r]] = q[r][col].shifted_up(shift);
    kernel.push_back(std::move(w));
  };
  for (std::size_t i = 0; i < rank; ++i) {
    const std::uint32_t v = sf.row_valuations[i];
    if (v > 0) push_column(i, e - v);
  }
  for (std::size_t j = rank; j < n; ++j) push_column(j, 0);
  return LinearCode::from_generators(ring, n, std::move(kernel));
}

bool self_dual_block_conditions(const StandardForm& form, std::size_t n, InnerProduct inner) {
  const CodeType t = form.type();
  if (t.k + t.l + t.m > n) return false;
  const std::size_t h = n - t.k - t.l - t.m;
  if (t.k != h || t.l != t.m) return false;
  RingMatrix a, b, c;
  for (std::size_t i = 0; i < form.matrix.size(); ++i) {
    RingVector row = form.matrix[i];
    const std::uint32_t v = form.row_valuations[i];
    for (auto& x : row) x = x.shifted_down(v);
    (v == 0 ? a : v == 1 ? b : c).push_back(std::move(row));
  }
  return gram_vanishes_mod(a, a, inner, 3) && gram_vanishes_mod(a, b, inner, 2) &&
         gram_vanishes_mod(b, b, inner, 1) && gram_vanishes_mod(a, c, inner, 1);
}

bool is_self_dual(const LinearCode& code, InnerProduct inner) {
  require_conjugation(code.ring(), inner);
  if (code.ring().nilpotency() == 3) return self_dual_block_conditions(code.standard_form(), code.length(), inner);
  return code_equal(dual(code, inner), code);
}

std::uint64_t pack_vector(const RingVector& word) {
  if (word.empty()) return 0;
  const std::uint64_t base = word[0].ring().order();
  std::uint64_t v = 0;
  for (std::size_t i = word.size(); i-- > 0;) v = v * base + word[i].index();
  return v;
}

RingVector unpack_vector(const ChainRing& ring, std::size_t n, std::uint64_t index) {
  const std::uint64_t base = ring.order();
  RingVector w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.push_back(ring.element(index % base));
    index /= base;
  }
  return w;
}

std::vector<RingVector> codewords(const LinearCode& code, std::uint64_t bound) {
  const BigInt size = cardinality(code);
  if (size > bound) throw BoundExceeded("code has more than " + std::to_string(bound) + " codewords");
  const ChainRing& ring = code.ring();
  const std::uint32_t e = ring.nilpotency();
  const std::uint64_t q = ring.residue_order();
  const StandardForm& sf = code.standard_form();
  const RingMatrix rows = sf.unpermuted();

  // Row i only needs coefficients of degree < e - v_i.
  std::vector<std::uint64_t> radix(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    radix[i] = 1;
    for (std::uint32_t d = sf.row_valuations[i]; d < e; ++d) radix[i] *= q;
  }
  std::vector<std::uint64_t> digit(rows.size(), 0);
  std::vector<RingVector> out;
  out.reserve(static_cast<std::size_t>(size));
  while (true) {
    RingVector w(code.length(), ring.zero());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (digit[i] == 0) continue;
      const ChainRingElement r = ring.element(digit[i]);
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += r * rows[i][j];
    }
    out.push_back(std::move(w));
    std::size_t i = 0;
    while (i < rows.size() && ++digit[i] == radix[i]) digit[i++] = 0;
    if (i == rows.size()) break;
  }
  return out;
}

std::vector<std::uint64_t> fingerprint(const LinearCode& code, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (const auto& w : codewords(code, bound)) out.push_back(pack_vector(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chaincodes

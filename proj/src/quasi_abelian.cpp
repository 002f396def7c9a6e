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

#include "chaincodes/quasi_abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "chaincodes/error.hpp"
#include "json.hpp"

namespace chaincodes {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (v > UINT64_MAX / base) throw BoundExceeded("prime power does not fit in 64 bits");
    v *= base;
  }
  return v;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

std::string power_label(std::uint64_t p, std::uint64_t k) {
  return std::to_string(p) + "^" + std::to_string(k);
}

void check_qa_params(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                     std::uint64_t n) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (m < 1 || s < 1) throw PreconditionError("m and s must be positive");
  if (n < 1) throw PreconditionError("index n must be positive");
  if (group.order() % p == 0) throw PreconditionError("p divides |A|");
}

const CodeCountProvider& select_provider(std::uint64_t e, const CodeCountProvider* provider) {
  static const CertifiedProvider certified;
  if (provider != nullptr) {
    if (provider->nilpotency() != e) throw MismatchError("count provider is for a different nilpotency index");
    return *provider;
  }
  if (e == 3) return certified;
  throw MissingProvider("no certified count provider for p^s = " + std::to_string(e));
}

// Accumulates base^exp factors into a CountResult.
struct Product {
  BigInt value = 1;
  std::string formula;

  void times(const std::string& label, const BigInt& base, std::uint64_t exp) {
    if (exp == 0) return;
    value *= boost::multiprecision::pow(base, static_cast<unsigned>(exp));
    if (!formula.empty()) formula += " * ";
    formula += label + "^" + std::to_string(exp);
  }

  CountResult result(const std::string& params) const {
    CountResult r;
    r.value = value;
    r.formula = formula.empty() ? "1" : formula;
    r.params = params;
    return r;
  }
};

std::string qa_params(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group, std::uint64_t n,
                      const CodeCountProvider& provider) {
  return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " s=" + std::to_string(s) + " A=" +
         group.to_string() + " n=" + std::to_string(n) + " provider=" + provider.label();
}

std::string count_label(const char* name, std::uint64_t e, std::uint64_t p, std::uint64_t deg, std::uint64_t n) {
  return std::string(name) + "_" + std::to_string(e) + "(" + power_label(p, deg) + "," + std::to_string(n) + ")";
}

}  // namespace

// --- groups ----------------------------------------------------------------

AbelianGroup::AbelianGroup(std::vector<std::uint64_t> invariants) : inv_(std::move(invariants)) {
  for (auto d : inv_)
    if (d < 1) throw PreconditionError("cyclic orders must be positive");
  order();
}

AbelianGroup AbelianGroup::parse(const std::string& text) {
  std::vector<std::uint64_t> inv;
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    any = true;
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty cyclic order in group description '" + text + "'");
    item = item.substr(b, e - b + 1);
    if (!std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }) || item.size() > 18)
      throw ParseError("bad cyclic order '" + item + "' in group description");
    const std::uint64_t d = std::stoull(item);
    if (d < 1) throw ParseError("cyclic orders must be positive");
    inv.push_back(d);
  }
  if (!any && !text.empty()) throw ParseError("bad group description '" + text + "'");
  return AbelianGroup(std::move(inv));
}

std::uint64_t AbelianGroup::order() const {
  std::uint64_t n = 1;
  for (auto d : inv_) {
    if (n > (std::uint64_t{1} << 32) / d) throw BoundExceeded("group order too large");
    n *= d;
  }
  return n;
}

std::uint64_t AbelianGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto d : inv_) e = std::lcm(e, d);
  return e;
}

std::string AbelianGroup::to_string() const {
  if (inv_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < inv_.size(); ++i) s += (i ? "," : "") + std::to_string(inv_[i]);
  return s;
}

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  if (!contains(a) || !contains(b)) throw MismatchError("element not in group");
  GroupElement c(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) c[i] = (a[i] + b[i]) % inv_[i];
  return c;
}

GroupElement AbelianGroup::neg(const GroupElement& a) const {
  if (!contains(a)) throw MismatchError("element not in group");
  GroupElement c(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) c[i] = (inv_[i] - a[i]) % inv_[i];
  return c;
}

GroupElement AbelianGroup::scale(std::uint64_t k, const GroupElement& a) const {
  if (!contains(a)) throw MismatchError("element not in group");
  GroupElement c(inv_.size());
  for (std::size_t i = 0; i < inv_.size(); ++i) c[i] = mul_mod(k % inv_[i], a[i], inv_[i]);
  return c;
}

bool AbelianGroup::contains(const GroupElement& a) const {
  if (a.size() != inv_.size()) return false;
  for (std::size_t i = 0; i < inv_.size(); ++i)
    if (a[i] >= inv_[i]) return false;
  return true;
}

std::uint64_t AbelianGroup::index_of(const GroupElement& a) const {
  if (!contains(a)) throw MismatchError("element not in group");
  std::uint64_t idx = 0;
  for (std::size_t i = 0; i < inv_.size(); ++i) idx = idx * inv_[i] + a[i];
  return idx;
}

GroupElement AbelianGroup::element(std::uint64_t index) const {
  if (index >= order()) throw PreconditionError("group element index out of range");
  GroupElement a(inv_.size());
  for (std::size_t i = inv_.size(); i-- > 0;) {
    a[i] = index % inv_[i];
    index /= inv_[i];
  }
  return a;
}

std::vector<GroupElement> AbelianGroup::elements() const {
  std::vector<GroupElement> out;
  const std::uint64_t n = order();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

AbelianGroup AbelianGroup::product(const AbelianGroup& other) const {
  auto inv = inv_;
  inv.insert(inv.end(), other.inv_.begin(), other.inv_.end());
  return AbelianGroup(std::move(inv));
}

std::uint64_t element_order(const AbelianGroup& group, const GroupElement& a) {
  if (!group.contains(a)) throw MismatchError("element not in group");
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t d = group.invariants()[i];
    o = std::lcm(o, d / std::gcd(a[i], d));
  }
  return o;
}

std::uint64_t n_of_order(const AbelianGroup& group, std::uint64_t d) {
  std::uint64_t c = 0;
  for (const auto& a : group.elements())
    if (element_order(group, a) == d) ++c;
  return c;
}

std::uint64_t multiplicative_order(std::uint64_t q, std::uint64_t j) {
  if (j == 0) throw PreconditionError("modulus must be positive");
  if (j == 1) return 1;
  if (std::gcd(q, j) != 1) throw PreconditionError("q and j are not coprime");
  std::uint64_t x = q % j, t = 1;
  while (x != 1) {
    x = mul_mod(x, q, j);
    ++t;
  }
  return t;
}

// --- cyclotomic classes ----------------------------------------------------

const char* to_string(ClassType t) {
  switch (t) {
    case ClassType::I: return "I";
    case ClassType::II: return "II";
    case ClassType::III: return "III";
    case ClassType::I_prime: return "I'";
    case ClassType::II_prime: return "II'";
  }
  return "?";
}

CyclotomicClass cyclotomic_class(const AbelianGroup& group, std::uint64_t q, const GroupElement& a) {
  if (std::gcd(q, group.order()) != 1) throw PreconditionError("p divides |A|");
  if (!group.contains(a)) throw MismatchError("element not in group");
  CyclotomicClass cls;
  cls.rep = a;
  const std::uint64_t qe = q % group.exponent();
  GroupElement cur = a;
  do {
    cls.members.push_back(cur);
    cur = group.scale(qe, cur);
  } while (cur != a);
  auto in_class = [&](const GroupElement& b) {
    return std::find(cls.members.begin(), cls.members.end(), b) != cls.members.end();
  };
  const GroupElement minus = group.neg(a);
  if (minus == a)
    cls.type_e = ClassType::I;
  else
    cls.type_e = in_class(minus) ? ClassType::II : ClassType::III;
  if (const std::uint64_t r = exact_sqrt(q); r != 0 && r * r == q)
    cls.type_h = in_class(group.neg(group.scale(r, a))) ? ClassType::I_prime : ClassType::II_prime;
  return cls;
}

std::vector<CyclotomicClass> cyclotomic_classes(const AbelianGroup& group, std::uint64_t q) {
  std::vector<CyclotomicClass> out;
  std::vector<bool> seen(group.order(), false);
  for (const auto& a : group.elements()) {
    if (seen[group.index_of(a)]) continue;
    out.push_back(cyclotomic_class(group, q, a));
    for (const auto& b : out.back().members) seen[group.index_of(b)] = true;
  }
  return out;
}

ClassType class_type(const CyclotomicClass& cls, InnerProduct mode) {
  if (mode == InnerProduct::euclidean) return cls.type_e;
  if (!cls.type_h) throw PreconditionError("hermitian class types need an even m");
  return *cls.type_h;
}

int chi(std::uint64_t j, std::uint64_t q) {
  const std::uint64_t ord = multiplicative_order(q, j);
  std::uint64_t x = q % j;
  for (std::uint64_t t = 1; t <= ord; ++t) {
    if ((x + 1) % j == 0) return 0;
    x = mul_mod(x, q, j);
  }
  return 1;
}

int lambda_fn(std::uint64_t j, std::uint64_t q) {
  const std::uint64_t ord = multiplicative_order(q, j);
  std::uint64_t x = q % j;
  for (std::uint64_t t = 1; t <= 2 * ord; ++t) {
    if (t % 2 == 1 && (x + 1) % j == 0) return 0;
    x = mul_mod(x, q, j);
  }
  return 1;
}

// --- decomposition ---------------------------------------------------------

DecompositionReport decompose(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group) {
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  if (m < 1 || s < 1) throw PreconditionError("m and s must be positive");
  if (group.order() % p == 0) throw PreconditionError("p divides |A|");
  const std::uint64_t q = checked_pow(p, m), e = checked_pow(p, s);

  DecompositionReport rep;
  rep.p = p;
  rep.m = m;
  rep.s = s;
  rep.group = group;
  rep.classes = cyclotomic_classes(group, q);
  if (m % 2 == 0) {
    rep.r_I_prime = 0;
    rep.r_II_prime = 0;
  }

  std::map<std::tuple<std::uint64_t, int, int>, DecompositionFactor> grouped;
  for (const auto& c : rep.classes) {
    const std::uint64_t d = element_order(group, c.rep);
    auto& f = grouped[{d, static_cast<int>(c.type_e), c.type_h ? static_cast<int>(*c.type_h) : -1}];
    f.d = d;
    f.class_size = c.members.size();
    f.degree = m * f.class_size;
    f.e = e;
    f.type_e = c.type_e;
    f.type_h = c.type_h;
    ++f.multiplicity;
    if (c.type_e == ClassType::I) ++rep.r_I;
    if (c.type_e == ClassType::II) ++rep.r_II;
    if (c.type_e == ClassType::III) ++rep.r_III;
    if (c.type_h == ClassType::I_prime) ++*rep.r_I_prime;
    if (c.type_h == ClassType::II_prime) ++*rep.r_II_prime;
  }
  for (auto& [key, f] : grouped) {
    rep.factors.push_back(f);
    rep.class_total += f.multiplicity * f.class_size;
    rep.dimension_total += f.multiplicity * f.class_size * e;
  }
  if (rep.class_total != group.order()) throw Error("cyclotomic classes do not partition A");
  if (rep.r_III % 2 != 0 || (rep.r_II_prime && *rep.r_II_prime % 2 != 0))
    throw Error("unpaired cyclotomic classes");
  return rep;
}

std::string DecompositionReport::to_table() const {
  std::ostringstream os;
  os << "F_" << power_label(p, m) << "[A x Z_" << power_label(p, s) << "], A = Z(" << group.to_string()
     << "), |A| = " << group.order() << "\n";
  os << "d\tord\tring\tmult\ttype\thtype\n";
  for (const auto& f : factors) {
    os << f.d << '\t' << f.class_size << "\tR_" << f.e << '(' << power_label(p, f.degree) << ")\t" << f.multiplicity
       << '\t' << to_string(f.type_e) << '\t' << (f.type_h ? to_string(*f.type_h) : "-") << '\n';
  }
  os << "classes " << classes.size() << ": r_I=" << r_I << " r_II=" << r_II << " r_III=" << r_III;
  if (r_I_prime) os << " r_I'=" << *r_I_prime << " r_II'=" << *r_II_prime;
  os << "\nsum of class sizes " << class_total << " = |A|; dimension " << dimension_total << " = |A| p^s\n";
  return os.str();
}

std::string DecompositionReport::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["m"] = m;
  j["s"] = s;
  j["group"] = group.invariants();
  j["order"] = group.order();
  auto& fs = j["factors"] = nlohmann::ordered_json::array();
  for (const auto& f : factors) {
    nlohmann::ordered_json o;
    o["d"] = f.d;
    o["ord"] = f.class_size;
    o["degree"] = f.degree;
    o["e"] = f.e;
    o["multiplicity"] = f.multiplicity;
    o["type_e"] = to_string(f.type_e);
    o["type_h"] = f.type_h ? nlohmann::ordered_json(to_string(*f.type_h)) : nlohmann::ordered_json(nullptr);
    fs.push_back(o);
  }
  auto& cs = j["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : classes) cs.push_back({{"rep", c.rep}, {"members", c.members}});
  j["r_I"] = r_I;
  j["r_II"] = r_II;
  j["r_III"] = r_III;
  if (r_I_prime) {
    j["r_I_prime"] = *r_I_prime;
    j["r_II_prime"] = *r_II_prime;
  }
  j["class_total"] = class_total;
  j["dimension_total"] = dimension_total;
  return j.dump(2);
}

// --- group algebra ----------------------------------------------------------

GroupAlgebraElement::GroupAlgebraElement(Field field, AbelianGroup group)
    : field_(field), group_(std::move(group)), c_(group_.order(), field_.zero()) {}

GroupAlgebraElement GroupAlgebraElement::monomial(Field field, AbelianGroup group, const GroupElement& g,
                                                  const FieldElement& c) {
  GroupAlgebraElement x(field, std::move(group));
  x.set(g, c);
  return x;
}

FieldElement GroupAlgebraElement::coeff(const GroupElement& g) const { return c_[group_.index_of(g)]; }

void GroupAlgebraElement::set(const GroupElement& g, const FieldElement& c) {
  if (!(c.field() == field_)) throw MismatchError("coefficient from a different field");
  c_[group_.index_of(g)] = c;
}

void GroupAlgebraElement::check_same(const GroupAlgebraElement& b) const {
  if (!(field_ == b.field_) || !(group_ == b.group_)) throw MismatchError("group algebra elements differ in F or G");
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& b) const {
  check_same(b);
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& b) const {
  check_same(b);
  GroupAlgebraElement r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& b) const {
  check_same(b);
  GroupAlgebraElement r(field_, group_);
  const auto elems = group_.elements();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[group_.index_of(group_.add(elems[i], elems[j]))] += c_[i] * b.c_[j];
    }
  }
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const FieldElement& c) const {
  GroupAlgebraElement r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

CosetLayout coset_layout(const AbelianGroup& group, std::vector<GroupElement> subgroup) {
  for (const auto& h : subgroup)
    if (!group.contains(h)) throw PreconditionError("H contains a non-element of G");
  std::sort(subgroup.begin(), subgroup.end());
  subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
  if (!std::binary_search(subgroup.begin(), subgroup.end(), group.zero()))
    throw PreconditionError("H is not a subgroup of G (missing identity)");
  for (const auto& a : subgroup)
    for (const auto& b : subgroup)
      if (!std::binary_search(subgroup.begin(), subgroup.end(), group.add(a, b)))
        throw PreconditionError("H is not a subgroup of G (not closed)");
  CosetLayout layout{group, subgroup, {}};
  std::vector<bool> seen(group.order(), false);
  for (const auto& g : group.elements()) {
    if (seen[group.index_of(g)]) continue;
    layout.reps.push_back(g);
    for (const auto& h : subgroup) seen[group.index_of(group.add(g, h))] = true;
  }
  return layout;
}

PhiImage phi_map(const CosetLayout& layout, const GroupAlgebraElement& x) {
  if (!(x.group() == layout.group)) throw MismatchError("element is not in F[G] for this layout");
  PhiImage image;
  for (const auto& r : layout.reps) {
    std::vector<FieldElement> slot;
    for (const auto& h : layout.subgroup) slot.push_back(x.coeff(layout.group.add(r, h)));
    image.push_back(std::move(slot));
  }
  return image;
}

GroupAlgebraElement phi_inverse(const CosetLayout& layout, const Field& field, const PhiImage& image) {
  if (image.size() != layout.reps.size()) throw MismatchError("image length differs from the index [G:H]");
  GroupAlgebraElement x(field, layout.group);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i].size() != layout.subgroup.size()) throw MismatchError("slot size differs from |H|");
    for (std::size_t j = 0; j < image[i].size(); ++j) x.set(layout.group.add(layout.reps[i], layout.subgroup[j]), image[i][j]);
  }
  return x;
}

// --- Z_{p^s} isomorphism ------------------------------------------------------

ChainRingElement zps_iso(const GroupAlgebraElement& x) {
  const Field& f = x.field();
  const auto& inv = x.group().invariants();
  const std::uint64_t p = f.characteristic();
  if (inv.size() != 1 || inv[0] < p) throw PreconditionError("group must be Z_{p^s} with s >= 1");
  std::uint64_t d = inv[0];
  while (d % p == 0) d /= p;
  if (d != 1) throw PreconditionError("group order is not a power of the field characteristic");
  const ChainRing ring(f, static_cast<std::uint32_t>(inv[0]));
  const ChainRingElement y = ring.one() + ring.u_power(1);
  ChainRingElement power = ring.one(), out = ring.zero();
  for (std::uint64_t i = 0; i < inv[0]; ++i) {
    out += power * x.coeffs()[i];
    power *= y;
  }
  return out;
}

GroupAlgebraElement zps_iso_inverse(const ChainRingElement& r) {
  const Field& f = r.field();
  const std::uint64_t p = f.characteristic(), e = r.nilpotency();
  std::uint64_t d = e;
  while (d % p == 0) d /= p;
  if (e < p || d != 1) throw PreconditionError("nilpotency index is not a power of the field characteristic");
  const AbelianGroup z({e});
  const GroupAlgebraElement one = GroupAlgebraElement::monomial(f, z, {0}, f.one());
  const GroupAlgebraElement t = GroupAlgebraElement::monomial(f, z, {1}, f.one()) - one;
  GroupAlgebraElement power = one, out(f, z);
  for (std::uint64_t i = 0; i < e; ++i) {
    out = out + power * r.coeff(static_cast<std::uint32_t>(i));
    power = power * t;
  }
  return out;
}

std::size_t group_algebra_ideal_count(const Field& field, const AbelianGroup& group, std::uint64_t bound) {
  const std::uint64_t q = field.order(), n = group.order();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (total > bound / q) throw BoundExceeded("|F|^|G| exceeds the oracle bound");
    total *= q;
  }
  const auto elems = group.elements();
  // shift[g][h] = index of h + g
  std::vector<std::vector<std::uint64_t>> shift(n, std::vector<std::uint64_t>(n));
  for (std::uint64_t g = 0; g < n; ++g)
    for (std::uint64_t h = 0; h < n; ++h) shift[g][h] = group.index_of(group.add(elems[h], elems[g]));

  std::set<FieldMatrix> ideals;
  ideals.insert(FieldCode::zero(field, n).basis());
  FieldVector x(n, field.zero());
  for (std::uint64_t v = 1; v < total; ++v) {
    std::uint64_t t = v;
    for (std::uint64_t i = 0; i < n; ++i, t /= q) x[i] = field.element(t % q);
    FieldMatrix rows;
    for (std::uint64_t g = 0; g < n; ++g) {
      FieldVector y(n, field.zero());
      for (std::uint64_t h = 0; h < n; ++h) y[shift[g][h]] = x[h];
      rows.push_back(std::move(y));
    }
    ideals.insert(FieldCode::from_generators(field, n, std::move(rows)).basis());
  }
  std::vector<FieldMatrix> frontier(ideals.begin(), ideals.end());
  const std::vector<FieldMatrix> principal = frontier;
  while (!frontier.empty()) {
    std::vector<FieldMatrix> next;
    for (const auto& a : frontier)
      for (const auto& b : principal) {
        FieldMatrix rows = a;
        rows.insert(rows.end(), b.begin(), b.end());
        auto sum = FieldCode::from_generators(field, n, std::move(rows)).basis();
        if (ideals.insert(sum).second) next.push_back(std::move(sum));
      }
    frontier = std::move(next);
  }
  return ideals.size();
}

// --- counts -----------------------------------------------------------------

CountResult count_qa(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group, std::uint64_t n,
                     const CodeCountProvider* provider) {
  check_qa_params(p, m, s, group, n);
  const std::uint64_t q = checked_pow(p, m), e = checked_pow(p, s);
  const CodeCountProvider& prov = select_provider(e, provider);
  Product prod;
  for (auto d : divisors(group.exponent())) {
    const std::uint64_t na = n_of_order(group, d);
    if (na == 0) continue;
    const std::uint64_t ord = multiplicative_order(q, d);
    const std::uint64_t deg = std::uint64_t{m} * ord;
    prod.times(count_label("N", e, p, deg, n), prov.linear(checked_pow(p, deg), n), na / ord);
  }
  return prod.result(qa_params(p, m, s, group, n, prov));
}

CountResult count_qa_esd(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                         std::uint64_t n, const CodeCountProvider* provider) {
  check_qa_params(p, m, s, group, n);
  const std::uint64_t q = checked_pow(p, m), e = checked_pow(p, s);
  const CodeCountProvider& prov = select_provider(e, provider);
  Product prod;
  for (auto d : divisors(group.exponent())) {
    const std::uint64_t na = n_of_order(group, d);
    if (na == 0) continue;
    const std::uint64_t ord = multiplicative_order(q, d);
    const std::uint64_t deg = std::uint64_t{m} * ord;
    if (chi(d, q) == 0 && ord == 1) {
      prod.times(count_label("NE", e, p, m, n), prov.euclidean_self_dual(q, n), na);
    } else if (chi(d, q) == 0) {
      prod.times(count_label("NH", e, p, deg, n), prov.hermitian_self_dual(checked_pow(p, deg), n), na / ord);
    } else {
      if (na % (2 * ord) != 0) throw Error("type III classes do not pair up");
      prod.times(count_label("N", e, p, deg, n), prov.linear(checked_pow(p, deg), n), na / (2 * ord));
    }
  }
  return prod.result(qa_params(p, m, s, group, n, prov));
}

CountResult count_qa_hsd(std::uint32_t p, std::uint32_t m, std::uint32_t s, const AbelianGroup& group,
                         std::uint64_t n, const CodeCountProvider* provider) {
  check_qa_params(p, m, s, group, n);
  if (m % 2 != 0) throw PreconditionError("hermitian counts need an even m");
  const std::uint64_t q = checked_pow(p, m), e = checked_pow(p, s), half = checked_pow(p, m / 2);
  const CodeCountProvider& prov = select_provider(e, provider);
  Product prod;
  for (auto d : divisors(group.exponent())) {
    const std::uint64_t na = n_of_order(group, d);
    if (na == 0) continue;
    const std::uint64_t ord = multiplicative_order(q, d);
    const std::uint64_t deg = std::uint64_t{m} * ord;
    if (lambda_fn(d, half) == 0) {
      prod.times(count_label("NH", e, p, deg, n), prov.hermitian_self_dual(checked_pow(p, deg), n), na / ord);
    } else {
      if (na % (2 * ord) != 0) throw Error("type II' classes do not pair up");
      prod.times(count_label("N", e, p, deg, n), prov.linear(checked_pow(p, deg), n), na / (2 * ord));
    }
  }
  return prod.result(qa_params(p, m, s, group, n, prov));
}

}  // namespace chaincodes

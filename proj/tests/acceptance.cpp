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

// Acceptance run: one PASS/FAIL line per criterion, each with a time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "chaincodes/counting.hpp"
#include "chaincodes/enumerate.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/quasi_abelian.hpp"

using namespace chaincodes;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "failed: ";
      else note << "; ";
      note << what;
      pass = false;
    }
  }
};

ChainRing ring(std::uint64_t q, std::uint32_t e) { return make_ring(q, e); }

std::string str(const BigInt& v) { return v.str(); }

bool same_codes(const Census& a, const Census& b) {
  if (a.size() != b.size()) return false;
  for (auto& c : a.codes) {
    bool found = false;
    for (auto& d : b.codes) found = found || code_equal(c, d);
    if (!found) return false;
  }
  return true;
}

void census_sizes(Outcome& o) {
  for (std::uint64_t n : {1, 2}) {
    auto got = enumerate_submodules(ring(2, 3), n).size();
    BigInt want = count_linear(2, 3, n).value;
    o.expect(want == got, "N3(2," + std::to_string(n) + ") formula " + str(want) + " census " + std::to_string(got));
    o.note << "N3(2," << n << ")=" << got << " ";
  }
  o.expect(count_linear(2, 3, 1).value == 4 && count_linear(2, 3, 2).value == 37, "expected 4 and 37");
}

void esd_census(Outcome& o) {
  auto got = enumerate_self_dual(ring(2, 3), 2, InnerProduct::euclidean).size();
  BigInt want = count_esd(2, 2).value;
  o.expect(want == got && got == 3, "NE3(2,2) formula " + str(want) + " census " + std::to_string(got));
  o.note << "NE3(2,2)=" << got;
}

void hsd_census(Outcome& o) {
  auto got = enumerate_self_dual(ring(4, 3), 2, InnerProduct::hermitian).size();
  BigInt want = count_hsd(4, 2).value;
  o.expect(want == got && got == 15, "NH3(4,2) formula " + str(want) + " census " + std::to_string(got));
  o.note << "NH3(4,2)=" << got;
}

void constructive(Outcome& o) {
  Census oracle = enumerate_self_dual(ring(4, 3), 2, InnerProduct::hermitian);
  Census built = enumerate_hsd_constructive(4, 2);
  o.expect(built.size() == 15, "constructive yields " + std::to_string(built.size()));
  o.expect(same_codes(built, oracle) && same_codes(oracle, built), "code sets differ");
  o.note << built.size() << " codes, set equal to the oracle";
}

void extension_stream(Outcome& o) {
  Field f = Field::make(2, 2);
  FieldCode c1 = FieldCode::from_generators(f, 2, {{f.one(), f.one()}});
  for (std::size_t k : {0u, 1u}) {
    FieldCode c0 = k == 0 ? FieldCode::zero(f, 2) : c1;
    FieldCode tor2 = dual(c0, InnerProduct::hermitian);
    HermitianExtension ext(c1, c0);
    std::vector<LinearCode> out;
    while (auto c = ext.next()) out.push_back(*c);
    std::uint64_t want = k == 0 ? 1 : 4;
    o.expect(out.size() == want, "k=" + std::to_string(k) + " yields " + std::to_string(out.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
      o.expect(is_self_dual(out[i], InnerProduct::hermitian), "yield not Hermitian self-dual");
      o.expect(torsion(out[i], 1) == c1, "Tor1 differs from C1");
      o.expect(torsion(out[i], 2) == tor2, "Tor2 differs from the Hermitian dual of Res");
      o.expect(torsion(out[i], 0) == c0, "Res differs from C0");
      for (std::size_t j = 0; j < i; ++j) o.expect(!code_equal(out[i], out[j]), "repeated yield");
    }
    o.note << "k=" << k << ": " << out.size() << " codes ";
  }
}

void field_baselines(Outcome& o) {
  struct Case {
    std::uint64_t q;
    InnerProduct inner;
    std::uint64_t want;
  };
  for (auto c : {Case{2, InnerProduct::euclidean, 1}, Case{5, InnerProduct::euclidean, 2},
                 Case{3, InnerProduct::euclidean, 0}, Case{4, InnerProduct::hermitian, 3},
                 Case{9, InnerProduct::hermitian, 4}}) {
    auto [p, m] = prime_power(c.q);
    auto got = enumerate_field_self_dual(Field::make(p, m), 2, c.inner).size();
    BigInt formula = c.inner == InnerProduct::euclidean ? sigma_e(c.q, 2).value : sigma_h(c.q, 2).value;
    std::string label = std::string(c.inner == InnerProduct::euclidean ? "sigmaE(" : "sigmaH(") +
                        std::to_string(c.q) + ",2)";
    o.expect(formula == got && got == c.want, label + " formula " + str(formula) + " brute force " + std::to_string(got));
    o.note << label << "=" << got << " ";
  }
}

void odd_lengths(Outcome& o) {
  for (std::uint64_t q : {2, 3, 4, 9})
    for (std::uint64_t n = 1; n <= 7; n += 2) {
      std::string at = "(" + std::to_string(q) + "," + std::to_string(n) + ")";
      o.expect(count_esd(q, n).value == 0, "NE3" + at + " nonzero");
      if (exact_sqrt(q) != 0) {
        o.expect(count_hsd(q, n).value == 0, "NH3" + at + " nonzero");
      } else {
        bool refused = false;
        try {
          count_hsd(q, n);
        } catch (const PreconditionError&) {
          refused = true;
        }
        o.expect(refused, "NH3" + at + " accepted a non-square q");
      }
    }
  o.expect(enumerate_self_dual(ring(2, 3), 1, InnerProduct::euclidean).size() == 0, "census (2,1) not empty");
  o.expect(enumerate_self_dual(ring(4, 3), 1, InnerProduct::euclidean).size() == 0, "census (4,1) euclidean not empty");
  o.expect(enumerate_self_dual(ring(4, 3), 1, InnerProduct::hermitian).size() == 0, "census (4,1) hermitian not empty");
  o.note << "odd n <= 7 vanish; Hermitian counts for q in {2,3} are undefined and refused";
}

void duality(Outcome& o) {
  std::size_t checked = 0;
  for (std::uint64_t q : {2, 3, 4})
    for (std::size_t n : {1u, 2u}) {
      ChainRing r = ring(q, 3);
      BigInt full = 1;
      for (std::size_t i = 0; i < n; ++i) full *= r.order();
      for (auto& c : enumerate_submodules(r, n).codes)
        for (InnerProduct inner : {InnerProduct::euclidean, InnerProduct::hermitian}) {
          if (inner == InnerProduct::hermitian && !r.has_conjugation()) continue;
          LinearCode d = dual(c, inner);
          o.expect(code_equal(dual(d, inner), c), "dual of dual differs");
          o.expect(cardinality(c) * cardinality(d) == full, "cardinality product differs");
          ++checked;
        }
    }
  o.note << checked << " (code, inner product) pairs";
}

void torsion_props(Outcome& o) {
  Census c = enumerate_self_dual(ring(4, 3), 2, InnerProduct::hermitian);
  for (auto& code : c.codes) {
    FieldCode res = torsion(code, 0), t1 = torsion(code, 1), t2 = torsion(code, 2);
    CodeType t = code_type(code);
    o.expect(is_self_dual(t1, InnerProduct::hermitian), "Tor1 not Hermitian self-dual");
    o.expect(t2 == dual(res, InnerProduct::hermitian), "Tor2 differs from the Hermitian dual of Res");
    o.expect(is_self_orthogonal(res, InnerProduct::hermitian), "Res not self-orthogonal");
    o.expect(res.dimension() == t.k && t1.dimension() == t.k + t.l && t2.dimension() == t.k + t.l + t.m,
             "torsion dimensions differ from the type");
  }
  o.note << c.size() << " Hermitian self-dual codes";
}

// Product over the decomposition of per-factor oracle counts. Every factor
// must have a class type the chosen mode handles with one oracle.
BigInt factor_product(std::uint32_t p, std::uint32_t m, const AbelianGroup& group, std::uint64_t n, bool hermitian,
                      Outcome& o) {
  DecompositionReport rep = decompose(p, m, 1, group);
  BigInt total = 1;
  for (auto& f : rep.factors) {
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < f.degree; ++i) q *= p;
    ChainRing r = ring(q, 3);
    std::size_t count = 0;
    if (!hermitian && f.type_e == ClassType::I) {
      count = enumerate_self_dual_standard_forms(r, n, InnerProduct::euclidean).size();
      o.expect(count_esd(q, n).value == count, "NE3 factor at q=" + std::to_string(q));
    } else if (hermitian && f.type_h == ClassType::I_prime) {
      count = enumerate_self_dual_standard_forms(r, n, InnerProduct::hermitian).size();
      o.expect(count_hsd(q, n).value == count, "NH3 factor at q=" + std::to_string(q));
    } else {
      o.expect(false, "unexpected factor type");
    }
    o.note << (hermitian ? "NH3(" : "NE3(") << q << "," << n << ")=" << count << "^" << f.multiplicity << " ";
    for (std::uint64_t i = 0; i < f.multiplicity; ++i) total *= count;
  }
  return total;
}

void quasi_abelian(Outcome& o) {
  AbelianGroup z2({2});
  BigInt qa = count_qa(3, 1, 1, z2, 1).value;
  std::size_t ideals = group_algebra_ideal_count(Field::make(3, 1), AbelianGroup({2, 3}));
  std::size_t per_factor = enumerate_submodules(ring(3, 3), 1).size();
  o.expect(qa == 16 && qa == ideals && qa == per_factor * per_factor,
           "NA " + str(qa) + " ideals " + std::to_string(ideals));
  o.note << "NA=" << qa << " ideals=" << ideals << " ";

  BigInt esd = count_qa_esd(3, 1, 1, z2, 4).value;
  BigInt esd_oracle = factor_product(3, 1, z2, 4, false, o);
  o.expect(esd == 30976 && esd == esd_oracle, "NEA " + str(esd) + " factors " + str(esd_oracle));

  BigInt hsd = count_qa_hsd(3, 2, 1, z2, 2).value;
  BigInt hsd_oracle = factor_product(3, 2, z2, 2, true, o);
  o.expect(hsd == 1600 && hsd == hsd_oracle, "NHA " + str(hsd) + " factors " + str(hsd_oracle));
  o.note << "NEA=" << esd << " NHA=" << hsd;
}

int scan_chi(std::uint64_t j, std::uint64_t q, bool odd_only) {
  std::uint64_t x = 1;
  for (std::uint64_t t = 1; t <= 2 * j; ++t) {
    x = x * q % j;
    if ((!odd_only || t % 2 == 1) && (x + 1) % j == 0) return 0;
  }
  return 1;
}

void chi_lambda(Outcome& o) {
  std::size_t checked = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
    for (std::uint64_t j = 1; j <= 20; ++j) {
      if (std::gcd(j, q) != 1) continue;
      int c = chi(j, q), l = lambda_fn(j, q);
      o.expect(c == scan_chi(j, q, false), "chi(" + std::to_string(j) + "," + std::to_string(q) + ")");
      o.expect(l == scan_chi(j, q, true), "lambda(" + std::to_string(j) + "," + std::to_string(q) + ")");
      o.expect(l != 0 || c == 0, "lambda = 0 without chi = 0");
      ++checked;
    }
  o.expect(chi(8, 3) == 1 && lambda_fn(5, 3) == 1 && lambda_fn(2, 3) == 0, "named values");
  o.note << checked << " (j, q) pairs";
}

void zps(Outcome& o) {
  Field f = Field::make(3, 1);
  AbelianGroup z3({3});
  std::vector<GroupAlgebraElement> all;
  for (std::uint64_t i = 0; i < 27; ++i) {
    GroupAlgebraElement x(f, z3);
    for (std::uint64_t k = 0, v = i; k < 3; ++k, v /= 3) x.set({k}, f.element(v % 3));
    all.push_back(x);
  }
  std::set<std::uint64_t> images;
  std::size_t pairs = 0;
  for (auto& a : all) {
    images.insert(zps_iso(a).index());
    o.expect(zps_iso_inverse(zps_iso(a)) == a, "inverse round trip");
    for (auto& b : all) {
      o.expect(zps_iso(a + b) == zps_iso(a) + zps_iso(b), "additivity");
      o.expect(zps_iso(a * b) == zps_iso(a) * zps_iso(b), "multiplicativity");
      ++pairs;
    }
  }
  o.expect(images.size() == 27, "not bijective");
  GroupAlgebraElement s(f, z3);
  for (std::uint64_t k = 0; k < 3; ++k) s.set({k}, f.one());
  ChainRingElement img = zps_iso(s);
  o.expect(img == img.ring().u_power(2), "1+Y+Y^2 does not map to u^2");
  o.note << pairs << " pairs, " << images.size() << " distinct images";
}

struct Criterion {
  const char* name;
  double limit;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"submodule census", 10, census_sizes},
      {"Euclidean self-dual census", 10, esd_census},
      {"Hermitian self-dual census", 60, hsd_census},
      {"constructive equals oracle", 60, constructive},
      {"extension stream count", 10, extension_stream},
      {"field-code baselines", 30, field_baselines},
      {"odd-length vanishing", 10, odd_lengths},
      {"duality properties", 60, duality},
      {"torsion properties", 30, torsion_props},
      {"quasi-abelian counts", 300, quasi_abelian},
      {"chi/lambda table", 1, chi_lambda},
      {"zps_iso homomorphism", 1, zps},
  };
  int failures = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < c.limit, "over the time limit");
    if (!o.pass) ++failures;
    std::printf("%s  %2d  %-28s %8.3f s (limit %g s)  %s\n", o.pass ? "PASS" : "FAIL", index, c.name, secs, c.limit,
                o.note.str().c_str());
  }
  std::printf("%d of %d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}

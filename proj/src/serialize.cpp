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

#include "chaincodes/serialize.hpp"

#include <cstdio>
#include <fstream>

#include "chaincodes/error.hpp"
#include "json.hpp"

namespace chaincodes {

namespace {

using Json = nlohmann::ordered_json;

Json field_element_json(const FieldElement& a) { return a.coeffs(); }

Json ring_element_json(const ChainRingElement& a) {
  Json j = Json::array();
  for (const auto& c : a.coeffs()) j.push_back(field_element_json(c));
  return j;
}

Json field_header(const Field& f, const char* kind) {
  Json j;
  j["kind"] = kind;
  j["p"] = f.characteristic();
  j["m"] = f.degree();
  return j;
}

Json code_json(const LinearCode& code, const RingMatrix& rows) {
  const Field& f = code.ring().field();
  Json j = field_header(f, "ring_code");
  j["e"] = code.ring().nilpotency();
  j["n"] = code.length();
  j["modulus"] = f.modulus();
  Json gens = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& a : r) row.push_back(ring_element_json(a));
    gens.push_back(row);
  }
  j["generators"] = gens;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed code file: ") + e.what());
  }
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("code file lacks field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string("code file field '") + key + "' has the wrong type");
  }
}

void check_kind(const Json& j, const char* kind) {
  if (j.is_object() && j.contains("kind") && j["kind"] != kind)
    throw ParseError(std::string("expected a ") + kind + " file");
}

Field read_field(const Json& j) {
  const auto p = get<std::uint32_t>(j, "p");
  const auto m = get<std::uint32_t>(j, "m");
  const auto modulus = get<std::vector<std::uint32_t>>(j, "modulus");
  if (modulus.size() != std::size_t{m} + 1) throw ParseError("modulus degree differs from m");
  try {
    return Field::with_modulus(p, modulus);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("bad field in code file: ") + e.what());
  }
}

FieldElement read_field_element(const Field& f, const Json& j) {
  if (!j.is_array() || j.size() != f.degree()) throw ParseError("field entry must list m coefficients");
  std::vector<std::uint32_t> c;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() || x.get<std::uint64_t>() >= f.characteristic())
      throw ParseError("field coefficient out of range");
    c.push_back(x.get<std::uint32_t>());
  }
  return f.from_coeffs(c);
}

ChainRingElement read_ring_element(const ChainRing& ring, const Json& j) {
  if (!j.is_array() || j.size() != ring.nilpotency()) throw ParseError("ring entry must list e coefficients");
  std::vector<FieldElement> c;
  for (const auto& x : j) c.push_back(read_field_element(ring.field(), x));
  return ring.from_coeffs(std::move(c));
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace

std::string write_code(const LinearCode& code) { return code_json(code, code.generators()).dump(2) + "\n"; }

std::string write_standard_form(const LinearCode& code) {
  const StandardForm& sf = code.standard_form();
  Json j = code_json(code, sf.unpermuted());
  Json s;
  s["perm"] = sf.perm;
  s["valuations"] = sf.row_valuations;
  if (code.ring().nilpotency() == 3) {
    const CodeType t = sf.type();
    s["type"] = {t.k, t.l, t.m};
  } else {
    s["profile"] = sf.profile(code.ring().nilpotency());
  }
  j["standard_form"] = s;
  return j.dump(2) + "\n";
}

LinearCode read_code(const std::string& text) {
  const Json j = parse(text);
  check_kind(j, "ring_code");
  const Field f = read_field(j);
  const auto e = get<std::uint32_t>(j, "e");
  const auto n = get<std::size_t>(j, "n");
  if (e < 1) throw ParseError("e must be positive");
  const ChainRing ring(f, e);
  const Json gens = get<Json>(j, "generators");
  if (!gens.is_array()) throw ParseError("generators must be a list of rows");
  RingMatrix rows;
  for (const auto& r : gens) {
    if (!r.is_array() || r.size() != n) throw ParseError("generator row length differs from n");
    RingVector v;
    for (const auto& a : r) v.push_back(read_ring_element(ring, a));
    rows.push_back(std::move(v));
  }
  return LinearCode::from_generators(ring, n, std::move(rows));
}

std::string write_field_code(const FieldCode& code) {
  const Field& f = code.field();
  Json j = field_header(f, "field_code");
  j["n"] = code.length();
  j["modulus"] = f.modulus();
  Json basis = Json::array();
  for (const auto& r : code.basis()) {
    Json row = Json::array();
    for (const auto& a : r) row.push_back(field_element_json(a));
    basis.push_back(row);
  }
  j["basis"] = basis;
  return j.dump(2) + "\n";
}

FieldCode read_field_code(const std::string& text) {
  const Json j = parse(text);
  check_kind(j, "field_code");
  const Field f = read_field(j);
  const auto n = get<std::size_t>(j, "n");
  const Json basis = get<Json>(j, "basis");
  if (!basis.is_array()) throw ParseError("basis must be a list of rows");
  FieldMatrix rows;
  for (const auto& r : basis) {
    if (!r.is_array() || r.size() != n) throw ParseError("basis row length differs from n");
    FieldVector v;
    for (const auto& a : r) v.push_back(read_field_element(f, a));
    rows.push_back(std::move(v));
  }
  return FieldCode::from_generators(f, n, std::move(rows));
}

std::string write_census(const Census& census, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const Field& f = census.ring.field();
  Json m;
  m["p"] = f.characteristic();
  m["m"] = f.degree();
  m["e"] = census.ring.nilpotency();
  m["modulus"] = f.modulus();
  m["n"] = census.n;
  m["filter"] = to_string(census.filter);
  m["count"] = std::to_string(census.size());
  Json files = Json::array();
  for (std::size_t i = 0; i < census.codes.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "code_%05zu.json", i);
    write_file(dir / name, write_code(census.codes[i]));
    files.push_back(name);
  }
  m["files"] = files;
  const std::string text = m.dump(2) + "\n";
  write_file(dir / "manifest.json", text);
  return text;
}

}  // namespace chaincodes

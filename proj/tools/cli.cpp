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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "chaincodes/counting.hpp"
#include "chaincodes/enumerate.hpp"
#include "chaincodes/error.hpp"
#include "chaincodes/linear_code.hpp"
#include "chaincodes/quasi_abelian.hpp"
#include "chaincodes/serialize.hpp"
#include "chaincodes/verify.hpp"
#include "json.hpp"

namespace chaincodes::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  // count
  std::string kind;
  std::uint64_t q = 0, n = 0, k = 0;
  std::uint32_t e = 3, p = 0, m = 1, s = 1;
  std::string group;
  std::string range;
  bool validate = false, oracle = false;
  // code
  std::string action, file, inner = "euclidean", out;
  std::uint32_t torsion_index = 0;
  // verify
  std::string suite = "tiny", tamper;
  // census
  std::string filter = "all";
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto sep = text.find_first_of(":-");
  try {
    if (sep == std::string::npos) throw std::invalid_argument("no separator");
    std::size_t used = 0;
    const std::uint64_t a = std::stoull(text.substr(0, sep), &used);
    const std::string rest = text.substr(sep + 1);
    const std::uint64_t b = std::stoull(rest, &used);
    if (used != rest.size() || a < 1 || b < a) throw std::invalid_argument("bad bounds");
    return {a, b};
  } catch (const std::exception&) {
    throw ParseError("--range expects FIRST:LAST with 1 <= FIRST <= LAST, got '" + text + "'");
  }
}

std::string read_input(const std::string& file) {
  if (file == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError("cannot read " + file);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error("cannot write " + o.out);
  f << text;
}

std::uint64_t small_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t v = 1;
  while (e--) v *= b;
  return v;
}

int count_command(const Options& o, std::ostream& out) {
  std::unique_ptr<OracleCountProvider> oracle;
  if (o.kind.rfind("qa", 0) == 0) {
    if (o.p == 0) throw ParseError("--p is required for " + o.kind);
    if (o.oracle) oracle = std::make_unique<OracleCountProvider>(static_cast<std::uint32_t>(small_pow(o.p, o.s)));
  } else if (o.q == 0) {
    throw ParseError("--q is required for " + o.kind);
  }
  const AbelianGroup a = AbelianGroup::parse(o.group);

  std::uint64_t first = o.n, last = o.n;
  if (!o.range.empty()) std::tie(first, last) = parse_range(o.range);
  if (first == 0) throw ParseError("--n or --range is required");

  std::optional<LinearCountValidation> validation;
  if (o.kind == "linear" && o.e != 3 && o.validate) validation = validate_linear_count(o.q, o.e, last);

  auto eval = [&](std::uint64_t n) -> CountResult {
    if (o.kind == "linear") return count_linear(o.q, o.e, n, validation ? &*validation : nullptr);
    if (o.kind == "esd") return count_esd(o.q, n);
    if (o.kind == "hsd") return count_hsd(o.q, n);
    if (o.kind == "sigma-e") return sigma_e(o.q, n);
    if (o.kind == "sigma-h") return sigma_h(o.q, n);
    if (o.kind == "gaussian") {
      CountResult r;
      r.value = gaussian(n, o.k, o.q);
      r.formula = "gaussian binomial [n,k]_q";
      r.params = "q=" + std::to_string(o.q) + " n=" + std::to_string(n) + " k=" + std::to_string(o.k);
      return r;
    }
    if (o.kind == "qa") return count_qa(o.p, o.m, o.s, a, n, oracle.get());
    if (o.kind == "qa-esd") return count_qa_esd(o.p, o.m, o.s, a, n, oracle.get());
    return count_qa_hsd(o.p, o.m, o.s, a, n, oracle.get());
  };

  if (o.range.empty()) {
    const CountResult r = eval(o.n);
    if (o.format == "json") {
      Json j{{"kind", o.kind},        {"value", to_decimal(r.value)}, {"formula", r.formula},
             {"params", r.params},    {"conjectural", r.conjectural}};
      out << j.dump(2) << "\n";
    } else {
      out << to_decimal(r.value) << "\n"
          << r.formula << (r.conjectural ? " (conjectural)" : "") << "; " << r.params << "\n";
    }
    return kOk;
  }
  Json rows = Json::array();
  std::ostringstream table;
  table << "n\tvalue\n";
  std::string formula;
  bool conjectural = false;
  for (std::uint64_t n = first; n <= last; ++n) {
    const CountResult r = eval(n);
    formula = r.formula;
    conjectural = conjectural || r.conjectural;
    rows.push_back({{"n", n}, {"value", to_decimal(r.value)}});
    table << n << '\t' << to_decimal(r.value) << "\n";
  }
  if (o.format == "json") {
    Json j{{"kind", o.kind}, {"formula", formula}, {"conjectural", conjectural}, {"rows", rows}};
    out << j.dump(2) << "\n";
  } else {
    out << table.str();
  }
  return kOk;
}

int code_command(const Options& o, std::ostream& out) {
  const LinearCode code = read_code(read_input(o.file));
  const InnerProduct ip = inner_product_from_string(o.inner);
  if (o.action == "standard-form") {
    emit(o, out, write_standard_form(code));
  } else if (o.action == "dual") {
    emit(o, out, write_code(dual(code, ip)));
  } else if (o.action == "torsion") {
    emit(o, out, write_field_code(torsion(code, o.torsion_index)));
  } else {
    const bool sd = is_self_dual(code, ip);
    if (o.format == "json")
      emit(o, out, Json{{"self_dual", sd}, {"inner", to_string(ip)}}.dump(2) + "\n");
    else
      emit(o, out, sd ? "true\n" : "false\n");
  }
  return kOk;
}

int decompose_command(const Options& o, std::ostream& out) {
  if (o.p == 0) throw ParseError("--p is required");
  const DecompositionReport r = decompose(o.p, o.m, o.s, AbelianGroup::parse(o.group));
  out << (o.format == "json" ? r.to_json() + "\n" : r.to_table());
  return kOk;
}

int verify_command(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.tamper.empty()) {
    const auto names = verify_check_names(o.suite);
    if (std::find(names.begin(), names.end(), o.tamper) == names.end())
      throw ParseError("--tamper names no check in suite " + o.suite);
  }
  const VerifyReport r = run_verify(o.suite, {o.tamper});
  out << (o.format == "json" ? r.to_json() : r.to_text());
  err << r.timings();
  if (!r.all_pass()) {
    for (const auto& c : r.checks)
      if (!c.pass) err << "verification mismatch: " << c.name << "\n";
    return kMismatch;
  }
  return kOk;
}

int census_command(const Options& o, std::ostream& out) {
  if (o.q == 0 || o.n == 0) throw ParseError("--q and --n are required");
  Census c;
  if (o.filter == "all")
    c = enumerate_submodules(make_ring(o.q, o.e), o.n);
  else if (o.filter == "euclidean")
    c = enumerate_self_dual(make_ring(o.q, o.e), o.n, InnerProduct::euclidean);
  else if (o.filter == "hermitian")
    c = enumerate_self_dual(make_ring(o.q, o.e), o.n, InnerProduct::hermitian);
  else {
    if (o.e != 3) throw PreconditionError("the constructive census needs e = 3");
    c = enumerate_hsd_constructive(o.q, o.n);
  }
  std::string manifest;
  if (!o.out.empty()) manifest = write_census(c, o.out);
  if (o.format == "json") {
    Json j{{"q", o.q}, {"e", o.e}, {"n", o.n}, {"filter", to_string(c.filter)}, {"count", std::to_string(c.size())}};
    if (!o.out.empty()) j["manifest"] = (std::filesystem::path(o.out) / "manifest.json").string();
    out << j.dump(2) << "\n";
  } else {
    out << c.size() << "\n";
    if (!o.out.empty()) out << "wrote " << c.size() << " code files to " << o.out << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear and self-dual codes over F_q[u]/(u^e), their counts, and quasi-abelian codes"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Exact counts");
  count->add_option("kind", o.kind, "What to count")
      ->required()
      ->check(CLI::IsMember({"linear", "esd", "hsd", "sigma-e", "sigma-h", "gaussian", "qa", "qa-esd", "qa-hsd"}));
  count->add_option("--q", o.q, "Residue field order");
  count->add_option("--n", o.n, "Code length (index |B| for qa kinds)");
  count->add_option("--e", o.e, "Nilpotency index for linear counts");
  count->add_option("--k", o.k, "Subspace dimension for gaussian");
  count->add_option("--p", o.p, "Characteristic for qa kinds");
  count->add_option("--m", o.m, "Field degree for qa kinds");
  count->add_option("--s", o.s, "Exponent s of Z_{p^s} for qa kinds");
  count->add_option("--A", o.group, "Group A as cyclic orders, e.g. 2,4");
  count->add_option("--range", o.range, "Table over n = FIRST:LAST");
  count->add_flag("--validate", o.validate, "Validate the e != 3 linear formula against the oracle first");
  count->add_flag("--oracle", o.oracle, "Use oracle-backed counts when p^s != 3");
  add_format(count, o);

  auto* code = app.add_subcommand("code", "Transform or test a code file");
  code->add_option("action", o.action, "Operation")
      ->required()
      ->check(CLI::IsMember({"standard-form", "dual", "torsion", "check-sd"}));
  code->add_option("file", o.file, "Code file, or - for stdin")->required();
  code->add_option("--inner", o.inner, "Inner product")->check(CLI::IsMember({"euclidean", "hermitian"}));
  code->add_option("--i", o.torsion_index, "Torsion index")->check(CLI::Range(0, 2));
  code->add_option("--out", o.out, "Write the result to a file");
  add_format(code, o);

  auto* dec = app.add_subcommand("decompose", "Decompose F_{p^m}[A x Z_{p^s}]");
  dec->add_option("--p", o.p, "Characteristic")->required();
  dec->add_option("--m", o.m, "Field degree");
  dec->add_option("--s", o.s, "Exponent s");
  dec->add_option("--A", o.group, "Group A as cyclic orders, e.g. 2,4");
  add_format(dec, o);

  auto* ver = app.add_subcommand("verify", "Compare closed forms with brute-force enumeration");
  ver->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember({"tiny", "full"}));
  ver->add_option("--tamper", o.tamper, "Perturb the closed-form side of one named check");
  add_format(ver, o);

  auto* cen = app.add_subcommand("census", "Enumerate codes and optionally export them");
  cen->add_option("--q", o.q, "Residue field order");
  cen->add_option("--e", o.e, "Nilpotency index");
  cen->add_option("--n", o.n, "Code length");
  cen->add_option("--filter", o.filter, "Which codes")
      ->check(CLI::IsMember({"all", "euclidean", "hermitian", "constructive"}));
  cen->add_option("--out", o.out, "Directory for code files and manifest.json");
  add_format(cen, o);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return count_command(o, out);
    if (code->parsed()) return code_command(o, out);
    if (dec->parsed()) return decompose_command(o, out);
    if (ver->parsed()) return verify_command(o, out, err);
    return census_command(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace chaincodes::cli

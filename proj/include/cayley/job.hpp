// Copyright 2026 The cayley-spectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAYLEY_JOB_HPP
#define CAYLEY_JOB_HPP

// Job specifications (schema "v1") and the command runner behind the
// cayley-spectra executable. Output is deterministic: ordered JSON keys, no
// timestamps, and every enumeration in index order.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cayley/characters.hpp"
#include "cayley/cyclotomic.hpp"
#include "cayley/error.hpp"
#include "cayley/galois.hpp"
#include "cayley/group.hpp"
#include "cayley/oracle.hpp"
#include "cayley/spectra.hpp"

namespace cayley {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "v1";
inline constexpr std::size_t kDefaultSweepLimit = 14;

enum class Command { kSpectrum, kClasses, kCheckIntegrality, kCheckTheorem1, kCheckTheorem2, kCharacterTable, kVerifyAll };
enum class OracleMode { kAuto, kOn, kOff };
enum class OutputFormat { kJson, kTable };

struct ConnectionSpec {
  enum class Kind { kClasses, kElements, kAllNonIdentity, kSweep };
  Kind kind = Kind::kSweep;
  std::vector<std::uint32_t> classes;
  std::vector<Element> element_indices;
  std::vector<std::string> element_labels;  // cycle notation, resolved against the group
};

struct GammaSpec {
  enum class Kind { kRational, kSplitting, kGenerators };
  Kind kind = Kind::kRational;
  std::vector<long long> generators;
};

struct JobSpec {
  GroupSpec group;
  std::optional<ConnectionSpec> connection;
  GammaSpec gamma;
  Command command = Command::kVerifyAll;
  OracleMode oracle = OracleMode::kAuto;
  double tolerance = oracle::kDefaultTolerance;
  OutputFormat output = OutputFormat::kJson;
  std::size_t group_cap = kDefaultGroupCap;
  std::size_t oracle_cap = oracle::kDefaultOracleCap;
  std::size_t sweep_limit = kDefaultSweepLimit;
};

// ---------------------------------------------------------------------------
// Parsing

inline Command parse_command(const std::string& s) {
  if (s == "spectrum") return Command::kSpectrum;
  if (s == "classes") return Command::kClasses;
  if (s == "check-integrality") return Command::kCheckIntegrality;
  if (s == "check-theorem1") return Command::kCheckTheorem1;
  if (s == "check-theorem2") return Command::kCheckTheorem2;
  if (s == "character-table") return Command::kCharacterTable;
  if (s == "verify-all") return Command::kVerifyAll;
  throw InputError("command: unknown command '" + s + "'");
}

inline std::string command_name(Command c) {
  switch (c) {
    case Command::kSpectrum: return "spectrum";
    case Command::kClasses: return "classes";
    case Command::kCheckIntegrality: return "check-integrality";
    case Command::kCheckTheorem1: return "check-theorem1";
    case Command::kCheckTheorem2: return "check-theorem2";
    case Command::kCharacterTable: return "character-table";
    case Command::kVerifyAll: return "verify-all";
  }
  return "?";
}

inline OracleMode parse_oracle_mode(const std::string& s) {
  if (s == "auto") return OracleMode::kAuto;
  if (s == "on") return OracleMode::kOn;
  if (s == "off") return OracleMode::kOff;
  throw InputError("oracle: expected auto, on or off, got '" + s + "'");
}

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::kJson;
  if (s == "table") return OutputFormat::kTable;
  throw InputError("output: expected json or table, got '" + s + "'");
}

namespace detail {

// "cyclic(6)", "elementary-abelian(3,2)", "quaternion"
inline GroupSpec parse_family_shorthand(const std::string& s) {
  const auto open = s.find('(');
  if (open == std::string::npos) return GroupSpec::named(s);
  if (s.back() != ')') throw InputError("group: malformed family '" + s + "'");
  std::vector<int> params;
  std::stringstream in(s.substr(open + 1, s.size() - open - 2));
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      params.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("group: bad parameter '" + item + "' in '" + s + "'");
    }
  }
  return GroupSpec::named(s.substr(0, open), params);
}

inline GroupSpec parse_group(const Json& j) {
  if (j.is_string()) return parse_family_shorthand(j.get<std::string>());
  if (!j.is_object()) throw InputError("group: expected an object or a family string");
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) throw InputError("group.generators: expected an array of strings");
    std::vector<std::string> gens;
    for (const auto& g : j["generators"]) {
      if (!g.is_string()) throw InputError("group.generators: expected cycle notation strings");
      gens.push_back(g.get<std::string>());
    }
    return GroupSpec::from_generators(std::move(gens));
  }
  if (j.contains("family")) {
    if (!j["family"].is_string()) throw InputError("group.family: expected a string");
    std::vector<int> params;
    if (j.contains("params")) {
      if (!j["params"].is_array()) throw InputError("group.params: expected an array of integers");
      for (const auto& p : j["params"]) {
        if (!p.is_number_integer()) throw InputError("group.params: expected integers");
        params.push_back(p.get<int>());
      }
    } else if (j.contains("param")) {
      if (!j["param"].is_number_integer()) throw InputError("group.param: expected an integer");
      params.push_back(j["param"].get<int>());
    }
    return GroupSpec::named(j["family"].get<std::string>(), params);
  }
  if (j.contains("product")) {
    const Json& f = j["product"];
    if (!f.is_array() || f.size() < 2) throw InputError("group.product: expected at least two factors");
    GroupSpec acc = parse_group(f[0]);
    for (std::size_t i = 1; i < f.size(); ++i) acc = GroupSpec::product(std::move(acc), parse_group(f[i]));
    return acc;
  }
  throw InputError("group: expected one of 'generators', 'family' or 'product'");
}

inline ConnectionSpec parse_connection(const Json& j) {
  ConnectionSpec c;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "sweep") c.kind = ConnectionSpec::Kind::kSweep;
    else if (s == "all-nonidentity") c.kind = ConnectionSpec::Kind::kAllNonIdentity;
    else throw InputError("connection: unknown mode '" + s + "'");
    return c;
  }
  if (j.is_object() && j.contains("classes")) {
    c.kind = ConnectionSpec::Kind::kClasses;
    if (!j["classes"].is_array()) throw InputError("connection.classes: expected an array");
    for (const auto& v : j["classes"]) {
      if (!v.is_number_unsigned()) throw InputError("connection.classes: expected class indices");
      c.classes.push_back(v.get<std::uint32_t>());
    }
    return c;
  }
  if (j.is_object() && j.contains("elements")) {
    c.kind = ConnectionSpec::Kind::kElements;
    if (!j["elements"].is_array()) throw InputError("connection.elements: expected an array");
    for (const auto& v : j["elements"]) {
      if (v.is_number_unsigned()) c.element_indices.push_back(v.get<Element>());
      else if (v.is_string()) c.element_labels.push_back(v.get<std::string>());
      else throw InputError("connection.elements: expected indices or cycle notation");
    }
    return c;
  }
  throw InputError("connection: expected {\"classes\":[...]}, {\"elements\":[...]}, \"all-nonidentity\" or \"sweep\"");
}

inline GammaSpec parse_gamma(const Json& j) {
  GammaSpec g;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "rational") g.kind = GammaSpec::Kind::kRational;
    else if (s == "splitting") g.kind = GammaSpec::Kind::kSplitting;
    else throw InputError("gamma: unknown field shorthand '" + s + "'");
    return g;
  }
  if (j.is_object() && j.contains("generators") && j["generators"].is_array()) {
    g.kind = GammaSpec::Kind::kGenerators;
    for (const auto& v : j["generators"]) {
      if (!v.is_number_integer()) throw InputError("gamma.generators: expected integers");
      g.generators.push_back(v.get<long long>());
    }
    return g;
  }
  throw InputError("gamma: expected {\"generators\":[...]}, \"rational\" or \"splitting\"");
}

template <typename T>
T get_positive(const Json& j, const char* field) {
  if (!j.is_number_unsigned() || j.get<T>() == 0)
    throw InputError(std::string(field) + ": expected a positive integer");
  return j.get<T>();
}

}  // namespace detail

inline JobSpec parse_job(const Json& j) {
  if (!j.is_object()) throw InputError("job: expected a JSON object");
  if (j.contains("v") && j["v"] != kSchemaVersion)
    throw InputError("v: unsupported schema version (expected \"v1\")");
  JobSpec job;
  if (!j.contains("group")) throw InputError("group: missing");
  job.group = detail::parse_group(j["group"]);
  if (j.contains("connection")) job.connection = detail::parse_connection(j["connection"]);
  if (j.contains("gamma")) job.gamma = detail::parse_gamma(j["gamma"]);
  if (j.contains("command")) {
    if (!j["command"].is_string()) throw InputError("command: expected a string");
    job.command = parse_command(j["command"].get<std::string>());
  }
  if (j.contains("oracle")) {
    if (!j["oracle"].is_string()) throw InputError("oracle: expected a string");
    job.oracle = parse_oracle_mode(j["oracle"].get<std::string>());
  }
  if (j.contains("tolerance")) {
    if (!j["tolerance"].is_number() || j["tolerance"].get<double>() <= 0)
      throw InputError("tolerance: expected a positive number");
    job.tolerance = j["tolerance"].get<double>();
  }
  if (j.contains("output")) {
    if (!j["output"].is_string()) throw InputError("output: expected a string");
    job.output = parse_output_format(j["output"].get<std::string>());
  }
  if (j.contains("cap")) job.group_cap = detail::get_positive<std::size_t>(j["cap"], "cap");
  if (j.contains("oracle_cap")) job.oracle_cap = detail::get_positive<std::size_t>(j["oracle_cap"], "oracle_cap");
  if (j.contains("sweep_limit")) job.sweep_limit = detail::get_positive<std::size_t>(j["sweep_limit"], "sweep_limit");
  return job;
}

// ---------------------------------------------------------------------------
// Serialisation

namespace detail {

inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline double tidy(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

inline Json approx_json(std::complex<double> z) { return Json{{"re", tidy(z.real())}, {"im", tidy(z.imag())}}; }

inline std::string approx_string(std::complex<double> z) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << tidy(z.real());
  if (std::abs(z.imag()) >= 5e-7) out << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return out.str();
}

}  // namespace detail

inline Json cyc_json(const CycInt& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(detail::integer_json(c));
  return Json{{"m", a.conductor()}, {"coeffs", coeffs}};
}

inline Json spectrum_json(const Spectrum& sp) {
  Json out = Json::array();
  for (const auto& e : sp.entries) {
    Json entry{{"character", e.character}, {"degree", e.degree}, {"multiplicity", e.multiplicity}};
    if (e.rational)
      entry["value"] = Json{{"rational", e.rational->to_string()}};
    else
      entry["value"] = Json{{"cyclotomic", cyc_json(e.numerator)}, {"degree_divisor", e.degree}};
    entry["approx"] = detail::approx_json(e.approx());
    out.push_back(std::move(entry));
  }
  return out;
}

inline Json character_table_json(const CharacterTable& ct) {
  Json chars = Json::array();
  for (std::size_t c = 0; c < ct.count(); ++c) {
    Json values = Json::array();
    for (const auto& v : ct.values[c]) {
      Json item = cyc_json(v);
      item["approx"] = detail::approx_json(v.to_complex());
      values.push_back(std::move(item));
    }
    chars.push_back(Json{{"index", c}, {"degree", ct.degrees[c]}, {"values", values}});
  }
  return Json{{"m", ct.m}, {"prime", ct.prime}, {"characters", chars}};
}

inline Json gamma_json(const GaloisSubgroup& gamma) {
  return Json{{"m", gamma.m}, {"generators", gamma.generators}, {"elements", gamma.elements}};
}

// ---------------------------------------------------------------------------
// Runner

namespace detail {

struct Context {
  const JobSpec& job;
  Group group;
  ClassData classes;
  std::optional<CharacterTable> table;

  explicit Context(const JobSpec& j) : job(j), group(build_group(j.group, BuildOptions{j.group_cap})),
                                       classes(conjugacy_classes(group)) {}

  const CharacterTable& characters() {
    if (!table) table = character_table(group, classes);
    return *table;
  }

  GaloisSubgroup gamma() const {
    const auto m = classes.modulus;
    switch (job.gamma.kind) {
      case GammaSpec::Kind::kRational: return unit_group(m);
      case GammaSpec::Kind::kSplitting: return trivial_subgroup(m);
      case GammaSpec::Kind::kGenerators: return subgroup_closure(m, job.gamma.generators);
    }
    return unit_group(m);
  }

  std::vector<ConnectionSet> connection_sets(bool default_sweep) const {
    ConnectionSpec spec;
    if (job.connection) spec = *job.connection;
    else if (!default_sweep) throw InputError("connection: missing (required by " + command_name(job.command) + ")");
    const std::size_t k = classes.count();
    switch (spec.kind) {
      case ConnectionSpec::Kind::kClasses:
        return {connection_from_classes(classes, spec.classes)};
      case ConnectionSpec::Kind::kElements: {
        std::vector<Element> elems = spec.element_indices;
        for (const auto& label : spec.element_labels) elems.push_back(group.find(label));
        return {connection_from_elements(group, classes, elems)};
      }
      case ConnectionSpec::Kind::kAllNonIdentity: {
        std::vector<std::uint32_t> all;
        for (std::uint32_t j = 1; j < k; ++j) all.push_back(j);
        return {connection_from_classes(classes, all)};
      }
      case ConnectionSpec::Kind::kSweep: {
        if (k > job.sweep_limit)
          throw InputError("connection: sweep needs at most " + std::to_string(job.sweep_limit) +
                           " classes, group has " + std::to_string(k));
        std::vector<ConnectionSet> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask)
          out.push_back(connection_from_mask(classes, mask << 1));
        return out;
      }
    }
    return {};
  }

  Json group_json() const {
    return Json{{"description", job.group.describe()},
                {"order", group.n},
                {"exponent", group.exponent},
                {"class_count", classes.count()}};
  }
};

inline Json connection_json(const ConnectionSet& c) {
  return Json{{"classes", c.class_indices}, {"size", c.size()}};
}

struct OracleResult {
  std::string backend;
  bool pass = false;
  Json detail;
};

inline std::optional<OracleResult> run_oracle(Context& ctx, const ConnectionSet& c, const Spectrum& sp) {
  const auto& job = ctx.job;
  if (job.oracle == OracleMode::kOff) return std::nullopt;
  const std::size_t n = ctx.group.n;
  if (n > job.oracle_cap) {
    if (job.oracle == OracleMode::kOn)
      throw InputError("oracle: group of order " + std::to_string(n) + " exceeds oracle_cap " +
                       std::to_string(job.oracle_cap));
    return std::nullopt;
  }
  const auto a = oracle::adjacency_matrix(ctx.group, c.elements, job.oracle_cap);
  OracleResult r;
  if (n <= oracle::kExactBackendLimit) {
    const auto ex = oracle::exact_check(a, sp, c);
    r.backend = "exact";
    r.pass = ex.ok();
    r.detail = Json{{"multiplicities", ex.multiplicities},
                    {"trace", ex.trace},
                    {"second_moment", ex.second_moment},
                    {"characteristic_polynomial", ex.characteristic_polynomial}};
  } else {
    const auto cmp = oracle::compare_spectra(sp, oracle::numeric_spectrum(a), job.tolerance);
    r.backend = "floating";
    r.pass = cmp.pass;
    r.detail = Json{{"max_distance", cmp.max_distance}, {"tolerance", job.tolerance}};
  }
  return r;
}

// Accumulates instance counts and the first failure of a named check.
struct CheckTally {
  explicit CheckTally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++instances;
    if (!ok && failures++ == 0) first_failure = what;
  }
  Json json() const {
    Json j{{"name", name}, {"instances", instances}, {"failures", failures}, {"passed", failures == 0}};
    if (failures) j["first_failure"] = first_failure;
    return j;
  }
};

inline std::string subset_label(const ConnectionSet& c) {
  std::string s = "C={";
  for (std::size_t i = 0; i < c.class_indices.size(); ++i)
    s += (i ? "," : "") + std::to_string(c.class_indices[i]);
  return s + "}";
}

inline std::vector<GaloisSubgroup> verification_subgroups(std::uint64_t m) {
  const auto units = unit_group(m);
  std::vector<GaloisSubgroup> subs;
  if (units.order() <= 24) {
    subs = all_subgroups(m);
  } else {
    subs = cyclic_subgroups(m);
    if (std::find(subs.begin(), subs.end(), units) == subs.end()) subs.push_back(units);
  }
  return subs;
}

inline Json verify_all(Context& ctx) {
  const Group& g = ctx.group;
  const ClassData& cd = ctx.classes;
  const std::uint64_t m = cd.modulus;
  std::vector<CheckTally> tallies;

  CheckTally axioms{"group-axioms"};
  axioms.record(check_group_axioms(g), "table axioms");
  tallies.push_back(axioms);

  CheckTally class_check{"class-data"};
  {
    bool ok = cd.representatives[0] == Group::identity && cd.size(0) == 1;
    for (std::size_t j = 0; j < cd.count(); ++j) {
      ok = ok && cd.inverse_class[cd.inverse_class[j]] == j;
      for (Element e : cd.classes[j])
        for (std::uint64_t t = 0; t < m; ++t)
          ok = ok && cd.class_of[power_of(e, static_cast<long long>(t), g)] ==
                         cd.power_class(j, static_cast<long long>(t));
    }
    class_check.record(ok, "class structure");
  }
  tallies.push_back(class_check);

  const CharacterTable& ct = ctx.characters();
  CheckTally ortho{"orthogonality"};
  ortho.record(check_orthogonality(ct, cd, g.n).ok(), "orthogonality relations");
  tallies.push_back(ortho);

  CheckTally galois_id{"galois-character-identity"};
  for (auto t : unit_group(m).elements)
    galois_id.record(verify_galois_character_identity(ct, cd, subgroup_closure(m, {static_cast<long long>(t)})),
                     "t=" + std::to_string(t));
  tallies.push_back(galois_id);

  std::vector<InducedCharacter> induced(cd.count());
  CheckTally induced_check{"induced-characters"};
  for (std::size_t j = 1; j < cd.count(); ++j) {
    induced[j] = induced_character_from_cyclic(cd.representatives[j], g, cd);
    bool ok = induced[j].values[0] == CycInt::from_integer(ct.ctx, Integer(g.n / induced[j].base_order));
    try {
      decompose(induced[j].values, ct, cd, g.n);
    } catch (const ConsistencyError&) {
      ok = false;
    }
    induced_check.record(ok, "x=" + g.label(cd.representatives[j]));
  }
  tallies.push_back(induced_check);

  const auto sets = ctx.connection_sets(/*default_sweep=*/true);
  const auto subgroups = verification_subgroups(m);
  std::vector<GammaClassification> gamma_classes;
  for (const auto& h : subgroups) gamma_classes.push_back(gamma_conjugacy_classes(g, cd, h));
  const auto rational_classes = gamma_conjugacy_classes(g, cd, unit_group(m));

  CheckTally integrality{"integrality"}, closed_classes{"power-closed-classes"}, field{"field-membership"}, theta{"theta-coefficients"};
  CheckTally oracle_numeric{"oracle-spectrum"};
  for (const auto& c : sets) {
    const std::string label = subset_label(c);
    const Spectrum sp = eigenvalues_via_characters(c, ct, cd);
    const bool integral = all_eigenvalues_integral(sp);
    const bool closed = is_power_closed(c.elements, g);
    integrality.record(integral == closed, label);

    const bool orbit_union = is_union_of_gamma_classes(c.class_indices, rational_classes);
    bool classes_ok = closed == orbit_union;
    if (g.n <= 60) classes_ok = classes_ok && oracle::oracle_power_closed(c.elements, g) == closed;
    closed_classes.record(classes_ok, label);

    for (std::size_t h = 0; h < subgroups.size(); ++h)
      field.record(all_eigenvalues_in_K(sp, subgroups[h]) ==
                    is_union_of_gamma_classes(c.class_indices, gamma_classes[h]),
                label + " gamma=" + gamma_json(subgroups[h])["elements"].dump());

    for (auto j : c.class_indices) {
      if (j == 0) continue;
      const Element x = cd.representatives[j];
      const auto tc = theta_coefficients(x, c, g, cd, induced[j]);
      bool ok = tc.a.size() > 1 && tc.a[1] > 0 && tc.reconstruction_matches;
      for (std::size_t h = 0; h < subgroups.size(); ++h)
        if (is_union_of_gamma_classes(c.class_indices, gamma_classes[h]))
          ok = ok && check_coefficient_symmetry(tc, subgroups[h]);
      theta.record(ok, label + " x=" + g.label(x));
    }

    if (auto r = run_oracle(ctx, c, sp)) oracle_numeric.record(r->pass, label + " backend=" + r->backend);
  }
  tallies.insert(tallies.end(), {integrality, closed_classes, field, theta});
  if (ctx.job.oracle != OracleMode::kOff) tallies.push_back(oracle_numeric);

  Json checks = Json::array();
  bool all = true;
  for (const auto& t : tallies) {
    checks.push_back(t.json());
    all = all && t.failures == 0;
  }
  return Json{{"subsets", sets.size()}, {"subgroups", subgroups.size()}, {"checks", checks}, {"passed", all}};
}

inline Json classes_json(const Context& ctx, const GaloisSubgroup& gamma) {
  const Group& g = ctx.group;
  const ClassData& cd = ctx.classes;
  Json list = Json::array();
  for (std::size_t j = 0; j < cd.count(); ++j) {
    const Element rep = cd.representatives[j];
    list.push_back(Json{{"index", j},
                        {"size", cd.size(j)},
                        {"representative", rep},
                        {"representative_cycles", g.label(rep)},
                        {"order", g.order_of(rep)},
                        {"inverse_class", cd.inverse_class[j]},
                        {"elements", cd.classes[j]}});
  }
  const auto gc = gamma_conjugacy_classes(g, cd, gamma);
  return Json{{"classes", list}, {"gamma", gamma_json(gamma)}, {"gamma_classes", gc.class_groups}};
}

inline bool execute(Context& ctx, Json& out) {
  const auto& job = ctx.job;
  out["group"] = ctx.group_json();
  switch (job.command) {
    case Command::kClasses: {
      const Json c = classes_json(ctx, ctx.gamma());
      for (auto it = c.begin(); it != c.end(); ++it) out[it.key()] = it.value();
      return true;
    }
    case Command::kCharacterTable: {
      out["character_table"] = character_table_json(ctx.characters());
      return true;
    }
    case Command::kSpectrum: {
      bool ok = true;
      Json results = Json::array();
      for (const auto& c : ctx.connection_sets(false)) {
        const Spectrum sp = eigenvalues_via_characters(c, ctx.characters(), ctx.classes);
        Json r{{"connection", connection_json(c)}, {"spectrum", spectrum_json(sp)}};
        if (auto o = run_oracle(ctx, c, sp)) {
          r["oracle"] = Json{{"backend", o->backend}, {"pass", o->pass}, {"detail", o->detail}};
          ok = ok && o->pass;
        }
        results.push_back(std::move(r));
      }
      out["results"] = results;
      return ok;
    }
    case Command::kCheckIntegrality:
    case Command::kCheckTheorem1: {
      bool ok = true;
      Json results = Json::array();
      for (const auto& c : ctx.connection_sets(false)) {
        const auto rep = check_theorem1(ctx.group, ctx.classes, c, ctx.characters());
        Json r{{"connection", connection_json(c)},
               {"integral", rep.integral},
               {"power_closed", rep.power_closed},
               {"agree", rep.agree()}};
        if (job.command == Command::kCheckTheorem1) {
          r["irrational_character"] = rep.irrational_character ? Json(*rep.irrational_character) : Json(nullptr);
          r["unclosed_element"] = rep.unclosed_element ? Json(*rep.unclosed_element) : Json(nullptr);
        }
        ok = ok && rep.agree();
        results.push_back(std::move(r));
      }
      out["results"] = results;
      out["all_agree"] = ok;
      return ok;
    }
    case Command::kCheckTheorem2: {
      bool ok = true;
      const auto gamma = ctx.gamma();
      out["gamma"] = gamma_json(gamma);
      Json results = Json::array();
      for (const auto& c : ctx.connection_sets(false)) {
        const auto rep = check_theorem2(ctx.group, ctx.classes, c, ctx.characters(), gamma);
        results.push_back(Json{{"connection", connection_json(c)},
                               {"in_field", rep.in_field},
                               {"union_of_gamma_classes", rep.union_of_gamma_classes},
                               {"agree", rep.agree()},
                               {"moved_character", rep.moved_character ? Json(*rep.moved_character) : Json(nullptr)},
                               {"split_class", rep.split_class ? Json(*rep.split_class) : Json(nullptr)}});
        ok = ok && rep.agree();
      }
      out["results"] = results;
      out["all_agree"] = ok;
      return ok;
    }
    case Command::kVerifyAll: {
      const Json v = verify_all(ctx);
      for (auto it = v.begin(); it != v.end(); ++it) out[it.key()] = it.value();
      return v["passed"].get<bool>();
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Table rendering

inline std::string yes_no(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

inline void render_table(const Json& r, const Context* ctx, std::ostream& os) {
  const Json& grp = r["group"];
  os << "group " << grp["description"].get<std::string>() << "  order " << grp["order"]
     << "  exponent " << grp["exponent"] << "  classes " << grp["class_count"] << "\n";
  const std::string cmd = r["command"];
  if (cmd == "classes") {
    os << std::left << std::setw(7) << "class" << std::setw(7) << "size" << std::setw(7) << "order"
       << std::setw(9) << "inverse" << "representative\n";
    for (const auto& c : r["classes"])
      os << std::setw(7) << c["index"].get<std::size_t>() << std::setw(7) << c["size"].get<std::size_t>()
         << std::setw(7) << c["order"].get<std::size_t>() << std::setw(9) << c["inverse_class"].get<std::size_t>()
         << c["representative_cycles"].get<std::string>() << "\n";
    os << "gamma " << r["gamma"]["elements"].dump() << " classes " << r["gamma_classes"].dump() << "\n";
  } else if (cmd == "character-table" && ctx) {
    const auto& ct = *ctx->table;
    for (std::size_t c = 0; c < ct.count(); ++c) {
      os << "chi_" << c << " (degree " << ct.degrees[c] << "):";
      for (const auto& v : ct.values[c]) os << "  " << v.to_string() << " ~ " << approx_string(v.to_complex());
      os << "\n";
    }
  } else if (cmd == "spectrum" && ctx) {
    for (const auto& res : r["results"]) {
      os << "connection classes " << res["connection"]["classes"].dump() << "\n";
      for (const auto& e : res["spectrum"]) {
        std::string exact;
        if (e["value"].contains("rational")) {
          exact = e["value"]["rational"].get<std::string>();
        } else {
          const auto& cyc = e["value"]["cyclotomic"];
          std::vector<Integer> coeffs;
          for (const auto& v : cyc["coeffs"])
            coeffs.push_back(v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<std::int64_t>()));
          const CycInt num = CycInt::reduce(coeffs, ctx->table->ctx);
          exact = "(" + num.to_string() + ")/" + std::to_string(e["degree"].get<std::int64_t>());
        }
        const std::complex<double> z(e["approx"]["re"].get<double>(), e["approx"]["im"].get<double>());
        os << "  chi_" << e["character"] << "  x" << e["multiplicity"] << "  " << exact << "  ~ "
           << approx_string(z) << "\n";
      }
      if (res.contains("oracle"))
        os << "  oracle (" << res["oracle"]["backend"].get<std::string>() << "): "
           << (res["oracle"]["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    }
  } else if (cmd == "verify-all") {
    for (const auto& c : r["checks"]) {
      os << (c["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") << std::left << std::setw(28)
         << c["name"].get<std::string>() << c["instances"] << " instances, " << c["failures"] << " failures";
      if (c.contains("first_failure")) os << " (first: " << c["first_failure"].get<std::string>() << ")";
      os << "\n";
    }
    os << (r["passed"].get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
  } else if (r.contains("results")) {
    if (r.contains("gamma")) os << "gamma " << r["gamma"]["elements"].dump() << "\n";
    for (const auto& res : r["results"]) {
      os << "classes " << std::left << std::setw(24) << res["connection"]["classes"].dump();
      for (auto it = res.begin(); it != res.end(); ++it) {
        if (it.key() == "connection") continue;
        os << "  " << it.key() << "=" << (it.value().is_boolean() ? yes_no(it.value()) : it.value().dump());
      }
      os << "\n";
    }
  }
}

}  // namespace detail

struct RunResult {
  int exit_code = 0;
  Json json;
};

/// Runs a single job and returns its JSON result; exit code 0 when every
/// check passed, 1 on a check failure.
inline RunResult run_job(const JobSpec& job, std::ostream* table_out = nullptr) {
  detail::Context ctx(job);
  RunResult r;
  r.json = Json{{"v", kSchemaVersion}, {"command", command_name(job.command)}};
  bool ok = false;
  try {
    ok = detail::execute(ctx, r.json);
  } catch (const ConsistencyError& e) {
    r.json["consistency_error"] = e.what();
    ok = false;
  }
  r.exit_code = ok ? 0 : 1;
  if (table_out) detail::render_table(r.json, &ctx, *table_out);
  return r;
}

/// Runs a document that is either one job or {"jobs": [...]}; writes JSON or
/// table output and returns the process exit code (2 on input errors).
inline int run(const Json& document, std::ostream& out, std::ostream& err,
               const std::function<void(JobSpec&)>& override_fields = {}) {
  try {
    std::vector<JobSpec> jobs;
    const bool batch = document.is_object() && document.contains("jobs");
    if (batch) {
      if (!document["jobs"].is_array()) throw InputError("jobs: expected an array");
      for (const auto& j : document["jobs"]) jobs.push_back(parse_job(j));
    } else {
      jobs.push_back(parse_job(document));
    }
    for (auto& j : jobs)
      if (override_fields) override_fields(j);

    int code = 0;
    Json results = Json::array();
    for (const auto& job : jobs) {
      const bool table = job.output == OutputFormat::kTable;
      std::ostringstream buffer;
      RunResult r = run_job(job, table ? &buffer : nullptr);
      code = std::max(code, r.exit_code);
      if (table) out << buffer.str();
      else results.push_back(std::move(r.json));
    }
    if (!results.empty()) {
      if (batch) out << Json{{"v", kSchemaVersion}, {"results", results}}.dump(2) << "\n";
      else out << results[0].dump(2) << "\n";
    }
    return code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cayley

#endif  // CAYLEY_JOB_HPP

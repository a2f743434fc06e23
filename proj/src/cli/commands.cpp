#include "frobcalc/cli/commands.hpp"

#include <functional>
#include <map>
#include <set>

#include "frobcalc/errors.hpp"
#include "frobcalc/frobenius/frobenius.hpp"
#include "frobcalc/fsing/fsing.hpp"
#include "frobcalc/nafield/io.hpp"
#include "frobcalc/polyring/groebner.hpp"
#include "frobcalc/polyring/io.hpp"
#include "frobcalc/random.hpp"
#include "frobcalc/tate/division.hpp"
#include "frobcalc/tate/io.hpp"
#include "frobcalc/tate/split.hpp"

namespace frobcalc::cli {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Request schema

enum class Kind { String, Integer, Boolean, StringList, RationalText };

struct FieldSpec {
  std::string name;
  Kind kind;
  /// Null for required fields.
  std::function<json(const json&)> fallback;
};

json required(const json&) { return nullptr; }
std::function<json(const json&)> value(json v) {
  return [v](const json&) { return v; };
}
json precision_default(const json&) { return default_precision(); }

struct CommandSpec {
  std::vector<FieldSpec> fields;
  std::function<json(const json&, int&)> handler;
};

const std::map<std::string, CommandSpec>& registry();

void check_kind(const std::string& command, const FieldSpec& f, const json& v) {
  bool ok = false;
  switch (f.kind) {
    case Kind::String:
      ok = v.is_string();
      break;
    case Kind::Integer:
      ok = v.is_number_integer();
      break;
    case Kind::Boolean:
      ok = v.is_boolean();
      break;
    case Kind::StringList:
      ok = v.is_array() && std::all_of(v.begin(), v.end(), [](const json& s) { return s.is_string(); });
      break;
    case Kind::RationalText:
      ok = v.is_string() || v.is_number_integer();
      break;
  }
  if (!ok) throw ParseError(command + ": field '" + f.name + "' has the wrong type");
}

// ---------------------------------------------------------------------------
// Shared helpers

std::int64_t get_int(const json& req, const char* key) { return req.at(key).get<std::int64_t>(); }

std::uint32_t get_small(const json& req, const char* key, std::int64_t lo, std::int64_t hi) {
  const std::int64_t v = get_int(req, key);
  if (v < lo || v > hi) {
    throw DomainError("field '" + std::string(key) + "' = " + std::to_string(v) + " must lie in [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<std::uint32_t>(v);
}

RingPtr ring_of(const json& req) { return parse_ring(req.at("ring").get<std::string>()); }

Ideal ideal_of(const RingPtr& ring, const json& req, const char* key = "ideal") {
  return parse_ideal(ring, req.at(key).get<std::string>());
}

Execution execution_of(const json& req) { return req.at("parallel").get<bool>() ? Execution::Parallel : Execution::Serial; }

BracketExponent exponent_of(const json& req) { return BracketExponent(get_small(req, "e", 1, 62)); }

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& f : polys) out.push_back(f.to_string());
  return out;
}

json basis_strings(const Ideal& i) { return strings(i.groebner_basis()); }

json point_json(std::span<const Coeff> pt) { return json(std::vector<Coeff>(pt.begin(), pt.end())); }

std::int64_t precision_of(const json& req) { return get_small(req, "precision", 1, 100000); }

// ---------------------------------------------------------------------------
// polyring / frobenius

json cmd_gb(const json& req, int&) {
  RingPtr ring = ring_of(req);
  Ideal i = ideal_of(ring, req);
  return {{"ring", ring_to_json(*ring)}, {"generators", strings(i.generators())}, {"groebner_basis", basis_strings(i)}};
}

json cmd_colon(const json& req, int&) {
  RingPtr ring = ring_of(req);
  ColonResult c = colon(ideal_of(ring, req), ideal_of(ring, req, "divisor"));
  return {{"colon", basis_strings(c.ideal)}, {"divisor_was_zero", c.divisor_was_zero}};
}

json cmd_intersect(const json& req, int&) {
  RingPtr ring = ring_of(req);
  std::vector<Ideal> ideals;
  for (const auto& s : req.at("ideals")) ideals.push_back(parse_ideal(ring, s.get<std::string>()));
  return {{"intersection", basis_strings(intersect(ideals, ring))}, {"empty_list", ideals.empty()}};
}

json cmd_bracket(const json& req, int&) {
  RingPtr ring = ring_of(req);
  BracketExponent e = exponent_of(req);
  Ideal i = ideal_of(ring, req);
  Ideal power = bracket_power(i, e);
  return {{"e", e.e()},
          {"q", e.q(ring->characteristic())},
          {"generators", strings(power.generators())},
          {"groebner_basis", basis_strings(power)}};
}

json decomposition_json(const Polynomial& g, BracketExponent e) {
  json table = json::array();
  const FrobeniusDecomposition dec = frobenius_decompose(g, e);
  for (const auto& [a, entry] : dec.table()) {
    table.push_back({{"basis_monomial", monomial_to_string(a, g.ring()->names())}, {"entry", entry.to_string()}});
  }
  return {{"polynomial", g.to_string()}, {"table", table}};
}

json cmd_frobroot(const json& req, int&) {
  RingPtr ring = ring_of(req);
  BracketExponent e = exponent_of(req);
  Ideal i = ideal_of(ring, req);
  json decompositions = json::array();
  for (const auto& g : i.groebner_basis()) decompositions.push_back(decomposition_json(g, e));
  return {{"e", e.e()},
          {"q", e.q(ring->characteristic())},
          {"groebner_basis", basis_strings(i)},
          {"decompositions", decompositions},
          {"root", basis_strings(frobenius_root(i, e))}};
}

json cmd_trace(const json& req, int&) {
  RingPtr ring = ring_of(req);
  BracketExponent e = exponent_of(req);
  TraceResult t = trace_ideal(ideal_of(ring, req), e, req.at("enumerate").get<bool>());
  json out = {{"e", e.e()}, {"q", t.q}, {"trace", basis_strings(t.trace)}};
  if (t.functionals) {
    json table = json::array();
    for (const auto& f : *t.functionals) {
      if (f.generators.empty()) continue;
      table.push_back({{"basis_monomial", monomial_to_string(f.functional.basis_monomial, ring->names())},
                       {"image", strings(f.generators)}});
    }
    out["functionals"] = table;
    out["sum_of_images"] = basis_strings(*t.sum_of_images);
    out["sum_equals_root"] = *t.sum_of_images == t.trace;
  } else {
    out["functionals"] = nullptr;
    out["enumeration"] = "skipped: q^n exceeds " + std::to_string(kTraceEnumerationCap);
  }
  return out;
}

// ---------------------------------------------------------------------------
// fsing

QuotientPresentation presentation_of(const RingPtr& ring, const json& req) {
  return QuotientPresentation{ideal_of(ring, req)};
}

json cmd_fedder(const json& req, int&) {
  RingPtr ring = ring_of(req);
  BracketExponent e = exponent_of(req);
  QuotientPresentation pres = presentation_of(ring, req);
  Polynomial r = parse_polynomial(ring, req.at("r").get<std::string>());
  std::vector<Coeff> pt = parse_point(ring, req.at("point").get<std::string>());
  bool pure = fedder_pure_at(pres, r, std::span<const Coeff>(pt), e);
  return {{"e", e.e()},
          {"q", e.q(ring->characteristic())},
          {"point", point_json(pt)},
          {"colon", basis_strings(fedder_colon(pres, e))},
          {"pure", pure}};
}

json cmd_fpure_locus(const json& req, int&) {
  RingPtr ring = ring_of(req);
  BracketExponent e = exponent_of(req);
  QuotientPresentation pres = presentation_of(ring, req);
  Polynomial r = parse_polynomial(ring, req.at("r").get<std::string>());
  LocusOptions opts{false, execution_of(req), static_cast<std::uint64_t>(get_int(req, "max_points"))};
  LocusReport rep = pure_locus(pres, r, e, opts);
  json out = {{"e", e.e()},
              {"q", e.q(ring->characteristic())},
              {"locus_ideal", basis_strings(rep.locus_ideal)},
              {"pure_everywhere", rep.pure_everywhere}};
  if (req.at("scan").get<bool>()) {
    std::uint64_t total = 1;
    bool fits = true;
    for (std::size_t v = 0; v < ring->nvars() && fits; ++v) {
      total *= ring->characteristic();
      fits = total <= opts.max_points;
    }
    if (fits) {
      json table = json::array();
      for (const auto& pv : scan_locus(rep.locus_ideal, pres.defining_ideal, opts.execution, opts.max_points)) {
        table.push_back({{"point", point_json(pv.point)}, {"pure", pv.pure}});
      }
      out["rational_points"] = table;
    } else {
      out["rational_points"] = nullptr;
      out["scan"] = "skipped: more than " + std::to_string(opts.max_points) + " points";
    }
  }
  return out;
}

json cmd_split_test(const json& req, int&) {
  RingPtr ring = ring_of(req);
  BracketExponent e = exponent_of(req);
  QuotientPresentation pres = presentation_of(ring, req);
  Polynomial r = parse_polynomial(ring, req.at("r").get<std::string>());
  SplitResult s = split_element_test(pres, r, e);
  json cert = nullptr;
  if (s.certificate) {
    cert = {{"multiplier", s.certificate->multiplier.to_string()},
            {"functional", monomial_to_string(s.certificate->functional.basis_monomial, ring->names())},
            {"value", s.certificate->value.to_string()}};
  }
  return {{"e", e.e()},
          {"q", e.q(ring->characteristic())},
          {"splits", s.splits},
          {"locus_ideal", basis_strings(s.locus_ideal)},
          {"certificate", cert}};
}

json cmd_filtration(const json& req, int& exit_code) {
  const std::uint32_t p = get_small(req, "p", 2, kMaxPrime - 1);
  const std::uint32_t c = get_small(req, "c", 1, kMaxVariables - 1);
  const std::uint32_t b = get_small(req, "b", 1, 1000);
  const std::uint32_t n = get_small(req, "nvars", 1, kMaxVariables - 1);
  std::vector<std::string> names;
  for (std::uint32_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr ring = make_ring(p, names);
  FiltrationReport rep = filtration_verify(c, b, ring, execution_of(req));
  json steps = json::array();
  for (const auto& s : rep.steps) {
    steps.push_back({{"alpha", s.alpha},
                     {"colon", basis_strings(s.colon)},
                     {"colon_ok", s.colon_ok},
                     {"generation_ok", s.generation_ok}});
  }
  if (!rep.all_pass) exit_code = kInternalError;
  return {{"ring", ring->descriptor()},
          {"steps", steps},
          {"step_count", rep.steps.size()},
          {"all_pass", rep.all_pass},
          {"quotient_dimension", rep.quotient_dimension ? json(*rep.quotient_dimension) : json(nullptr)},
          {"dimension_ok", rep.dimension_ok}};
}

json cmd_uniform_e(const json& req, int&) {
  RingPtr ring = ring_of(req);
  Polynomial f = parse_polynomial(ring, req.at("f").get<std::string>());
  const std::uint32_t cap = get_small(req, "cap", 1, 62);
  const std::uint32_t e = uniform_exponent(f, cap);
  json roots = json::array();
  for (std::uint32_t k = 1; k <= e; ++k) roots.push_back(basis_strings(frobenius_root(Ideal(ring, {f}), BracketExponent(k))));
  return {{"e", e}, {"q", BracketExponent(e).q(ring->characteristic())}, {"roots", roots}};
}

// ---------------------------------------------------------------------------
// nafield / tate

RestrictedSeries series_of(const json& req, const char* key, std::uint32_t d, std::size_t nvars = 0) {
  return parse_series(get_small(req, "p", 2, kMaxPrime - 1), req.at(key).get<std::string>(), d, nvars,
                      precision_of(req));
}

json cmd_gauss_norm(const json& req, int&) {
  const std::uint32_t d = get_small(req, "d", 1, 1 << 20);
  RestrictedSeries f = series_of(req, "series", d, get_small(req, "nvars", 0, kMaxVariables));
  return {{"series", series_to_json(f)}, {"gauss_valuation", valuation_to_json(gauss_valuation(f).valuation)}};
}

json cmd_t1_div(const json& req, int& exit_code) {
  const std::uint32_t d = get_small(req, "d", 1, 1 << 20);
  RestrictedSeries f = series_of(req, "f", d, 1);
  RestrictedSeries g = series_of(req, "g", d, 1);
  T1Division div = euclid_div_T1(f, g, precision_of(req));
  // The identity f = q g + r modulo t^P, on stored representatives.
  const std::uint32_t dd = div.quotient.ramification();
  const RestrictedSeries& q = div.quotient;
  std::map<Monomial, LaurentElement> resid;
  auto add = [&](const Monomial& m, const LaurentElement& c) {
    auto [it, inserted] = resid.emplace(m, c);
    if (!inserted) it->second = it->second + c;
  };
  const RestrictedSeries f_ref = f.refined(dd);
  const RestrictedSeries g_ref = g.refined(dd);
  for (const auto& [m, c] : f_ref.terms()) add(m, c.exact_representative());
  for (const auto& [m, c] : div.remainder.terms()) add(m, -c.exact_representative());
  for (const auto& [mq, cq] : q.terms()) {
    for (const auto& [mg, cg] : g_ref.terms()) add(mq * mg, -(cq.exact_representative() * cg.exact_representative()));
  }
  Valuation worst = Valuation::infinity();
  for (const auto& [m, c] : resid) worst = std::min(worst, c.valuation());
  const bool identity = worst >= Valuation(Rational(div.precision_units, dd));
  if (!identity) exit_code = kInternalError;
  return {{"quotient", series_to_json(div.quotient)},
          {"remainder", series_to_json(div.remainder)},
          {"n_g", div.n_g},
          {"precision", rational_to_json(Rational(div.precision_units, dd))},
          {"rounds", div.rounds},
          {"identity_holds", identity}};
}

json cmd_tate_split(const json& req, int&) {
  const std::uint32_t p = get_small(req, "p", 2, kMaxPrime - 1);
  const std::uint32_t d = get_small(req, "d", 1, 1 << 20);
  RestrictedSeries f = series_of(req, "f", d, get_small(req, "nvars", 0, kMaxVariables));
  if (f.ramification() != p && f.ramification() != 1) {
    throw DomainError("tate-split needs coefficients in F_p((t^(1/p))); the input needs ramification " +
                      std::to_string(f.ramification()));
  }
  const Rational w = parse_rational(req.at("w").get<std::string>());
  SplitCertificate cert = frobenius_split_approximant(f, w, execution_of(req));
  json basis = json::array();
  for (std::size_t i = 0; i < cert.basis.vectors.size(); ++i) {
    basis.push_back({{"vector", laurent_to_json(cert.basis.vectors[i])},
                     {"valuation", valuation_to_json(cert.basis.vectors[i].valuation())},
                     {"class", cert.basis.classes[i]}});
  }
  json functionals = json::array();
  for (const auto& v : cert.functional_values) functionals.push_back(series_to_json(v));
  return {{"series", series_to_json(f.refined(p))},
          {"epsilon_valuation", rational_to_string(cert.epsilon_valuation)},
          {"truncation", series_to_json(cert.truncation)},
          {"basis", basis},
          {"orthogonality_constant", cert.basis.t_constant},
          {"functional_values", functionals},
          {"approximant", series_to_json(cert.approximant)},
          {"error_valuation", valuation_to_json(cert.error_valuation)},
          {"error_precision", rational_to_string(cert.error_precision)},
          {"bound", "v(f - g) > w - 1"},
          {"bound_holds", cert.bound_holds},
          {"sharp_bound_holds", cert.sharp_bound_holds}};
}

// ---------------------------------------------------------------------------
// selftest

json cmd_selftest(const json& req, int& exit_code) {
  gen::Rng rng(static_cast<std::uint64_t>(get_int(req, "seed")));
  const std::uint32_t trials = get_small(req, "trials", 1, 10000);
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, const std::function<bool()>& check) {
    std::uint32_t passed = 0;
    for (std::uint32_t k = 0; k < trials; ++k) passed += check() ? 1 : 0;
    all = all && passed == trials;
    checks.push_back({{"name", name}, {"trials", trials}, {"passed", passed}});
  };

  RingPtr r3 = make_ring(3, {"x", "y"});
  RingPtr r2 = make_ring(2, {"x", "y"});
  record("groebner_idempotent", [&] {
    Ideal i = gen::ideal(rng, r3, 3, 3, 3);
    return Ideal(r3, i.groebner_basis()).groebner_basis() == i.groebner_basis();
  });
  record("frobenius_reassembly", [&] {
    Polynomial f = gen::polynomial(rng, r3, 7, 6);
    return frobenius_decompose(f, BracketExponent(1)).reassemble() == f;
  });
  record("root_of_bracket_power", [&] {
    Ideal i = gen::ideal(rng, r2, 2, 2, 3);
    return frobenius_root(bracket_power(i, BracketExponent(1)), BracketExponent(1)) == i;
  });
  record("fedder_local_global", [&] {
    Polynomial f = gen::nonzero_polynomial(rng, r2, 3, 4);
    if (f.is_unit()) return true;
    QuotientPresentation pres{Ideal(r2, {f})};
    Polynomial one = Polynomial::constant(r2, 1);
    Ideal locus = locus_ideal(pres, one, BracketExponent(1));
    for (const auto& pv : scan_locus(locus, pres.defining_ideal, Execution::Serial)) {
      if (fedder_pure_at(pres, one, std::span<const Coeff>(pv.point), BracketExponent(1)) != pv.pure) return false;
    }
    return true;
  });
  record("ultrametric", [&] {
    LaurentElement x = gen::laurent(rng, 3, 3, -6, 6, 4);
    LaurentElement y = gen::laurent(rng, 3, 3, -6, 6, 4);
    const Valuation s = (x + y).valuation();
    const bool strict = x.valuation() == y.valuation() || s == std::min(x.valuation(), y.valuation());
    return (x * y).valuation() == x.valuation() + y.valuation() && s >= std::min(x.valuation(), y.valuation()) &&
           strict;
  });
  record("gauss_multiplicative", [&] {
    RestrictedSeries f = gen::series(rng, 2, 2, 2, 3, 128, -4, 8, 3);
    RestrictedSeries g = gen::series(rng, 2, 2, 2, 3, 128, -4, 8, 3);
    TateProduct prod = tate_mul(f, g);
    return !prod.leading_part_survives ||
           gauss_valuation(prod.product).valuation == gauss_valuation(f).valuation + gauss_valuation(g).valuation;
  });
  record("split_bound", [&] {
    RestrictedSeries f = gen::series(rng, 2, 2, 1, 4, 64, -2, 10, 3);
    const Rational w(gen::uniform(rng, 0, 3));
    return frobenius_split_approximant(f, w).bound_holds;
  });
  if (!all) exit_code = kInternalError;
  return {{"checks", checks}, {"all_passed", all}};
}

// ---------------------------------------------------------------------------

const std::map<std::string, CommandSpec>& registry() {
  static const std::map<std::string, CommandSpec> table = [] {
    const FieldSpec ring{"ring", Kind::String, required};
    const FieldSpec ideal{"ideal", Kind::String, required};
    const FieldSpec e{"e", Kind::Integer, value(1)};
    const FieldSpec r{"r", Kind::String, value("1")};
    const FieldSpec parallel{"parallel", Kind::Boolean, value(false)};
    const FieldSpec p{"p", Kind::Integer, required};
    const FieldSpec precision{"precision", Kind::Integer, precision_default};
    const FieldSpec d1{"d", Kind::Integer, value(1)};
    std::map<std::string, CommandSpec> m;
    m["gb"] = {{ring, ideal}, cmd_gb};
    m["colon"] = {{ring, ideal, {"divisor", Kind::String, required}}, cmd_colon};
    m["intersect"] = {{ring, {"ideals", Kind::StringList, required}}, cmd_intersect};
    m["bracket"] = {{ring, ideal, e}, cmd_bracket};
    m["frobroot"] = {{ring, ideal, e}, cmd_frobroot};
    m["trace"] = {{ring, ideal, e, {"enumerate", Kind::Boolean, value(true)}}, cmd_trace};
    m["fedder"] = {{ring, ideal, {"point", Kind::String, required}, r, e}, cmd_fedder};
    m["fpure-locus"] = {{ring,
                         ideal,
                         r,
                         e,
                         {"scan", Kind::Boolean, value(true)},
                         {"max_points", Kind::Integer, value(65536)},
                         parallel},
                        cmd_fpure_locus};
    m["split-test"] = {{ring, ideal, r, e}, cmd_split_test};
    m["filtration-check"] = {{p,
                              {"c", Kind::Integer, required},
                              {"b", Kind::Integer, required},
                              {"nvars", Kind::Integer, [](const json& req) { return req.value("c", json(1)); }},
                              parallel},
                             cmd_filtration};
    m["uniform-e"] = {{ring, {"f", Kind::String, required}, {"cap", Kind::Integer, value(kDefaultExponentCap)}},
                      cmd_uniform_e};
    m["gauss-norm"] = {{p, {"series", Kind::String, required}, d1, {"nvars", Kind::Integer, value(0)}, precision},
                       cmd_gauss_norm};
    m["t1-div"] = {{p, {"f", Kind::String, required}, {"g", Kind::String, required}, d1, precision}, cmd_t1_div};
    m["tate-split"] = {{p,
                        {"f", Kind::String, required},
                        {"w", Kind::RationalText, required},
                        {"d", Kind::Integer, [](const json& req) { return req.value("p", json(1)); }},
                        {"nvars", Kind::Integer, value(0)},
                        precision,
                        parallel},
                       cmd_tate_split};
    m["selftest"] = {{{"trials", Kind::Integer, value(5)}}, cmd_selftest};
    return m;
  }();
  return table;
}

struct Failure {
  const char* kind;
  int code;
};

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, spec] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

json normalize_request(const json& request) {
  if (!request.is_object()) throw ParseError("request must be a JSON object");
  if (!request.contains("command") || !request.at("command").is_string()) {
    throw ParseError("request needs a string field 'command'");
  }
  const std::string command = request.at("command").get<std::string>();
  auto it = registry().find(command);
  if (it == registry().end()) throw ParseError("unknown command '" + command + "'");
  std::vector<FieldSpec> fields = it->second.fields;
  fields.push_back({"seed", Kind::Integer, value(0)});

  std::set<std::string> known{"command"};
  json out = {{"command", command}};
  for (const auto& f : fields) {
    known.insert(f.name);
    json v = request.contains(f.name) ? request.at(f.name) : f.fallback(request);
    if (v.is_null()) throw ParseError(command + ": missing required field '" + f.name + "'");
    check_kind(command, f, v);
    if (f.kind == Kind::RationalText) v = rational_to_string(parse_rational(v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::int64_t>())));
    out[f.name] = v;
  }
  for (const auto& [key, v] : request.items()) {
    if (!known.count(key)) throw ParseError(command + ": unknown field '" + key + "'");
  }
  return out;
}

Outcome run(const json& request) {
  Outcome outcome;
  json& report = outcome.report;
  report["schema_version"] = kSchemaVersion;
  report["request"] = request;
  report["command"] = request.is_object() && request.contains("command") ? request.at("command") : json(nullptr);

  auto fail = [&](const char* kind, int code, const std::string& message, json details = nullptr) {
    report["status"] = "error";
    report["exit_code"] = code;
    report["error"] = {{"kind", kind}, {"message", message}};
    if (!details.is_null()) report["error"]["details"] = std::move(details);
    report.erase("result");
    outcome.exit_code = code;
    outcome.diagnostic = std::string(kind) + " error: " + message;
  };

  try {
    json normalized = normalize_request(request);
    report["request"] = normalized;
    int exit_code = kOk;
    json result = registry().at(normalized.at("command").get<std::string>()).handler(normalized, exit_code);
    report["result"] = std::move(result);
    report["exit_code"] = exit_code;
    report["status"] = exit_code == kOk ? "ok" : "failed";
    outcome.exit_code = exit_code;
    if (exit_code != kOk) outcome.diagnostic = "internal error: a self-check failed (see report)";
  } catch (const ParseError& e) {
    fail("parse", kParseError, e.what());
  } catch (const UniformExponentCapError& e) {
    json roots = json::array();
    for (const auto& r : e.partial_roots()) roots.push_back(basis_strings(r));
    fail("cap", kPrecisionOrCapError, e.what(), {{"partial_roots", roots}});
  } catch (const CapError& e) {
    fail("cap", kPrecisionOrCapError, e.what());
  } catch (const PrecisionError& e) {
    fail("precision", kPrecisionOrCapError, e.what());
  } catch (const DomainError& e) {
    fail("domain", kDomainError, e.what());
  } catch (const json::exception& e) {
    fail("parse", kParseError, e.what());
  } catch (const std::exception& e) {
    fail("internal", kInternalError, e.what());
  }
  return outcome;
}

json extract_request(const json& document) {
  if (document.is_object() && document.contains("schema_version") && document.contains("request")) {
    return document.at("request");
  }
  return document;
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

}  // namespace frobcalc::cli

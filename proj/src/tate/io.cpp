#include "frobcalc/tate/io.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "frobcalc/errors.hpp"
#include "frobcalc/nafield/io.hpp"

namespace frobcalc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text, const std::string& what) {
  throw ParseError("series '" + std::string(text) + "': " + what);
}

std::uint32_t parse_uint(std::string_view whole, std::string_view s) {
  s = trim(s);
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) fail(whole, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

/// Signed terms split at '+' and '-' outside parentheses; a '-' right after
/// '^' belongs to an exponent.
std::vector<std::pair<bool, std::string_view>> split_terms(std::string_view text) {
  std::vector<std::pair<bool, std::string_view>> out;
  int depth = 0;
  std::size_t start = 0;
  bool negative = false;
  char prev = '\0';
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) fail(text, "unbalanced parentheses");
    if (depth == 0 && (c == '+' || c == '-') && prev != '^') {
      std::string_view piece = trim(text.substr(start, i - start));
      if (!piece.empty()) {
        out.emplace_back(negative, piece);
      } else if (!out.empty() || (c == '+' && start != 0)) {
        fail(text, "empty term");
      }
      negative = c == '-';
      start = i + 1;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) prev = c;
  }
  if (depth != 0) fail(text, "unbalanced parentheses");
  std::string_view last = trim(text.substr(start));
  if (last.empty()) fail(text, "empty term");
  out.emplace_back(negative, last);
  return out;
}

std::vector<std::string_view> split_factors(std::string_view text, std::string_view whole) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && text[i] == '*') {
      auto f = trim(text.substr(start, i - start));
      if (f.empty()) fail(whole, "empty factor");
      out.push_back(f);
      start = i + 1;
    }
  }
  auto f = trim(text.substr(start));
  if (f.empty()) fail(whole, "empty factor");
  out.push_back(f);
  return out;
}

}  // namespace

RestrictedSeries parse_series(std::uint32_t p, std::string_view text, std::uint32_t d, std::size_t nvars,
                              std::optional<std::int64_t> default_prec) {
  PrimeField check(p);
  std::vector<std::pair<std::vector<std::uint32_t>, LaurentElement>> terms;
  std::optional<std::uint32_t> cap;
  std::optional<Rational> precision;
  std::size_t max_var = 0;
  std::int64_t den = d;

  for (const auto& [negative, term] : split_terms(text)) {
    if (term.size() >= 2 && term[0] == 'O' && trim(term.substr(1)).front() == '(') {
      if (negative) fail(text, "signed O-term");
      std::string_view inner = trim(term.substr(1));
      if (inner.back() != ')') fail(text, "malformed O-term");
      inner = inner.substr(1, inner.size() - 2);
      std::size_t pos = 0;
      while (pos <= inner.size()) {
        std::size_t semi = inner.find(';', pos);
        std::string_view part = trim(inner.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
        if (part.substr(0, 3) == "deg") {
          cap = parse_uint(text, part.substr(3));
        } else if (!part.empty()) {
          LaurentElement marker = parse_laurent(p, "O(" + std::string(part) + ")");
          precision = marker.precision().value();
        }
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
      }
      continue;
    }
    LaurentElement coeff = LaurentElement::constant(p, negative ? -1 : 1);
    std::vector<std::uint32_t> exps;
    for (std::string_view factor : split_factors(term, text)) {
      if (factor.front() == 'X') {
        std::string_view rest = factor.substr(1);
        std::size_t caret = rest.find('^');
        std::string_view index = rest.substr(0, caret);
        std::uint32_t var = index.empty() ? 1 : parse_uint(text, index);
        if (var == 0 || var > kMaxVariables) fail(text, "variable index out of range");
        std::uint32_t power = caret == std::string_view::npos ? 1 : parse_uint(text, rest.substr(caret + 1));
        if (exps.size() < var) exps.resize(var, 0);
        exps[var - 1] += power;
        max_var = std::max<std::size_t>(max_var, var);
      } else {
        std::string_view body = factor;
        if (body.front() == '(') {
          if (body.back() != ')') fail(text, "unbalanced coefficient");
          body = body.substr(1, body.size() - 2);
        }
        coeff = coeff * parse_laurent(p, body);
      }
    }
    den = std::lcm(den, static_cast<std::int64_t>(coeff.ramification()));
    terms.emplace_back(std::move(exps), std::move(coeff));
  }
  if (nvars == 0) nvars = std::max<std::size_t>(max_var, 1);
  if (max_var > nvars) fail(text, "uses X" + std::to_string(max_var) + " but the series has " + std::to_string(nvars) + " variables");
  if (precision) den = std::lcm(den, precision->denominator());
  if (den > (1 << 20)) fail(text, "ramification too large");
  const auto dd = static_cast<std::uint32_t>(den);

  std::map<Monomial, LaurentElement> coeffs;
  std::uint32_t max_degree = 0;
  for (auto& [exps, c] : terms) {
    exps.resize(nvars, 0);
    Monomial m{std::span<const std::uint32_t>(exps)};
    max_degree = std::max<std::uint32_t>(max_degree, static_cast<std::uint32_t>(m.degree()));
    auto [it, inserted] = coeffs.emplace(m, c.refined(dd));
    if (!inserted) it->second = it->second + c.refined(dd);
  }
  const std::int64_t prec_units =
      precision ? precision->numerator() * (den / precision->denominator()) : default_prec.value_or(default_precision()) * den;
  return RestrictedSeries::from_terms(p, dd, nvars, cap.value_or(max_degree), prec_units, coeffs);
}

nlohmann::json series_to_json(const RestrictedSeries& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    terms.push_back({{"exponents", m.exponents()}, {"coefficient", laurent_to_json(c.exact_representative())}});
  }
  return {{"p", f.characteristic()},
          {"d", f.ramification()},
          {"nvars", f.nvars()},
          {"degree_cap", f.degree_cap()},
          {"precision", rational_to_json(f.precision())},
          {"terms", terms},
          {"text", f.to_string()}};
}

RestrictedSeries series_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto d = j.at("d").get<std::uint32_t>();
    const auto n = j.at("nvars").get<std::size_t>();
    const auto cap = j.at("degree_cap").get<std::uint32_t>();
    Rational prec(j.at("precision").at(0).get<std::int64_t>(), j.at("precision").at(1).get<std::int64_t>());
    if (d == 0 || d % prec.denominator() != 0) throw ParseError("series json: precision denominator must divide d");
    std::map<Monomial, LaurentElement> terms;
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exponents").get<std::vector<std::uint32_t>>();
      if (exps.size() != n) throw ParseError("series json: exponent vector length differs from nvars");
      terms.emplace(Monomial{std::span<const std::uint32_t>(exps)}, laurent_from_json(t.at("coefficient")));
    }
    return RestrictedSeries::from_terms(p, d, n, cap, prec.numerator() * (d / prec.denominator()), terms);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("series json: ") + e.what());
  }
}

}  // namespace frobcalc

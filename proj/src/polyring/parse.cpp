#include <cctype>

#include "frobcalc/errors.hpp"
#include "frobcalc/polyring/io.hpp"

namespace frobcalc {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, std::string_view seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (seps.find(c) != std::string_view::npos) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = get() == '-';
      skip_ws();
    }
    terms.push_back(term(negative));
    while (true) {
      skip_ws();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail(std::string("expected '+' or '-', found '") + op + "'");
      skip_ws();
      terms.push_back(term(op == '-'));
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    const auto& field = ring_->field();
    Coeff coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer_mod_p();
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!starts_variable()) fail("expected a variable after '*'");
      }
    }
    Monomial m(ring_->nvars());
    bool have_var = false;
    while (starts_variable()) {
      std::size_t v = variable();
      std::uint32_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        e = exponent();
        skip_ws();
      }
      m.set(v, m[v] + e);
      have_var = true;
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (!starts_variable()) fail("expected a variable after '*'");
      }
    }
    if (!have_coeff && !have_var) fail("expected a term");
    if (negative) coeff = field.neg(coeff);
    return Term{m, coeff};
  }

  Coeff integer_mod_p() {
    const auto& field = ring_->field();
    Coeff v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = field.add(field.mul(v, 10 % field.characteristic()), static_cast<Coeff>(get() - '0') % field.characteristic());
    }
    return v;
  }

  std::uint32_t exponent() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > 0xffffffffULL) fail("exponent too large");
    }
    return static_cast<std::uint32_t>(v);
  }

  bool starts_variable() const { return !at_end() && match_variable().has_value(); }

  std::optional<std::size_t> match_variable() const {
    std::optional<std::size_t> best;
    std::size_t best_len = 0;
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      const std::string& name = ring_->names()[v];
      if (name.size() > best_len && text_.substr(pos_, name.size()) == name) {
        best = v;
        best_len = name.size();
      }
    }
    return best;
  }

  std::size_t variable() {
    auto v = match_variable();
    if (!v) fail("unknown variable");
    pos_ += ring_->names()[*v].size();
    return *v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  const RingPtr& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr parse_ring(std::string_view text) {
  std::string s = trim(text);
  std::string order_name = "grevlex";
  if (auto colon = s.rfind(':'); colon != std::string::npos && colon > s.rfind(']')) {
    order_name = trim(s.substr(colon + 1));
    s = trim(s.substr(0, colon));
  }
  auto fail = [&](const std::string& why) -> RingPtr {
    throw ParseError("ring descriptor '" + std::string(text) + "': " + why);
  };
  if (s.rfind("GF(", 0) != 0) return fail("expected GF(p)[...]");
  auto close = s.find(')');
  if (close == std::string::npos) return fail("missing ')'");
  std::string pstr = trim(s.substr(3, close - 3));
  if (pstr.empty() || pstr.find_first_not_of("0123456789") != std::string::npos || pstr.size() > 9) {
    return fail("characteristic must be a positive integer");
  }
  auto p = static_cast<std::uint32_t>(std::stoul(pstr));
  std::string rest = trim(s.substr(close + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') return fail("expected [variables]");
  std::vector<std::string> names = split(std::string_view(rest).substr(1, rest.size() - 2), ",");
  for (const auto& n : names) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) return fail("bad variable name '" + n + "'");
    for (char c : n) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return fail("bad variable name '" + n + "'");
    }
  }
  MonomialOrder order;
  if (order_name == "grevlex") {
    order = MonomialOrder::grevlex(names.size());
  } else if (order_name == "lex") {
    order = MonomialOrder::lex(names.size());
  } else {
    return fail("unknown monomial order '" + order_name + "'");
  }
  return make_ring(p, std::move(names), std::move(order));
}

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

Ideal parse_ideal(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> gens;
  if (trim(text).empty()) return Ideal::zero(ring);
  for (const auto& piece : split(text, ";,")) {
    if (piece.empty()) throw ParseError("empty generator in ideal '" + std::string(text) + "'");
    gens.push_back(parse_polynomial(ring, piece));
  }
  return Ideal(ring, std::move(gens));
}

std::vector<Coeff> parse_point(const RingPtr& ring, std::string_view text) {
  std::vector<Coeff> point;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  for (const auto& piece : split(text, ",")) {
    if (piece.empty()) throw ParseError("empty point coordinate");
    bool negative = piece[0] == '-';
    std::string digits = negative ? piece.substr(1) : piece;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12) {
      throw ParseError("bad point coordinate '" + piece + "'");
    }
    std::int64_t v = std::stoll(digits);
    point.push_back(ring->field().reduce(negative ? -v : v));
  }
  if (point.size() != ring->nvars()) {
    throw DomainError("point has " + std::to_string(point.size()) + " coordinates, ring has " +
                      std::to_string(ring->nvars()) + " variables");
  }
  return point;
}

nlohmann::json ring_to_json(const Ring& ring) {
  return {{"p", ring.characteristic()}, {"variables", ring.names()}, {"order", ring.order().name()}};
}

nlohmann::json polynomial_to_json(const Polynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"exponents", t.mono.exponents()}, {"coefficient", t.coeff}});
  }
  return {{"text", f.to_string()}, {"terms", terms}};
}

nlohmann::json ideal_to_json(const Ideal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back(polynomial_to_json(g));
  return gens;
}

RingPtr ring_from_json(const nlohmann::json& j) {
  try {
    auto p = j.at("p").get<std::uint32_t>();
    auto names = j.at("variables").get<std::vector<std::string>>();
    std::string order = j.value("order", "grevlex");
    if (order == "lex") return make_ring(p, names, MonomialOrder::lex(names.size()));
    if (order == "grevlex") return make_ring(p, names);
    throw ParseError("unknown monomial order '" + order + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ring JSON: ") + e.what());
  }
}

Polynomial polynomial_from_json(const RingPtr& ring, const nlohmann::json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& t : j.at("terms")) {
      auto exps = t.at("exponents").get<std::vector<std::uint32_t>>();
      if (exps.size() != ring->nvars()) throw ParseError("exponent vector has wrong length");
      terms.push_back(Term{Monomial(std::span<const std::uint32_t>(exps)),
                           ring->field().reduce(t.at("coefficient").get<std::int64_t>())});
    }
    return Polynomial::from_terms(ring, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
}

}  // namespace frobcalc

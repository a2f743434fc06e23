#include "frobcalc/nafield/io.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "frobcalc/errors.hpp"

namespace frobcalc {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("laurent element '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// exponent := int | '(' '-'? int ('/' int)? ')'
Rational parse_exponent(Cursor& cur) {
  if (!cur.accept('(')) return Rational(cur.integer());
  bool negative = cur.accept('-');
  std::int64_t num = cur.integer();
  std::int64_t den = 1;
  if (cur.accept('/')) den = cur.integer();
  if (den == 0) cur.fail("zero denominator");
  cur.expect(')');
  return Rational(negative ? -num : num, den);
}

// 't' ('^' exponent)?, with the 't' already consumed.
Rational parse_t_power(Cursor& cur) {
  if (!cur.accept('^')) return Rational(1);
  if (cur.peek() == '-') {
    cur.expect('-');
    return -Rational(cur.integer());
  }
  return parse_exponent(cur);
}

}  // namespace

LaurentElement parse_laurent(std::uint32_t p, std::string_view text, std::uint32_t d) {
  Cursor cur(text);
  std::vector<std::pair<Rational, std::int64_t>> terms;
  std::optional<Rational> precision;
  if (cur.done()) cur.fail("empty input");
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (!first) {
      if (cur.accept('-')) {
        negative = true;
      } else {
        cur.expect('+');
      }
    } else if (cur.accept('-')) {
      negative = true;
    }
    first = false;
    if (cur.accept('O')) {
      if (precision) cur.fail("more than one O-term");
      cur.expect('(');
      if (cur.accept('t')) {
        precision = parse_t_power(cur);
      } else if (cur.integer() == 1) {
        precision = Rational(0);
      } else {
        cur.fail("O-term must be O(t^N) or O(1)");
      }
      cur.expect(')');
      continue;
    }
    std::int64_t coeff = 1;
    Rational exponent(0);
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = cur.integer();
      if (cur.accept('*')) {
        cur.expect('t');
        exponent = parse_t_power(cur);
      } else if (cur.accept('t')) {
        exponent = parse_t_power(cur);
      }
    } else if (cur.accept('t')) {
      exponent = parse_t_power(cur);
    } else {
      cur.fail("expected a term");
    }
    terms.emplace_back(exponent, negative ? -coeff : coeff);
  }
  std::int64_t den = d;
  for (const auto& [e, c] : terms) den = std::lcm(den, e.denominator());
  if (precision) den = std::lcm(den, precision->denominator());
  if (den > (1 << 20)) cur.fail("ramification too large");
  std::map<std::int64_t, std::int64_t> units;
  for (const auto& [e, c] : terms) units[e.numerator() * (den / e.denominator())] += c;
  std::int64_t prec = LaurentElement::kExact;
  if (precision) prec = precision->numerator() * (den / precision->denominator());
  return LaurentElement::from_terms(p, static_cast<std::uint32_t>(den), units, prec);
}

nlohmann::json rational_to_json(const Rational& r) { return nlohmann::json::array({r.numerator(), r.denominator()}); }

nlohmann::json valuation_to_json(const Valuation& v) {
  if (v.is_infinite()) return "+inf";
  return rational_to_string(v.value());
}

nlohmann::json laurent_to_json(const LaurentElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : x.terms()) terms.push_back({e, x.ramification(), c});
  nlohmann::json precision = nullptr;
  if (!x.is_exact()) precision = rational_to_json(x.precision().value());
  return {{"p", x.characteristic()},
          {"d", x.ramification()},
          {"terms", terms},
          {"precision", precision},
          {"text", x.to_string()}};
}

LaurentElement laurent_from_json(const nlohmann::json& j) {
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto d = j.at("d").get<std::uint32_t>();
    if (d == 0) throw ParseError("laurent json: d must be positive");
    std::map<std::int64_t, std::int64_t> units;
    for (const auto& t : j.at("terms")) {
      const auto num = t.at(0).get<std::int64_t>();
      const auto den = t.at(1).get<std::int64_t>();
      if (den <= 0 || d % den != 0) throw ParseError("laurent json: term denominator must divide d");
      units[num * (d / den)] += t.at(2).get<std::int64_t>();
    }
    std::int64_t prec = LaurentElement::kExact;
    if (j.contains("precision") && !j.at("precision").is_null()) {
      Rational r(j.at("precision").at(0).get<std::int64_t>(), j.at("precision").at(1).get<std::int64_t>());
      if (d % r.denominator() != 0) throw ParseError("laurent json: precision denominator must divide d");
      prec = r.numerator() * (d / r.denominator());
    }
    return LaurentElement::from_terms(p, d, units, prec);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("laurent json: ") + e.what());
  }
}

}  // namespace frobcalc

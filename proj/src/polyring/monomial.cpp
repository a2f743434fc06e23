#include "frobcalc/polyring/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "frobcalc/errors.hpp"

namespace frobcalc {

namespace {

void check_size(std::size_t n) {
  if (n > kMaxVariables) {
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
  if (a > std::numeric_limits<std::uint32_t>::max() - b) {
    throw CapError("monomial exponent overflow");
  }
  return a + b;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) { check_size(nvars); }

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(std::span<const std::uint32_t>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const std::uint32_t> exponents)
    : n_(static_cast<std::uint8_t>(exponents.size())) {
  check_size(exponents.size());
  std::copy(exponents.begin(), exponents.end(), exp_.begin());
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.begin() + n_, std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.begin() + n_, [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = checked_add(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = exp_[i] - other.exp_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t v = static_cast<std::uint64_t>(exp_[i]) * k;
    if (k != 0 && v / k != exp_[i]) throw CapError("monomial exponent overflow");
    if (v > std::numeric_limits<std::uint32_t>::max()) throw CapError("monomial exponent overflow");
    r.exp_[i] = static_cast<std::uint32_t>(v);
  }
  return r;
}

std::vector<std::uint32_t> Monomial::exponents() const {
  return {exp_.begin(), exp_.begin() + n_};
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.size();
  for (std::size_t i = 0; i < m.size(); ++i) {
    h ^= m[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::uint8_t> precedence,
                             std::size_t elimination_block)
    : kind_(kind), precedence_(std::move(precedence)), elimination_block_(elimination_block) {
  std::vector<std::uint8_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw DomainError("monomial order precedence is not a permutation");
  }
  if (elimination_block_ > precedence_.size()) {
    throw DomainError("elimination block larger than the variable count");
  }
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::uint8_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  return MonomialOrder(Kind::Lex, std::move(perm));
}

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::uint8_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), std::uint8_t{0});
  return MonomialOrder(Kind::GrevLex, std::move(perm));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = precedence_.size();
  if (elimination_block_ > 0) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = 0; i < elimination_block_; ++i) {
      da += a[precedence_[i]];
      db += b[precedence_[i]];
    }
    if (da != db) return da < db ? -1 : 1;
  }
  if (kind_ == Kind::Lex) {
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t ea = a[precedence_[i]], eb = b[precedence_[i]];
      if (ea != eb) return ea < eb ? -1 : 1;
    }
    return 0;
  }
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = n; i-- > 0;) {
    std::uint32_t ea = a[precedence_[i]], eb = b[precedence_[i]];
    if (ea != eb) return ea > eb ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  std::string base = kind_ == Kind::Lex ? "lex" : "grevlex";
  if (elimination_block_ > 0) base = "elim" + std::to_string(elimination_block_) + "+" + base;
  return base;
}

}  // namespace frobcalc

#include "frobcalc/nafield/upoly.hpp"

#include <algorithm>

#include "frobcalc/errors.hpp"

namespace frobcalc::upoly {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const UPoly& a) { return static_cast<long>(a.size()) - 1; }

UPoly add(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.add(out[i], b[i]);
  trim(out);
  return out;
}

UPoly sub(const PrimeField& f, const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = f.sub(out[i], b[i]);
  trim(out);
  return out;
}

UPoly mul(const PrimeField& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  return mul_trunc(f, a, b, a.size() + b.size() - 1);
}

UPoly mul_trunc(const PrimeField& f, const UPoly& a, const UPoly& b, std::size_t n) {
  if (a.empty() || b.empty() || n == 0) return {};
  const std::uint64_t p = f.characteristic();
  std::vector<std::uint64_t> acc(std::min(n, a.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size() && i < acc.size(); ++i) {
    if (a[i] == 0) continue;
    const std::size_t jmax = std::min(b.size(), acc.size() - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      // Keeps the accumulator far from overflow for p < 2^16.
      if (acc[i + j] >= (std::uint64_t{1} << 62)) acc[i + j] %= p;
    }
  }
  UPoly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Coeff>(acc[i] % p);
  trim(out);
  return out;
}

UPoly scale(const PrimeField& f, const UPoly& a, Coeff c) {
  UPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(a[i], c);
  trim(out);
  return out;
}

std::pair<UPoly, UPoly> divmod(const PrimeField& f, const UPoly& a, const UPoly& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  UPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {UPoly{}, r};
  UPoly q(r.size() - b.size() + 1, 0);
  const Coeff inv_lead = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    Coeff c = f.mul(r[k + b.size() - 1], inv_lead);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

UPoly inverse_trunc(const PrimeField& f, const UPoly& a, std::size_t n) {
  if (a.empty() || a[0] == 0) throw DomainError("power series inverse needs a unit constant term");
  if (n == 0) return {};
  UPoly y{f.inv(a[0])};
  std::size_t have = 1;
  while (have < n) {
    have = std::min(2 * have, n);
    // y <- y (2 - a y) mod X^have
    UPoly ay = mul_trunc(f, a, y, have);
    UPoly two_minus(ay.size(), 0);
    for (std::size_t i = 0; i < ay.size(); ++i) two_minus[i] = f.neg(ay[i]);
    if (two_minus.empty()) two_minus.push_back(0);
    two_minus[0] = f.add(two_minus[0], 2 % f.characteristic());
    trim(two_minus);
    y = mul_trunc(f, y, two_minus, have);
  }
  return y;
}

}  // namespace frobcalc::upoly

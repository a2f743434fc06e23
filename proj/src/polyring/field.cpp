#include "frobcalc/polyring/field.hpp"

#include "frobcalc/errors.hpp"

namespace frobcalc {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw DomainError("characteristic must be a prime below 65536, got " +
                      std::to_string(p));
  }
}

Coeff PrimeField::pow(Coeff a, std::uint64_t k) const {
  Coeff result = 1 % p_;
  Coeff base = a % p_;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Coeff PrimeField::inv(Coeff a) const {
  if (a % p_ == 0) throw DomainError("inverse of zero in GF(" + std::to_string(p_) + ")");
  // Fermat.
  return pow(a, p_ - 2);
}

}  // namespace frobcalc

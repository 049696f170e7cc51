#include "hered/prime_field.hpp"

namespace hered {

PrimeFieldElement PrimeFieldElement::from_integer(const BigInt& n, std::uint32_t modulus) {
  BigInt r = n % modulus;
  if (r < 0) r += modulus;
  return PrimeFieldElement(static_cast<std::int64_t>(r.get_ui()), modulus);
}

PrimeFieldElement PrimeFieldElement::from_rational(const BigRational& q, std::uint32_t modulus) {
  PrimeFieldElement den = from_integer(BigInt(q.get_den()), modulus);
  if (den.is_zero()) throw DomainError("denominator not invertible modulo " + std::to_string(modulus));
  return from_integer(BigInt(q.get_num()), modulus) * den.inverse();
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (v_ == 0) throw DomainError("inverse of zero in GF(" + std::to_string(p_) + ")");
  std::int64_t old_r = v_, r = p_, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw DomainError("modulus is not prime: " + std::to_string(p_));
  return PrimeFieldElement(old_s, p_);
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const {
  PrimeFieldElement result = raw(1 % p_, p_);
  PrimeFieldElement base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

}  // namespace hered

#pragma once

#include <cstdint>
#include <string>

#include "hered/arith.hpp"

namespace hered {

/// Element of GF(p) for a word-size prime p < 2^32. Each value carries its
/// modulus so that mixing fields is detected instead of silently wrapping.
class PrimeFieldElement {
 public:
  PrimeFieldElement() = default;
  PrimeFieldElement(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
    if (modulus < 2) throw DomainError("prime field modulus must be >= 2");
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    v_ = static_cast<std::uint32_t>(r);
  }
  /// Reduction of a rational number; the denominator must be a unit mod p.
  static PrimeFieldElement from_rational(const BigRational& q, std::uint32_t modulus);
  static PrimeFieldElement from_integer(const BigInt& n, std::uint32_t modulus);

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const {
    check(o);
    std::uint64_t s = std::uint64_t(v_) + o.v_;
    if (s >= p_) s -= p_;
    return raw(static_cast<std::uint32_t>(s), p_);
  }
  PrimeFieldElement operator-(const PrimeFieldElement& o) const {
    check(o);
    std::uint64_t s = std::uint64_t(v_) + p_ - o.v_;
    if (s >= p_) s -= p_;
    return raw(static_cast<std::uint32_t>(s), p_);
  }
  PrimeFieldElement operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }
  PrimeFieldElement operator*(const PrimeFieldElement& o) const {
    check(o);
    return raw(static_cast<std::uint32_t>(std::uint64_t(v_) * o.v_ % p_), p_);
  }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o) { return *this = *this + o; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) { return *this = *this - o; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) { return *this = *this * o; }

  PrimeFieldElement inverse() const;
  PrimeFieldElement pow(std::uint64_t e) const;

  bool operator==(const PrimeFieldElement& o) const { return v_ == o.v_ && p_ == o.p_; }
  bool operator!=(const PrimeFieldElement& o) const { return !(*this == o); }

 private:
  static PrimeFieldElement raw(std::uint32_t v, std::uint32_t p) {
    PrimeFieldElement e;
    e.v_ = v;
    e.p_ = p;
    return e;
  }
  void check(const PrimeFieldElement& o) const {
    if (o.p_ != p_) throw DomainError("mixed prime-field moduli");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

using Fp = PrimeFieldElement;

inline std::string to_string(const PrimeFieldElement& e) { return std::to_string(e.value()); }

}  // namespace hered

#pragma once

// Coefficient-domain traits consumed by Poly<T>. A coefficient type T
// provides a `context` (the data needed to build 0 and 1: nothing for Z and
// Q, the modulus for GF(p), the field for number-field elements).

#include <cstdint>
#include <string>

#include "hered/arith.hpp"
#include "hered/prime_field.hpp"

namespace hered {

struct NoContext {
  bool operator==(const NoContext&) const { return true; }
};

template <class T>
struct ring_traits;

template <>
struct ring_traits<BigInt> {
  using context = NoContext;
  static constexpr bool is_field = false;
  static context context_of(const BigInt&) { return {}; }
  static bool same_context(const context&, const context&) { return true; }
  static BigInt zero(const context&) { return 0; }
  static BigInt one(const context&) { return 1; }
  static BigInt from_int(long v, const context&) { return v; }
  static bool is_zero(const BigInt& v) { return v == 0; }
  static BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static int compare(const BigInt& a, const BigInt& b) { return cmp(a, b); }
  static std::string to_string(const BigInt& v) { return v.get_str(); }
};

template <>
struct ring_traits<BigRational> {
  using context = NoContext;
  static constexpr bool is_field = true;
  static context context_of(const BigRational&) { return {}; }
  static bool same_context(const context&, const context&) { return true; }
  static BigRational zero(const context&) { return 0; }
  static BigRational one(const context&) { return 1; }
  static BigRational from_int(long v, const context&) { return v; }
  static bool is_zero(const BigRational& v) { return sgn(v) == 0; }
  static BigRational inverse(const BigRational& v) {
    if (sgn(v) == 0) throw DomainError("division by zero rational");
    BigRational r = 1 / v;
    return r;
  }
  static BigRational exact_div(const BigRational& a, const BigRational& b) {
    if (sgn(b) == 0) throw DomainError("division by zero rational");
    BigRational r = a / b;
    return r;
  }
  static int compare(const BigRational& a, const BigRational& b) { return cmp(a, b); }
  static std::string to_string(const BigRational& v) { return hered::to_string(v); }
};

struct FpContext {
  std::uint32_t modulus = 0;
  bool operator==(const FpContext& o) const { return modulus == o.modulus; }
};

template <>
struct ring_traits<Fp> {
  using context = FpContext;
  static constexpr bool is_field = true;
  static context context_of(const Fp& v) { return {v.modulus()}; }
  static bool same_context(const context& a, const context& b) { return a == b; }
  static Fp zero(const context& c) { return Fp(0, c.modulus); }
  static Fp one(const context& c) { return Fp(1, c.modulus); }
  static Fp from_int(long v, const context& c) { return Fp(v, c.modulus); }
  static bool is_zero(const Fp& v) { return v.is_zero(); }
  static Fp inverse(const Fp& v) { return v.inverse(); }
  static Fp exact_div(const Fp& a, const Fp& b) { return a * b.inverse(); }
  static int compare(const Fp& a, const Fp& b) {
    return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0);
  }
  static std::string to_string(const Fp& v) { return hered::to_string(v); }
};

}  // namespace hered

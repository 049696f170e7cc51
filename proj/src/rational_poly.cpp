#include "hered/rational_poly.hpp"

#include <algorithm>

#include "hered/polyalg.hpp"

namespace hered {

PrimitiveForm primitive_form(const QPoly& p) {
  if (p.is_zero()) return {BigRational(0), ZPoly()};
  BigInt den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(p.size());
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    BigInt v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return {make_rational(g, den), ZPoly(std::move(ints))};
}

QPoly to_rational(const ZPoly& p) {
  std::vector<BigRational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.lead() < 0) g = -g;
  std::vector<BigInt> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(v));
}

FpPoly reduce_mod(const ZPoly& f, std::uint32_t p) {
  std::vector<Fp> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.emplace_back(static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), p)), p);
  return FpPoly(std::move(v), FpContext{p});
}

FpPoly reduce_mod(const QPoly& f, std::uint32_t p) {
  std::vector<Fp> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(Fp::from_rational(c, p));
  return FpPoly(std::move(v), FpContext{p});
}

ZPoly reduce_symmetric(const ZPoly& f, const BigInt& m) {
  std::vector<BigInt> v;
  v.reserve(f.size());
  BigInt half = m / 2;
  for (const auto& c : f.coeffs()) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (r > half) r -= m;
    v.push_back(std::move(r));
  }
  return ZPoly(std::move(v));
}

ZPoly lift_symmetric(const FpPoly& f) {
  const std::uint32_t p = f.context().modulus;
  std::vector<BigInt> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    long x = static_cast<long>(c.value());
    if (x > static_cast<long>(p / 2)) x -= static_cast<long>(p);
    v.emplace_back(x);
  }
  return ZPoly(std::move(v));
}

BigInt max_norm(const ZPoly& f) {
  BigInt m = 0;
  for (const auto& c : f.coeffs()) {
    BigInt a = abs(c);
    if (a > m) m = a;
  }
  return m;
}

ZPoly gcd_z(const ZPoly& a0, const ZPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  BigInt d;
  BigInt ca = content(a0), cb = content(b0);
  mpz_gcd(d.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly A = primitive_part(a0), B = primitive_part(b0);
  if (A.degree() < B.degree()) std::swap(A, B);
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    ZPoly R = pseudo_remainder(A, B);
    if (R.is_zero()) return primitive_part(B);
    if (R.degree() == 0) return ZPoly{BigInt(1)};
    A = std::move(B);
    BigInt divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    std::vector<BigInt> rc = R.coeffs();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    B = ZPoly(std::move(rc));
    g = A.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      BigInt num = 1, den = 1;
      for (int i = 0; i < delta; ++i) num *= g;
      for (int i = 0; i + 1 < delta; ++i) den *= h;
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
}

namespace {

bool coprime_mod_prime(const ZPoly& a, const ZPoly& b) {
  static const std::uint32_t kPrimes[] = {2147483629u, 2147483587u, 2147483579u};
  for (std::uint32_t p : kPrimes) {
    if (mpz_fdiv_ui(a.lead().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.lead().get_mpz_t(), p) == 0) continue;
    return euclid_gcd(reduce_mod(a, p), reduce_mod(b, p)).degree() == 0;
  }
  return false;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.degree() == 0 || b.degree() == 0) return QPoly{BigRational(1)};
  ZPoly za = primitive_form(a).prim, zb = primitive_form(b).prim;
  if (coprime_mod_prime(za, zb)) return QPoly{BigRational(1)};
  return monic(to_rational(gcd_z(za, zb)));
}

QPoly squarefree_part(const QPoly& f) {
  if (f.is_zero()) throw DomainError("squarefree part of zero");
  QPoly g = poly_gcd(f, derivative(f));
  return monic(exact_quotient(f, g));
}

QPoly qpoly(std::initializer_list<long> coeffs) {
  std::vector<BigRational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

}  // namespace hered

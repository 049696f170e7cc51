#pragma once

// Polynomials over Z, Q and GF(p), and the conversions between them.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hered/poly.hpp"

namespace hered {

using ZPoly = Poly<BigInt>;
using QPoly = Poly<BigRational>;
using FpPoly = Poly<Fp>;

/// p == content * prim, prim primitive in Z[x] with positive leading
/// coefficient. The zero polynomial maps to (0, 0).
struct PrimitiveForm {
  BigRational content;
  ZPoly prim;
};
PrimitiveForm primitive_form(const QPoly& p);

QPoly to_rational(const ZPoly& p);
BigInt content(const ZPoly& p);  // non-negative
ZPoly primitive_part(const ZPoly& p);  // positive leading coefficient

/// Reduction mod p; lifting with coefficients in (-m/2, m/2].
FpPoly reduce_mod(const ZPoly& f, std::uint32_t p);
FpPoly reduce_mod(const QPoly& f, std::uint32_t p);
ZPoly reduce_symmetric(const ZPoly& f, const BigInt& m);
ZPoly lift_symmetric(const FpPoly& f);

BigInt max_norm(const ZPoly& f);

/// Primitive gcd over Z (subresultant PRS) with positive leading coefficient.
ZPoly gcd_z(const ZPoly& a, const ZPoly& b);

/// Monic gcd over Q. A degree-0 gcd modulo one good prime settles
/// coprimality; otherwise the subresultant PRS over Z is used.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// Monic squarefree part.
QPoly squarefree_part(const QPoly& f);

/// Integer coefficients, constant term first.
QPoly qpoly(std::initializer_list<long> coeffs_low_to_high);

}  // namespace hered

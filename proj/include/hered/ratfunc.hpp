#pragma once

// Q(t): reduced fractions of integer-coefficient polynomials in a free
// variable t. Used to model transcendental parameters exactly.

#include <string>

#include "hered/polyalg.hpp"

namespace hered {

class RationalFunction {
 public:
  RationalFunction() : num_(), den_{BigRational(1)} {}
  RationalFunction(long c) : RationalFunction(QPoly{BigRational(c)}) {}  // NOLINT
  explicit RationalFunction(const BigRational& c) : RationalFunction(QPoly{c}) {}
  explicit RationalFunction(QPoly num, QPoly den = QPoly{BigRational(1)});
  static RationalFunction t() { return RationalFunction(QPoly::variable()); }

  /// Numerator and denominator share no factor, have integer coprime
  /// coefficients, and the denominator has positive leading coefficient.
  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction inverse() const;

  bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

 private:
  QPoly num_, den_;
};

std::string to_string(const RationalFunction& f);

template <>
struct ring_traits<RationalFunction> {
  using context = NoContext;
  static constexpr bool is_field = true;
  static context context_of(const RationalFunction&) { return {}; }
  static bool same_context(const context&, const context&) { return true; }
  static RationalFunction zero(const context&) { return RationalFunction(0); }
  static RationalFunction one(const context&) { return RationalFunction(1); }
  static RationalFunction from_int(long v, const context&) { return RationalFunction(v); }
  static bool is_zero(const RationalFunction& v) { return v.is_zero(); }
  static RationalFunction inverse(const RationalFunction& v) { return v.inverse(); }
  static RationalFunction exact_div(const RationalFunction& a, const RationalFunction& b) { return a / b; }
  static int compare(const RationalFunction& a, const RationalFunction& b) {
    int c = hered::compare(a.num(), b.num());
    return c != 0 ? c : hered::compare(a.den(), b.den());
  }
  static std::string to_string(const RationalFunction& v) { return hered::to_string(v); }
};

using RFPoly = Poly<RationalFunction>;

/// Lifts a polynomial in t to a constant of Q(t).
inline RationalFunction rf(const QPoly& p) { return RationalFunction(p); }

}  // namespace hered

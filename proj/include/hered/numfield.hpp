#pragma once

// Absolute number fields K = Q[a]/(m(a)) and polynomials over them.
// Factorization over K follows Trager: shift until the norm is squarefree,
// factor the norm over Q, pull the factors back with gcds over K.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hered/qfactor.hpp"

namespace hered {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  /// m must be monic and irreducible over Q (checked unless verify is
  /// false, for moduli produced internally as norms known to be irreducible).
  static FieldPtr make(const QPoly& m, std::string generator = "a", std::string label = "", bool verify = true);
  /// Q itself, as Q[a]/(a).
  static FieldPtr rationals();

  const QPoly& modulus() const { return m_; }
  int degree() const { return m_.degree(); }
  bool is_rational() const { return m_.degree() == 1; }
  const std::string& generator_name() const { return gen_; }
  const std::string& label() const { return label_; }
  /// Discriminant-like quantity used to pick good primes: disc(m) as a rational.
  const BigRational& discriminant() const { return disc_; }

  /// Memoized torsion data (order, generator representative).
  struct TorsionData {
    std::uint64_t order = 0;
    QPoly generator;
  };
  std::optional<TorsionData> cached_torsion() const;
  void store_torsion(TorsionData t) const;

  struct Private {};
  NumberField(Private, QPoly m, std::string gen, std::string label);

 private:
  QPoly m_;
  std::string gen_;
  std::string label_;
  BigRational disc_;
  mutable std::mutex mu_;
  mutable std::optional<TorsionData> torsion_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

class NFElement {
 public:
  NFElement() = default;
  NFElement(FieldPtr K, const QPoly& repr);
  NFElement(FieldPtr K, const BigRational& c);
  static NFElement generator(const FieldPtr& K);

  const FieldPtr& field() const { return K_; }
  const QPoly& repr() const { return r_; }
  bool is_zero() const { return r_.is_zero(); }
  bool is_rational() const { return r_.degree() <= 0; }
  /// Throws DomainError unless the element lies in Q.
  BigRational rational_value() const;

  NFElement operator+(const NFElement& o) const;
  NFElement operator-(const NFElement& o) const;
  NFElement operator*(const NFElement& o) const;
  NFElement operator/(const NFElement& o) const { return *this * o.inverse(); }
  NFElement operator-() const { return NFElement(K_, -r_, true); }
  NFElement& operator+=(const NFElement& o) { return *this = *this + o; }
  NFElement& operator-=(const NFElement& o) { return *this = *this - o; }
  NFElement& operator*=(const NFElement& o) { return *this = *this * o; }
  NFElement inverse() const;
  /// Negative exponents invert.
  NFElement pow(long e) const;

  bool operator==(const NFElement& o) const { return same_field(K_, o.K_) && r_ == o.r_; }
  bool operator!=(const NFElement& o) const { return !(*this == o); }

 private:
  NFElement(FieldPtr K, QPoly r, bool) : K_(std::move(K)), r_(std::move(r)) {}
  void check(const NFElement& o) const;

  FieldPtr K_;
  QPoly r_;
};

std::string to_string(const NFElement& e);

template <>
struct ring_traits<NFElement> {
  using context = FieldPtr;
  static constexpr bool is_field = true;
  static context context_of(const NFElement& v) { return v.field(); }
  static bool same_context(const context& a, const context& b) { return same_field(a, b); }
  static NFElement zero(const context& c) { return NFElement(c, BigRational(0)); }
  static NFElement one(const context& c) { return NFElement(c, BigRational(1)); }
  static NFElement from_int(long v, const context& c) { return NFElement(c, BigRational(v)); }
  static bool is_zero(const NFElement& v) { return v.is_zero(); }
  static NFElement inverse(const NFElement& v) { return v.inverse(); }
  static NFElement exact_div(const NFElement& a, const NFElement& b) { return a / b; }
  static int compare(const NFElement& a, const NFElement& b) { return hered::compare(a.repr(), b.repr()); }
  static std::string to_string(const NFElement& v) { return hered::to_string(v); }
};

using KPoly = Poly<NFElement>;

KPoly to_kpoly(const QPoly& p, const FieldPtr& K);
/// Coefficients must all be rational.
QPoly to_qpoly(const KPoly& p);

/// N_{K/Q}(a); zero for a == 0.
BigRational norm(const NFElement& a);

/// Res_y(m(y), P(x, y)) = product of P over the embeddings of K.
QPoly norm_poly(const KPoly& P);

/// Monic minimal polynomial over Q.
QPoly min_poly(const NFElement& a);

struct NFLimits {
  int max_norm_degree = 512;  // deg(P) * [K:Q]
  FactorLimits q;
};

/// Complete factorization over K (squarefree decomposition handled here).
Factorization<NFElement> factor_over_nf(const KPoly& P, const NFLimits& limits = {});
/// Irreducible factors of a monic squarefree P over K.
std::vector<KPoly> factor_squarefree_over_nf(const KPoly& P, const NFLimits& limits = {});

/// All b in K with b^n == a, sorted canonically (descending).
std::vector<NFElement> nth_roots(const NFElement& a, std::uint64_t n, const NFLimits& limits = {});

/// Cheap necessary test: false means a is certainly not a p-th power.
bool may_be_pth_power(const NFElement& a, std::uint64_t p);

struct TorsionGroup {
  std::uint64_t order = 0;
  NFElement generator;
  /// generator^0, ..., generator^(order-1)
  std::vector<NFElement> elements() const;
};
TorsionGroup torsion_units(const FieldPtr& K);

/// Multiplicative order when a is a root of unity.
std::optional<std::uint64_t> root_of_unity_order(const NFElement& a);

/// L = K[x]/(Q) presented as an absolute field, with the images of
/// K's generator and of the root x of Q.
struct AbsoluteExtension {
  FieldPtr L;
  NFElement theta;      // root of Q in L
  NFElement base_gen;   // image of K's generator in L
  long shift = 0;       // theta + shift*a generates L over Q
  NFElement embed(const NFElement& k) const;
};
AbsoluteExtension absolute_extension(const KPoly& Q, const NFLimits& limits = {});

}  // namespace hered

#pragma once

// Exact checks for two explicit tower constructions: the Chebyshev tower
// built from T(x) = 2x^2 - 1 and the cyclotomic radical tower whose roots
// of unity are tracked as exponents in Q/Z.

#include <cstdint>
#include <string>
#include <vector>

#include "hered/ratfunc.hpp"

namespace hered {

/// A statement as printed next to what the computation actually supports.
struct Discrepancy {
  std::string id;
  std::string printed;
  std::string verified;
  std::string note;
};

// ---------------------------------------------------------------------------
// Chebyshev tower

/// T composed with itself n times (n = 0 gives x). n > 12 is a ResourceError.
QPoly chebyshev_iterate(int n);

struct SpecialPointsReport {
  int n = 0;
  std::vector<BigRational> values;  // T^m(0) for m = 1..n
  bool all_unit = true;             // every value is -1 or 1
  bool fixed_points = false;        // T(-1) = 1 = T(1)
  bool ok() const { return all_unit && fixed_points; }
};
SpecialPointsReport verify_iterate_at_special_points(int n);

struct DerivativeReport {
  int n = 0;
  QPoly derivative;
  bool printed_identity_holds = false;    // constant 2^n
  bool corrected_identity_holds = false;  // constant 4^n
  unsigned max_multiplicity = 0;
  unsigned stated_bound = 2;
  std::vector<Discrepancy> discrepancies;
  bool ok() const { return corrected_identity_holds && max_multiplicity <= stated_bound; }
};
/// 1 <= n <= 10.
DerivativeReport verify_derivative_product(int n);

struct QuadraticChainReport {
  int n = 0;
  RFPoly dividend;   // P(x^(2^n)) with cos(alpha) = T^n(t)
  RFPoly divisor;    // x^2 - 2t x + 1
  RFPoly quotient;
  RFPoly remainder;
  bool divides = false;
  bool degree_bookkeeping = false;  // 2^(n+1) == 2 + deg(quotient)
  bool plus_sign_divides = false;   // x^2 + 2t x + 1
  std::vector<Discrepancy> discrepancies;
  bool ok() const { return divides && degree_bookkeeping; }
};
/// 0 <= n <= 8.
QuadraticChainReport verify_quadratic_factor_chain(int n);

// ---------------------------------------------------------------------------
// Cyclotomic radical tower

/// zeta * t_level^k with zeta = exp(2 pi i e), e in [0, 1).
struct CyclotomicMonomial {
  BigRational e;
  BigInt k;
  int level = 0;

  CyclotomicMonomial operator*(const CyclotomicMonomial& o) const;
  CyclotomicMonomial pow(const BigInt& m) const;
  bool operator==(const CyclotomicMonomial& o) const { return e == o.e && k == o.k && level == o.level; }
};

/// Reduces a rational into [0, 1).
BigRational mod_one(const BigRational& q);

/// Replaces t_{m.level} by `image` (a monomial one level up).
CyclotomicMonomial substitute(const CyclotomicMonomial& m, const CyclotomicMonomial& image);

struct TowerStep {
  int level = 0;               // i + 1
  std::uint64_t p = 0;         // p_{i+1}
  std::uint64_t n_prev = 0;    // n_i
  std::uint64_t n = 0;         // n_{i+1}
  BigInt u, v;                 // u*p_{i+1} + v*n_i == 1
  BigRational beta;            // exponent of beta_{i+1}
  CyclotomicMonomial x_before; // x = zeta_i t_i^{n_i}
  CyclotomicMonomial x_after;  // after t_i -> beta t_{i+1}^p
  bool congruence_ok = false;  // n_i * beta == 1/p mod 1
  bool chain_ok = false;       // x_after == zeta_{i+1} t_{i+1}^{n_{i+1}}
  bool primitive_ok = false;   // zeta_{i+1} has exact denominator n_{i+1}
};

struct TowerReport {
  std::vector<std::uint64_t> primes;
  CyclotomicMonomial base;  // x = beta_0 t_0^{p_0}
  bool base_ok = false;
  std::vector<TowerStep> steps;
  std::vector<Discrepancy> notes;
  bool ok() const;
};
/// Distinct primes, at least one. Repeats are a DomainError.
TowerReport verify_tower_claim1(const std::vector<std::uint64_t>& primes);

struct PowerCaseReport {
  BigInt k;
  std::uint64_t n_i = 0;
  std::uint64_t gamma = 0;  // gcd(k, n_i)
  std::uint64_t ell = 0;    // n_i / gamma
  std::vector<std::uint64_t> admissible;  // m | k*n_i with gcd(m, ell) == 1
  std::uint64_t m_max = 0;
  bool verified = false;                  // every squarefree admissible m divides k
  std::vector<std::uint64_t> flagged;     // non-squarefree admissible m not dividing k
};
/// n_i squarefree >= 2, k != 0.
PowerCaseReport power_case_bound(const BigInt& k, std::uint64_t n_i);

}  // namespace hered

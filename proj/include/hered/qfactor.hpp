#pragma once

// Factorization over GF(p) (Cantor-Zassenhaus) and over Q (Hensel lifting
// plus Zassenhaus recombination), Eisenstein search, cyclotomic recognition.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hered/polyalg.hpp"
#include "hered/rational_poly.hpp"

namespace hered {

template <class T>
struct Factorization {
  T unit{};
  std::vector<std::pair<Poly<T>, unsigned>> factors;  // monic irreducible

  Poly<T> expand() const {
    Poly<T> r = Poly<T>::constant(unit);
    for (const auto& [f, m] : factors) r *= pow(f, m);
    return r;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (const auto& f : factors) n += f.second;
    return n;
  }
  bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

/// Sorts factors by the canonical polynomial order.
template <class T>
void sort_factors(Factorization<T>& f) {
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
}

/// Complete factorization over GF(p). Equal-degree splitting draws from rng.
Factorization<Fp> factor_mod_p(const FpPoly& P, std::mt19937_64& rng);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factor(const FpPoly& f);

/// Lifts monic pairwise coprime factors of f mod p to monic factors mod
/// p^k with lc(f) * prod(lifted) == f (mod p^k). Coefficients in [0, p^k).
/// Throws DomainError when the factors are not coprime mod p or p | lc(f).
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, unsigned k);

struct FactorLimits {
  int max_degree = 512;
  std::uint64_t max_subsets = 2000000;
};

/// Complete factorization over Q; factors are monic, sorted canonically.
Factorization<BigRational> factor_over_q(const QPoly& P, const FactorLimits& limits = {});

/// Irreducible factors of a monic squarefree polynomial over Q.
std::vector<QPoly> factor_squarefree_over_q(const QPoly& f, const FactorLimits& limits = {});

/// Irreducibility over Q. Cheap modular degree sieve first.
bool is_irreducible_over_q(const QPoly& P, const FactorLimits& limits = {});

struct EisensteinWitness {
  BigInt p;
  long shift = 0;  // the criterion holds for P(x + shift)
};

/// Shifts are tried in the order 0, 1, -1, 2, -2, ... inside [lo, hi].
/// Candidate primes are the prime divisors of the gcd of the non-leading
/// coefficients of P(x + s).
std::optional<EisensteinWitness> eisenstein_witness(const QPoly& P, long lo = -10, long hi = 10);
bool check_eisenstein(const QPoly& P, const EisensteinWitness& w);

/// k-th cyclotomic polynomial (memoized).
QPoly cyclotomic(std::uint64_t k);

/// k with P == Phi_k. P must be monic irreducible; reducibility is checked
/// (by factoring) unless the caller vouches for it.
std::optional<std::uint64_t> cyclotomic_index(const QPoly& P, bool assume_irreducible = false);

}  // namespace hered

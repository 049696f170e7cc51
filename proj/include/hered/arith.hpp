#pragma once

// Exact integer/rational scalars and the small number-theory toolkit the
// factorization engines sit on. Integers and rationals are GMP values;
// mpq_class arithmetic always returns canonical fractions, and
// make_rational() canonicalizes on construction.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hered/errors.hpp"

namespace hered {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// num/den in lowest terms with positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);

struct ExtendedGcd {
  BigInt g;  // >= 1
  BigInt x;
  BigInt y;  // a*x + b*y == g
};

/// Iterative extended Euclid; throws DomainError when a == b == 0.
ExtendedGcd gcd_ext(const BigInt& a, const BigInt& b);

/// Miller-Rabin with the witness set {2,...,37}; deterministic below
/// 3.3e24. Above that bound 52 further fixed prime witnesses are used
/// (heuristic error below 2^-128).
bool is_prime(const BigInt& n);

/// base^exp mod modulus in [0, modulus). modulus < 2 is a DomainError.
BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

/// r with r^k == n when one exists (negative n only for odd k).
std::optional<BigInt> exact_root(const BigInt& n, unsigned long k);
std::optional<BigRational> exact_root(const BigRational& q, unsigned long k);

/// Prime factorization of |n|: trial division by primes <= 10^6, then
/// Brent-Pollard rho on cofactors of at most 96 bits. Anything left over
/// is reported in `unfactored` (1 when the factorization is complete).
struct IntegerFactorization {
  std::vector<std::pair<BigInt, unsigned>> primes;  // ascending
  BigInt unfactored = 1;
  bool complete() const { return unfactored == 1; }
};
IntegerFactorization factor_integer(const BigInt& n);

/// Primes below 10^6 (computed once).
const std::vector<std::uint32_t>& small_primes();
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_squarefree(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);

/// Parses "123", "-7", "3/4". Throws ParseError(offset 1) on junk.
BigRational parse_rational(const std::string& text);

}  // namespace hered

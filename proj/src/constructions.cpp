#include "hered/constructions.hpp"

#include <algorithm>
#include <set>

namespace hered {

QPoly chebyshev_iterate(int n) {
  if (n < 0) throw DomainError("iteration count must be nonnegative");
  if (n > 12) throw ResourceError("iteration count " + std::to_string(n) + " exceeds the degree cap 2^12");
  const QPoly x = QPoly::variable();
  QPoly r = x;
  // T^(n+1) = 2 (T^n)^2 - 1
  for (int i = 0; i < n; ++i) r = r * r * BigRational(2) - BigRational(1);
  return r;
}

SpecialPointsReport verify_iterate_at_special_points(int n) {
  if (n < 1) throw DomainError("need n >= 1");
  SpecialPointsReport rep;
  rep.n = n;
  for (int m = 1; m <= n; ++m) {
    BigRational v = evaluate(chebyshev_iterate(m), BigRational(0));
    rep.values.push_back(v);
    if (v != 1 && v != -1) rep.all_unit = false;
  }
  const QPoly T = chebyshev_iterate(1);
  rep.fixed_points = evaluate(T, BigRational(-1)) == 1 && evaluate(T, BigRational(1)) == 1;
  return rep;
}

DerivativeReport verify_derivative_product(int n) {
  if (n < 1 || n > 10) throw DomainError("derivative check needs 1 <= n <= 10");
  DerivativeReport rep;
  rep.n = n;
  rep.derivative = derivative(chebyshev_iterate(n));
  QPoly prod = QPoly::variable();
  for (int k = 1; k < n; ++k) prod *= chebyshev_iterate(k);
  BigInt two_n, four_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  mpz_ui_pow_ui(four_n.get_mpz_t(), 4, static_cast<unsigned long>(n));
  rep.printed_identity_holds = rep.derivative == prod * BigRational(two_n);
  rep.corrected_identity_holds = rep.derivative == prod * BigRational(four_n);
  for (const auto& [f, m] : squarefree_decomposition(rep.derivative)) {
    (void)f;
    rep.max_multiplicity = std::max(rep.max_multiplicity, m);
  }
  if (!rep.printed_identity_holds)
    rep.discrepancies.push_back({"derivative-constant", "(T^n)' = 2^n T^(n-1) ... T y",
                                 "(T^n)' = 4^n T^(n-1) ... T y",
                                 "T'(u) = 4u, so each chain-rule step contributes 4, not 2"});
  if (rep.max_multiplicity < rep.stated_bound)
    rep.discrepancies.push_back({"derivative-multiplicity", "stated multiplicity bound 2 for roots of (T^n)'",
                                 "roots of multiplicity " + std::to_string(rep.max_multiplicity),
                                 "the stated bound holds; the computed value is sharper"});
  return rep;
}

QuadraticChainReport verify_quadratic_factor_chain(int n) {
  if (n < 0 || n > 8) throw DomainError("quadratic chain check needs 0 <= n <= 8");
  QuadraticChainReport rep;
  rep.n = n;
  const RationalFunction t = RationalFunction::t();
  const RationalFunction c0 = rf(chebyshev_iterate(n));  // cos(alpha) in terms of t
  const std::size_t N = std::size_t{1} << n;
  const RFPoly one = RFPoly::constant(RationalFunction(1));
  rep.dividend = RFPoly::monomial(RationalFunction(1), 2 * N) - RFPoly::monomial(c0 * RationalFunction(2), N) + one;
  rep.divisor = RFPoly::monomial(RationalFunction(1), 2) - RFPoly::monomial(t * RationalFunction(2), 1) + one;
  auto [q, r] = divrem(rep.dividend, rep.divisor);
  rep.quotient = q;
  rep.remainder = r;
  rep.divides = r.is_zero();
  rep.degree_bookkeeping = static_cast<std::size_t>(q.degree()) + 2 == 2 * N;
  const RFPoly plus = RFPoly::monomial(RationalFunction(1), 2) + RFPoly::monomial(t * RationalFunction(2), 1) + one;
  rep.plus_sign_divides = rem(rep.dividend, plus).is_zero();
  rep.discrepancies.push_back(
      {"quadratic-factor-sign", "Q_n(x) = (x + c_n)(x + conj(c_n)) = x^2 + 2t x + 1",
       "(x - c_n)(x - conj(c_n)) = x^2 - 2t x + 1 divides P(x^(2^n))",
       std::string("x - c_n is the linear factor of x^(2^n) - c_0, so the paired quadratic carries minus signs; ") +
           (rep.plus_sign_divides ? "the plus-sign quadratic also divides here because -c_n is another 2^n-th root"
                                  : "the plus-sign quadratic does not divide here")});
  return rep;
}

// ---------------------------------------------------------------------------

BigRational mod_one(const BigRational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  BigRational r = q - BigRational(f);
  r.canonicalize();
  return r;
}

CyclotomicMonomial CyclotomicMonomial::operator*(const CyclotomicMonomial& o) const {
  if (level != o.level) throw DomainError("monomials live at different tower levels");
  return {mod_one(e + o.e), k + o.k, level};
}

CyclotomicMonomial CyclotomicMonomial::pow(const BigInt& m) const {
  return {mod_one(e * BigRational(m)), k * m, level};
}

CyclotomicMonomial substitute(const CyclotomicMonomial& m, const CyclotomicMonomial& image) {
  if (image.level != m.level + 1) throw DomainError("substitution must move up exactly one level");
  CyclotomicMonomial r = image.pow(m.k);
  r.e = mod_one(r.e + m.e);
  return r;
}

bool TowerReport::ok() const {
  if (!base_ok) return false;
  for (const auto& s : steps)
    if (!s.congruence_ok || !s.chain_ok || !s.primitive_ok) return false;
  return true;
}

TowerReport verify_tower_claim1(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw DomainError("need at least one prime");
  std::set<std::uint64_t> seen;
  for (std::uint64_t p : primes) {
    if (!is_prime(BigInt(static_cast<unsigned long>(p)))) throw DomainError(std::to_string(p) + " is not prime");
    if (!seen.insert(p).second) throw DomainError("prime " + std::to_string(p) + " is repeated");
  }
  TowerReport rep;
  rep.primes = primes;
  rep.notes.push_back({"bezout-names", "x p_{i+1} + y n_i = 1", "u p_{i+1} + v n_i = 1",
                       "the original coefficient names collide with the transcendental x"});

  auto inv = [](std::uint64_t p) { return make_rational(1, BigInt(static_cast<unsigned long>(p))); };
  // Base: x = beta_0 t_0^{p_0} with beta_0 = alpha_0, which is zeta_0 t_0^{n_0}.
  BigRational zeta = inv(primes[0]);
  std::uint64_t n = primes[0];
  rep.base = {inv(primes[0]), BigInt(static_cast<unsigned long>(primes[0])), 0};
  rep.base_ok = rep.base.e == zeta && rep.base.k == BigInt(static_cast<unsigned long>(n)) &&
                zeta.get_den() == BigInt(static_cast<unsigned long>(n));
  CyclotomicMonomial x = rep.base;

  for (std::size_t i = 1; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    TowerStep s;
    s.level = static_cast<int>(i);
    s.p = p;
    s.n_prev = n;
    if (n > UINT64_MAX / p) throw ResourceError("product of primes overflows");
    s.n = n * p;
    ExtendedGcd g = gcd_ext(BigInt(static_cast<unsigned long>(p)), BigInt(static_cast<unsigned long>(n)));
    s.u = g.x;
    s.v = g.y;
    s.beta = mod_one(BigRational(s.v) * inv(p));
    s.congruence_ok = mod_one(s.beta * BigRational(BigInt(static_cast<unsigned long>(n)))) == mod_one(inv(p));
    s.x_before = x;
    const CyclotomicMonomial image{s.beta, BigInt(static_cast<unsigned long>(p)), s.level};
    s.x_after = substitute(x, image);
    zeta = mod_one(zeta + inv(p));
    s.chain_ok = s.x_after == CyclotomicMonomial{zeta, BigInt(static_cast<unsigned long>(s.n)), s.level};
    s.primitive_ok = zeta.get_den() == BigInt(static_cast<unsigned long>(s.n));
    x = s.x_after;
    n = s.n;
    rep.steps.push_back(std::move(s));
  }
  return rep;
}

PowerCaseReport power_case_bound(const BigInt& k, std::uint64_t n_i) {
  if (k == 0) throw DomainError("k must be nonzero");
  if (n_i < 2 || !is_squarefree(n_i)) throw DomainError("n_i must be squarefree and at least 2");
  PowerCaseReport rep;
  rep.k = k;
  rep.n_i = n_i;
  const BigInt ak = abs(k);
  if (!ak.fits_ulong_p()) throw ResourceError("|k| too large for enumeration");
  const std::uint64_t kk = ak.get_ui();
  rep.gamma = gcd_u64(kk, n_i);
  rep.ell = n_i / rep.gamma;
  if (kk > UINT64_MAX / n_i) throw ResourceError("k * n_i overflows");
  rep.verified = true;
  for (std::uint64_t m : divisors(kk * n_i)) {
    if (gcd_u64(m, rep.ell) != 1) continue;
    rep.admissible.push_back(m);
    rep.m_max = std::max(rep.m_max, m);
    if (kk % m == 0) continue;
    if (is_squarefree(m))
      rep.verified = false;
    else
      rep.flagged.push_back(m);
  }
  return rep;
}

}  // namespace hered

#include "hered/numfield.hpp"

#include <algorithm>
#include <random>

namespace hered {

NumberField::NumberField(Private, QPoly m, std::string gen, std::string label)
    : m_(std::move(m)), gen_(std::move(gen)), label_(std::move(label)) {
  if (m_.degree() == 1) {
    disc_ = 1;
  } else {
    const long n = m_.degree();
    BigRational r = resultant(m_, derivative(m_));
    disc_ = ((n * (n - 1) / 2) % 2 == 1) ? BigRational(-r) : r;
  }
}

FieldPtr NumberField::make(const QPoly& m, std::string generator, std::string label, bool verify) {
  if (m.degree() < 1 || !(m.lead() == 1)) throw DomainError("defining polynomial must be monic and nonconstant");
  if (verify && !is_irreducible_over_q(m))
    throw DomainError("defining polynomial " + to_string(m, generator) + " is reducible over Q");
  if (label.empty())
    label = m.degree() == 1 && m[0] == 0 ? "Q" : "Q[" + generator + "]/(" + to_string(m, generator) + ")";
  return std::make_shared<const NumberField>(Private{}, m, std::move(generator), std::move(label));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q = make(QPoly::variable(), "a", "Q", false);
  return q;
}

std::optional<NumberField::TorsionData> NumberField::cached_torsion() const {
  std::lock_guard<std::mutex> lock(mu_);
  return torsion_;
}

void NumberField::store_torsion(TorsionData t) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!torsion_) torsion_ = std::move(t);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->modulus() == b->modulus();
}

NFElement::NFElement(FieldPtr K, const QPoly& repr) : K_(std::move(K)) {
  if (!K_) throw DomainError("number field element without a field");
  r_ = repr.degree() < K_->degree() ? repr : rem(repr, K_->modulus());
}

NFElement::NFElement(FieldPtr K, const BigRational& c) : K_(std::move(K)) {
  if (!K_) throw DomainError("number field element without a field");
  if (sgn(c) != 0) r_ = QPoly{c};
}

NFElement NFElement::generator(const FieldPtr& K) { return NFElement(K, QPoly::variable()); }

BigRational NFElement::rational_value() const {
  if (!is_rational()) throw DomainError("element " + to_string(*this) + " is not rational");
  return r_.is_zero() ? BigRational(0) : r_[0];
}

void NFElement::check(const NFElement& o) const {
  if (!same_field(K_, o.K_)) throw DomainError("mixed number fields");
}

NFElement NFElement::operator+(const NFElement& o) const {
  check(o);
  return NFElement(K_, r_ + o.r_, true);
}

NFElement NFElement::operator-(const NFElement& o) const {
  check(o);
  return NFElement(K_, r_ - o.r_, true);
}

NFElement NFElement::operator*(const NFElement& o) const {
  check(o);
  if (r_.is_zero() || o.r_.is_zero()) return NFElement(K_, QPoly(), true);
  if (r_.degree() == 0) return NFElement(K_, o.r_ * r_[0], true);
  if (o.r_.degree() == 0) return NFElement(K_, r_ * o.r_[0], true);
  return NFElement(K_, rem(r_ * o.r_, K_->modulus()), true);
}

NFElement NFElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in " + (K_ ? K_->label() : std::string("?")));
  if (r_.degree() == 0) return NFElement(K_, QPoly{BigRational(1 / r_[0])}, true);
  auto eg = ext_gcd(r_, K_->modulus());
  if (eg.g.degree() != 0) throw InternalError("non-invertible element in a field");
  return NFElement(K_, eg.s, true);
}

NFElement NFElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElement result(K_, BigRational(1));
  NFElement b = *this;
  while (e != 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

std::string to_string(const NFElement& e) {
  return to_string(e.repr(), e.field() ? e.field()->generator_name() : "a");
}

KPoly to_kpoly(const QPoly& p, const FieldPtr& K) {
  std::vector<NFElement> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(K, c);
  return KPoly(std::move(v), K);
}

QPoly to_qpoly(const KPoly& p) {
  std::vector<BigRational> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.push_back(c.rational_value());
  return QPoly(std::move(v));
}

BigRational norm(const NFElement& a) {
  if (a.is_zero()) return 0;
  if (a.field()->is_rational()) return a.rational_value();
  return resultant(a.field()->modulus(), a.repr());
}

QPoly norm_poly(const KPoly& P) {
  if (P.is_zero()) throw DomainError("norm of the zero polynomial");
  const FieldPtr& K = P.context();
  if (K->is_rational()) return to_qpoly(P);
  const QPoly& m = K->modulus();
  const int D = P.degree() * K->degree();
  // Values at x = 0..D, then Newton interpolation.
  std::vector<BigRational> c(static_cast<std::size_t>(D) + 1);
  for (int i = 0; i <= D; ++i) {
    const BigRational x0 = i;
    QPoly v;
    for (int j = P.degree(); j >= 0; --j) v = v * x0 + P[static_cast<std::size_t>(j)].repr();
    c[static_cast<std::size_t>(i)] = v.is_zero() ? BigRational(0) : resultant(m, v);
  }
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / j;
    }
  QPoly result{c[static_cast<std::size_t>(D)]};
  const QPoly x = QPoly::variable();
  for (int i = D - 1; i >= 0; --i) result = result * (x - BigRational(i)) + c[static_cast<std::size_t>(i)];
  return result;
}

QPoly min_poly(const NFElement& a) {
  const QPoly x = QPoly::variable();
  if (a.is_rational()) return x - a.rational_value();
  const FieldPtr& K = a.field();
  KPoly lin(std::vector<NFElement>{-a, NFElement(K, BigRational(1))}, K);
  return squarefree_part(norm_poly(lin));
}

namespace {

void sort_kpolys(std::vector<KPoly>& v) {
  std::sort(v.begin(), v.end(), [](const KPoly& a, const KPoly& b) { return compare(a, b) < 0; });
}

std::vector<KPoly> trager(const KPoly& P, const NFLimits& limits) {
  const FieldPtr& K = P.context();
  if (P.degree() <= 1) return {P};
  const NFElement a = NFElement::generator(K);
  const long max_shift = 2L * P.degree() * K->degree();
  for (long s = 0; s <= max_shift; ++s) {
    KPoly Ps = s == 0 ? P : taylor_shift(P, NFElement(K, BigRational(-s)) * a);
    QPoly N = norm_poly(Ps);
    if (poly_gcd(N, derivative(N)).degree() != 0) continue;
    std::vector<QPoly> nf = factor_squarefree_over_q(N, limits.q);
    if (nf.size() == 1) return {P};
    std::vector<KPoly> out;
    for (const QPoly& f : nf) {
      KPoly g = euclid_gcd(Ps, to_kpoly(f, K));
      if (s != 0) g = monic(taylor_shift(g, NFElement(K, BigRational(s)) * a));
      out.push_back(std::move(g));
    }
    return out;
  }
  throw InternalError("no squarefree norm shift found for a separable polynomial");
}

}  // namespace

std::vector<KPoly> factor_squarefree_over_nf(const KPoly& P0, const NFLimits& limits) {
  if (P0.is_zero()) throw DomainError("factorization of the zero polynomial");
  if (P0.degree() <= 0) return {};
  const FieldPtr& K = P0.context();
  if (P0.degree() * K->degree() > limits.max_norm_degree)
    throw ResourceError("norm degree " + std::to_string(P0.degree() * K->degree()) + " exceeds the cap " +
                            std::to_string(limits.max_norm_degree),
                        "nothing factored");
  KPoly P = monic(P0);
  bool rational = true;
  for (const auto& c : P.coeffs()) rational = rational && c.is_rational();
  std::vector<KPoly> out;
  if (rational) {
    for (const QPoly& f : factor_squarefree_over_q(to_qpoly(P), limits.q)) {
      if (K->is_rational() || f.degree() == 1) {
        out.push_back(to_kpoly(f, K));
      } else {
        for (auto& g : trager(to_kpoly(f, K), limits)) out.push_back(std::move(g));
      }
    }
  } else {
    out = trager(P, limits);
  }
  sort_kpolys(out);
  return out;
}

Factorization<NFElement> factor_over_nf(const KPoly& P, const NFLimits& limits) {
  if (P.is_zero()) throw DomainError("factorization of the zero polynomial");
  const FieldPtr& K = P.context();
  if (P.degree() * K->degree() > limits.max_norm_degree)
    throw ResourceError("norm degree " + std::to_string(P.degree() * K->degree()) + " exceeds the cap " +
                            std::to_string(limits.max_norm_degree),
                        "nothing factored");
  Factorization<NFElement> result;
  result.unit = P.lead();
  for (const auto& [g, m] : squarefree_decomposition(P))
    for (auto& h : factor_squarefree_over_nf(g, limits)) result.factors.emplace_back(std::move(h), m);
  sort_factors(result);
  return result;
}

namespace {

bool q_integral(const QPoly& p, std::uint32_t q) {
  for (const auto& c : p.coeffs())
    if (mpz_fdiv_ui(c.get_den_mpz_t(), q) == 0) return false;
  return true;
}

// Roots of m modulo q for primes q where K has good reduction; empty when
// q is unsuitable.
std::vector<Fp> good_roots(const FieldPtr& K, std::uint32_t q) {
  const QPoly& m = K->modulus();
  if (!q_integral(m, q)) return {};
  const BigRational& disc = K->discriminant();
  if (mpz_fdiv_ui(disc.get_num_mpz_t(), q) == 0 || mpz_fdiv_ui(disc.get_den_mpz_t(), q) == 0) return {};
  std::mt19937_64 rng(q);
  std::vector<Fp> roots;
  FpPoly mq = reduce_mod(m, q);
  // gcd with x^q - x isolates the linear part before splitting.
  FpPoly x = FpPoly::variable(FpContext{q});
  FpPoly lin = euclid_gcd(mq, powmod(x, BigInt(q), mq) - x);
  if (lin.degree() <= 0) return {};
  for (const auto& [f, mult] : factor_mod_p(lin, rng).factors) roots.push_back(-f[0]);
  return roots;
}

Fp eval_mod(const QPoly& r, const Fp& x) {
  Fp acc(0, x.modulus());
  for (int i = r.degree(); i >= 0; --i) acc = acc * x + Fp::from_rational(r[static_cast<std::size_t>(i)], x.modulus());
  return acc;
}

std::vector<NFElement> sorted_unique(std::vector<NFElement> v) {
  std::sort(v.begin(), v.end(), [](const NFElement& a, const NFElement& b) {
    return compare(a.repr(), b.repr()) > 0;
  });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<NFElement> pth_roots(const NFElement& a, std::uint64_t p, const NFLimits& limits) {
  const FieldPtr& K = a.field();
  if (K->is_rational()) {
    auto r = exact_root(a.rational_value(), p);
    if (!r) return {};
    if (p == 2) return sorted_unique({NFElement(K, *r), NFElement(K, BigRational(-*r))});
    return {NFElement(K, *r)};
  }
  if (!may_be_pth_power(a, p)) return {};
  KPoly f = KPoly::monomial(NFElement(K, BigRational(1)), p) - a;
  std::vector<NFElement> out;
  for (const KPoly& g : factor_squarefree_over_nf(f, limits))
    if (g.degree() == 1) out.push_back(-g[0]);
  return sorted_unique(out);
}

}  // namespace

bool may_be_pth_power(const NFElement& a, std::uint64_t p) {
  if (a.is_zero()) return true;
  if (!exact_root(norm(a), p)) return false;
  const FieldPtr& K = a.field();
  if (K->is_rational()) return exact_root(a.rational_value(), p).has_value();
  int informative = 0;
  const auto& primes = small_primes();
  for (std::size_t i = 0; i < primes.size() && informative < 12; ++i) {
    const std::uint32_t q = primes[i];
    if (q % p != 1 || !q_integral(a.repr(), q)) continue;
    auto roots = good_roots(K, q);
    if (roots.empty()) continue;
    ++informative;
    for (const Fp& r : roots) {
      Fp v = eval_mod(a.repr(), r);
      if (v.is_zero()) continue;
      if (!(v.pow((q - 1) / p) == Fp(1, q))) return false;
    }
  }
  return true;
}

std::vector<NFElement> nth_roots(const NFElement& a, std::uint64_t n, const NFLimits& limits) {
  if (a.is_zero()) throw DomainError("nth_roots of zero");
  if (n == 0) throw DomainError("nth_roots needs n >= 1");
  if (n == 1) return {a};
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  std::vector<NFElement> out;
  for (const NFElement& b : pth_roots(a, p, limits))
    for (auto& c : nth_roots(b, n / p, limits)) out.push_back(std::move(c));
  return sorted_unique(out);
}

std::vector<NFElement> TorsionGroup::elements() const {
  std::vector<NFElement> out;
  NFElement z(generator.field(), BigRational(1));
  for (std::uint64_t i = 0; i < order; ++i) {
    out.push_back(z);
    z *= generator;
  }
  return out;
}

namespace {

bool torsion_candidate_survives(const FieldPtr& K, std::uint64_t k) {
  int informative = 0;
  const auto& primes = small_primes();
  for (std::size_t i = 0; i < primes.size() && informative < 10; ++i) {
    const std::uint32_t q = primes[i];
    if (k % q == 0) continue;
    if (good_roots(K, q).empty()) continue;
    ++informative;
    if ((q - 1) % k != 0) return false;
  }
  return true;
}

}  // namespace

TorsionGroup torsion_units(const FieldPtr& K) {
  if (auto t = K->cached_torsion()) return {t->order, NFElement(K, t->generator)};
  TorsionGroup result{2, NFElement(K, BigRational(-1))};
  const std::uint64_t d = static_cast<std::uint64_t>(K->degree());
  if (d > 1) {
    const std::uint64_t bound = 2 * d * d + 1;
    for (std::uint64_t k = bound; k > 2; --k) {
      if (k % 2 != 0) continue;
      const std::uint64_t phi = euler_phi(k);
      if (d % phi != 0) continue;
      if (!torsion_candidate_survives(K, k)) continue;
      std::vector<NFElement> roots;
      for (const KPoly& g : factor_squarefree_over_nf(to_kpoly(cyclotomic(k), K)))
        if (g.degree() == 1) roots.push_back(-g[0]);
      if (roots.empty()) continue;
      roots = sorted_unique(roots);
      result = {k, roots.front()};
      break;
    }
  }
  K->store_torsion({result.order, result.generator.repr()});
  return result;
}

std::optional<std::uint64_t> root_of_unity_order(const NFElement& a) {
  if (a.is_zero()) throw DomainError("zero is not a root of unity");
  const BigRational N = norm(a);
  if (abs(N) != 1) return std::nullopt;
  return cyclotomic_index(min_poly(a), true);
}

NFElement AbsoluteExtension::embed(const NFElement& k) const {
  NFElement acc(L, BigRational(0));
  const QPoly& r = k.repr();
  for (int i = r.degree(); i >= 0; --i) acc = acc * base_gen + NFElement(L, r[static_cast<std::size_t>(i)]);
  return acc;
}

AbsoluteExtension absolute_extension(const KPoly& Q0, const NFLimits& limits) {
  if (Q0.degree() < 1) throw DomainError("absolute extension needs a nonconstant polynomial");
  const FieldPtr& K = Q0.context();
  const KPoly Q = monic(Q0);
  if (Q.degree() * K->degree() > limits.max_norm_degree)
    throw ResourceError("extension degree " + std::to_string(Q.degree() * K->degree()) + " exceeds the cap",
                        "no extension built");
  if (Q.degree() == 1) return {K, -Q[0], NFElement::generator(K), 0};
  if (K->is_rational()) {
    FieldPtr L = NumberField::make(to_qpoly(Q), "t", "", false);
    return {L, NFElement::generator(L), NFElement(L, BigRational(0)), 0};
  }
  const NFElement a = NFElement::generator(K);
  for (long t = 0;; ++t) {
    KPoly Qt = t == 0 ? Q : taylor_shift(Q, NFElement(K, BigRational(-t)) * a);
    QPoly M = norm_poly(Qt);
    if (poly_gcd(M, derivative(M)).degree() != 0) continue;
    FieldPtr L = NumberField::make(M, "t", "", false);
    const NFElement z = NFElement::generator(L);
    // a is the common root of m(y) and Q(z - t*y, y) over L.
    const KPoly Y = KPoly::variable(L);
    const KPoly lin = KPoly::constant(z) - Y * NFElement(L, BigRational(t));
    KPoly B(L);
    KPoly power = KPoly::constant(NFElement(L, BigRational(1)));
    for (std::size_t i = 0; i < Q.size(); ++i) {
      B += to_kpoly(Q[i].repr(), L) * power;
      power *= lin;
    }
    KPoly g = euclid_gcd(to_kpoly(K->modulus(), L), B);
    if (g.degree() != 1) throw InternalError("primitive element recovery failed");
    NFElement aL = -g[0];
    return {L, z - aL * NFElement(L, BigRational(t)), aL, t};
  }
}

}  // namespace hered

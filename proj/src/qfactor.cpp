#include "hered/qfactor.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace hered {

namespace {

FpPoly pth_root(const FpPoly& f) {
  const std::uint32_t p = f.context().modulus;
  std::vector<Fp> v;
  for (std::size_t i = 0; i < f.size(); i += p) v.push_back(f[i]);
  return FpPoly(std::move(v), f.context());
}

void squarefree_mod_p(const FpPoly& f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  const std::uint32_t p = f.context().modulus;
  FpPoly df = derivative(f);
  if (df.is_zero()) {
    squarefree_mod_p(pth_root(f), mult * p, out);
    return;
  }
  FpPoly c = euclid_gcd(f, df);
  FpPoly w = exact_quotient(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = euclid_gcd(w, c);
    FpPoly fac = exact_quotient(w, y);
    if (fac.degree() > 0) out.emplace_back(fac, i * mult);
    w = y;
    c = exact_quotient(c, y);
    ++i;
  }
  if (c.degree() > 0) squarefree_mod_p(pth_root(c), mult * p, out);
}

FpPoly random_poly(std::size_t below_degree, const FpContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, ctx.modulus - 1);
  std::vector<Fp> v;
  for (std::size_t i = 0; i < below_degree; ++i) v.emplace_back(dist(rng), ctx.modulus);
  return FpPoly(std::move(v), ctx);
}

void equal_degree_split(const FpPoly& g, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const FpContext ctx = g.context();
  const std::uint32_t p = ctx.modulus;
  BigInt exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, d);
    exponent = (exponent - 1) / 2;
  }
  const FpPoly one = FpPoly::constant(Fp(1, p));
  while (true) {
    FpPoly a = random_poly(static_cast<std::size_t>(g.degree()), ctx, rng);
    if (a.degree() < 1) continue;
    FpPoly t;
    if (p == 2) {
      t = a;
      FpPoly b = a;
      for (unsigned i = 1; i < d; ++i) {
        b = rem(b * b, g);
        t += b;
      }
    } else {
      t = powmod(a, exponent, g) - one;
    }
    if (t.is_zero()) continue;
    FpPoly h = euclid_gcd(g, t);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(exact_quotient(g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, unsigned>> distinct_degree_factor(const FpPoly& f0) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly f = f0;
  const FpContext ctx = f.context();
  const FpPoly x = FpPoly::variable(ctx);
  const BigInt p = ctx.modulus;
  FpPoly h = rem(x, f);
  unsigned i = 1;
  while (f.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(h, p, f);
    FpPoly g = euclid_gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = exact_quotient(f, g);
      h = rem(h, f);
    }
    ++i;
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

Factorization<Fp> factor_mod_p(const FpPoly& P, std::mt19937_64& rng) {
  if (P.is_zero()) throw DomainError("factorization of the zero polynomial");
  Factorization<Fp> result;
  result.unit = P.lead();
  FpPoly f = monic(P);
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree_mod_p(f, 1, sqf);
  for (const auto& [g, mult] : sqf) {
    for (const auto& [part, d] : distinct_degree_factor(g)) {
      std::vector<FpPoly> pieces;
      equal_degree_split(part, d, rng, pieces);
      for (auto& piece : pieces) result.factors.emplace_back(std::move(piece), mult);
    }
  }
  sort_factors(result);
  return result;
}

namespace {

ZPoly mod_nonneg(const ZPoly& f, const BigInt& m) {
  std::vector<BigInt> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    v.push_back(std::move(r));
  }
  return ZPoly(std::move(v));
}

struct LiftNode {
  ZPoly prod;
  int left = -1;
  int right = -1;
  ZPoly s, t;
};

int build_lift_tree(std::vector<LiftNode>& nodes, const std::vector<FpPoly>& factors, std::size_t lo,
                    std::size_t hi) {
  const int idx = static_cast<int>(nodes.size());
  nodes.emplace_back();
  if (hi - lo == 1) {
    nodes[idx].prod = lift_symmetric(factors[lo]);
    return idx;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const int l = build_lift_tree(nodes, factors, lo, mid);
  const int r = build_lift_tree(nodes, factors, mid, hi);
  const std::uint32_t p = factors[lo].context().modulus;
  FpPoly g = reduce_mod(nodes[l].prod, p), h = reduce_mod(nodes[r].prod, p);
  auto eg = ext_gcd(g, h);
  if (eg.g.degree() != 0) throw DomainError("Hensel lifting needs factors coprime modulo p");
  nodes[idx].left = l;
  nodes[idx].right = r;
  nodes[idx].prod = lift_symmetric(g * h);
  nodes[idx].s = lift_symmetric(eg.s);
  nodes[idx].t = lift_symmetric(eg.t);
  return idx;
}

void hensel_step(std::vector<LiftNode>& nodes, int idx, const ZPoly& f, const BigInt& m2) {
  LiftNode& node = nodes[idx];
  node.prod = f;
  if (node.left < 0) return;
  const ZPoly& g = nodes[node.left].prod;
  const ZPoly& h = nodes[node.right].prod;
  const ZPoly& s = node.s;
  const ZPoly& t = node.t;
  ZPoly e = mod_nonneg(f - g * h, m2);
  auto [q, r] = divrem_general(mod_nonneg(s * e, m2), h);
  ZPoly gs = mod_nonneg(g + t * e + q * g, m2);
  ZPoly hs = mod_nonneg(h + r, m2);
  ZPoly b = mod_nonneg(s * gs + t * hs - ZPoly{BigInt(1)}, m2);
  auto [c, d] = divrem_general(mod_nonneg(s * b, m2), hs);
  ZPoly ss = mod_nonneg(s - d, m2);
  ZPoly ts = mod_nonneg(t - t * b - c * gs, m2);
  node.s = std::move(ss);
  node.t = std::move(ts);
  const int l = node.left, rr = node.right;
  hensel_step(nodes, l, gs, m2);
  hensel_step(nodes, rr, hs, m2);
}

void collect_leaves(const std::vector<LiftNode>& nodes, int idx, const BigInt& m, std::vector<ZPoly>& out) {
  if (nodes[idx].left < 0) {
    out.push_back(mod_nonneg(nodes[idx].prod, m));
    return;
  }
  collect_leaves(nodes, nodes[idx].left, m, out);
  collect_leaves(nodes, nodes[idx].right, m, out);
}

}  // namespace

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, unsigned k) {
  if (factors.empty()) throw DomainError("Hensel lifting needs at least one factor");
  if (k == 0) throw DomainError("Hensel lifting needs precision k >= 1");
  const std::uint32_t p = factors[0].context().modulus;
  if (mpz_fdiv_ui(f.lead().get_mpz_t(), p) == 0) throw DomainError("p divides the leading coefficient");
  for (const auto& g : factors)
    if (g.is_zero() || !(g.lead() == Fp(1, p))) throw DomainError("Hensel lifting needs monic factors");
  BigInt target;
  mpz_ui_pow_ui(target.get_mpz_t(), p, k);
  if (factors.size() == 1) {
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), f.lead().get_mpz_t(), target.get_mpz_t());
    return {mod_nonneg(f * inv, target)};
  }
  BigInt top = p;
  while (top < target) top *= top;
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), f.lead().get_mpz_t(), top.get_mpz_t());
  const ZPoly fm = mod_nonneg(f * inv, top);

  std::vector<LiftNode> nodes;
  build_lift_tree(nodes, factors, 0, factors.size());
  {
    FpPoly prod = reduce_mod(nodes[0].prod, p);
    if (!(prod == reduce_mod(fm, p))) throw DomainError("factors do not multiply to f modulo p");
  }
  BigInt m = p;
  while (m < target) {
    BigInt m2 = m * m;
    hensel_step(nodes, 0, mod_nonneg(fm, m2), m2);
    m = m2;
  }
  std::vector<ZPoly> out;
  collect_leaves(nodes, 0, target, out);
  return out;
}

namespace {

/// a / b over Z when b divides a exactly; nullopt otherwise.
std::optional<ZPoly> trial_divide(const ZPoly& a, const ZPoly& b) {
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<BigInt> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> q(r.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.lead().get_mpz_t())) return std::nullopt;
    BigInt coef;
    mpz_divexact(coef.get_mpz_t(), r[k].get_mpz_t(), b.lead().get_mpz_t());
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= coef * b[j];
    q[shift] = std::move(coef);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return std::nullopt;
  return ZPoly(std::move(q));
}

std::vector<bool> subset_degree_sums(const std::vector<FpPoly>& factors, int n) {
  std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
  reach[0] = true;
  for (const auto& f : factors) {
    const int d = f.degree();
    for (int s = n; s >= d; --s)
      if (reach[s - d]) reach[s] = true;
  }
  return reach;
}

struct PrimeChoice {
  std::uint32_t p = 0;
  std::vector<FpPoly> factors;
};

// Zassenhaus on a primitive squarefree f with f(0) != 0 and deg f >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& f, const FactorLimits& limits) {
  const int n = f.degree();
  std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(n));
  std::vector<bool> feasible(static_cast<std::size_t>(n) + 1, true);
  PrimeChoice best;
  int good = 0;
  const ZPoly df = derivative(f);
  for (std::uint32_t p : small_primes()) {
    if (p < 5) continue;
    if (good >= 5) break;
    if (mpz_fdiv_ui(f.lead().get_mpz_t(), p) == 0) continue;
    FpPoly fp = reduce_mod(f, p);
    if (euclid_gcd(fp, reduce_mod(df, p)).degree() != 0) continue;
    ++good;
    auto fac = factor_mod_p(fp, rng);
    std::vector<FpPoly> polys;
    for (auto& [g, m] : fac.factors) polys.push_back(g);
    if (polys.size() == 1) return {f};
    auto sums = subset_degree_sums(polys, n);
    for (int d = 0; d <= n; ++d) feasible[d] = feasible[d] && sums[d];
    if (best.p == 0 || polys.size() < best.factors.size()) {
      best.p = p;
      best.factors = std::move(polys);
    }
  }
  if (best.p == 0) throw InternalError("no good prime found for a squarefree polynomial");
  bool proper = false;
  for (int d = 1; d < n; ++d) proper = proper || feasible[d];
  if (!proper) return {f};

  // Coefficient bound for lc(f) * (monic factor): ceil(sqrt(n+1)) 2^n |f|_inf |lc f|.
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), BigInt(n + 1).get_mpz_t());
  if (root * root < n + 1) root += 1;
  BigInt bound = root * max_norm(f) * abs(f.lead());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  BigInt modulus = best.p;
  unsigned k = 1;
  while (modulus <= 2 * bound) {
    modulus *= best.p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(f, best.factors, k);
  for (auto& g : lifted) g = reduce_symmetric(g, modulus);

  std::vector<ZPoly> result;
  ZPoly F = f;
  std::uint64_t tested = 0;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    const std::size_t r = lifted.size();
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      int deg = 0;
      for (std::size_t i : idx) deg += lifted[i].degree();
      if (feasible[deg]) {
        if (++tested > limits.max_subsets)
          throw ResourceError("factor recombination exceeded " + std::to_string(limits.max_subsets) + " subsets",
                              "degree " + std::to_string(n) + ", " + std::to_string(result.size()) +
                                  " factors found, " + std::to_string(r) + " modular factors left, subset size " +
                                  std::to_string(s));
        const BigInt lc = F.lead();
        BigInt c = lc;
        for (std::size_t i : idx) c = c * lifted[i][0] % modulus;
        ZPoly cpoly = reduce_symmetric(ZPoly{c}, modulus);
        BigInt c0 = cpoly.is_zero() ? BigInt(0) : cpoly[0];
        BigInt target0 = lc * F[0];
        if (c0 != 0 && mpz_divisible_p(target0.get_mpz_t(), c0.get_mpz_t())) {
          ZPoly G = ZPoly{lc};
          for (std::size_t i : idx) G = reduce_symmetric(G * lifted[i], modulus);
          auto q = trial_divide(F * lc, G);
          if (q) {
            ZPoly h = primitive_part(G);
            result.push_back(h);
            F = *trial_divide(F, h);
            std::vector<ZPoly> rest;
            for (std::size_t i = 0, j = 0; i < r; ++i) {
              if (j < s && idx[j] == i) {
                ++j;
                continue;
              }
              rest.push_back(std::move(lifted[i]));
            }
            lifted = std::move(rest);
            found = true;
            break;
          }
        }
      }
      // next combination in lexicographic order
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == r - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (F.degree() > 0) result.push_back(primitive_part(F));
  return result;
}

}  // namespace

std::vector<QPoly> factor_squarefree_over_q(const QPoly& f0, const FactorLimits& limits) {
  std::vector<QPoly> out;
  if (f0.degree() <= 0) return out;
  QPoly f = monic(f0);
  if (f.degree() > limits.max_degree)
    throw ResourceError("degree " + std::to_string(f.degree()) + " exceeds the factorization cap " +
                            std::to_string(limits.max_degree),
                        "nothing factored");
  if (f.degree() == 1) return {f};
  if (ring_traits<BigRational>::is_zero(f[0])) {
    out.push_back(QPoly::variable());
    f = exact_quotient(f, QPoly::variable());
    if (f.degree() == 0) return out;
  }
  if (f.degree() == 1) {
    out.push_back(f);
    return out;
  }
  for (const ZPoly& g : zassenhaus(primitive_form(f).prim, limits)) out.push_back(monic(to_rational(g)));
  return out;
}

Factorization<BigRational> factor_over_q(const QPoly& P, const FactorLimits& limits) {
  if (P.is_zero()) throw DomainError("factorization of the zero polynomial");
  if (P.degree() > limits.max_degree)
    throw ResourceError("degree " + std::to_string(P.degree()) + " exceeds the factorization cap " +
                            std::to_string(limits.max_degree),
                        "nothing factored");
  Factorization<BigRational> result;
  result.unit = P.lead();
  for (const auto& [g, m] : squarefree_decomposition(P))
    for (auto& h : factor_squarefree_over_q(g, limits)) result.factors.emplace_back(std::move(h), m);
  sort_factors(result);
  return result;
}

bool is_irreducible_over_q(const QPoly& P, const FactorLimits& limits) {
  if (P.degree() <= 0) return false;
  if (P.degree() == 1) return true;
  if (poly_gcd(P, derivative(P)).degree() != 0) return false;
  return factor_squarefree_over_q(P, limits).size() == 1;
}

bool check_eisenstein(const QPoly& P, const EisensteinWitness& w) {
  if (P.degree() < 1 || w.p < 2 || !is_prime(w.p)) return false;
  ZPoly Q = taylor_shift(primitive_form(P).prim, BigInt(w.shift));
  if (mpz_divisible_p(Q.lead().get_mpz_t(), w.p.get_mpz_t())) return false;
  for (int i = 0; i < Q.degree(); ++i)
    if (!mpz_divisible_p(Q[i].get_mpz_t(), w.p.get_mpz_t())) return false;
  BigInt p2 = w.p * w.p;
  return !mpz_divisible_p(Q[0].get_mpz_t(), p2.get_mpz_t());
}

std::optional<EisensteinWitness> eisenstein_witness(const QPoly& P, long lo, long hi) {
  if (P.degree() < 1) throw DomainError("Eisenstein search needs a nonconstant polynomial");
  const ZPoly base = primitive_form(P).prim;
  std::vector<long> shifts;
  if (lo <= 0 && 0 <= hi) shifts.push_back(0);
  for (long s = 1; s <= std::max(std::labs(lo), std::labs(hi)); ++s) {
    if (s <= hi) shifts.push_back(s);
    if (-s >= lo) shifts.push_back(-s);
  }
  for (long s : shifts) {
    ZPoly Q = s == 0 ? base : taylor_shift(base, BigInt(s));
    BigInt g = 0;
    for (int i = 0; i < Q.degree(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Q[i].get_mpz_t());
    if (g == 0 || g == 1 || Q[0] == 0) continue;
    auto fac = factor_integer(g);
    for (const auto& [p, e] : fac.primes) {
      EisensteinWitness w{p, s};
      if (check_eisenstein(P, w)) return w;
    }
  }
  return std::nullopt;
}

QPoly cyclotomic(std::uint64_t k) {
  if (k == 0) throw DomainError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<std::uint64_t, QPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  QPoly r = QPoly::monomial(BigRational(1), k) - QPoly{BigRational(1)};
  for (std::uint64_t d : divisors(k))
    if (d < k) r = exact_quotient(r, cyclotomic(d));
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(k, r);
  return r;
}

std::optional<std::uint64_t> cyclotomic_index(const QPoly& P, bool assume_irreducible) {
  if (P.degree() < 1 || !(P.lead() == 1)) throw DomainError("cyclotomic_index needs a monic nonconstant polynomial");
  if (!assume_irreducible && !is_irreducible_over_q(P)) throw DomainError("cyclotomic_index needs an irreducible polynomial");
  for (const auto& c : P.coeffs())
    if (c.get_den() != 1) return std::nullopt;
  const std::uint64_t d = static_cast<std::uint64_t>(P.degree());
  if (d >= 2 && abs(P[0]) != 1) return std::nullopt;
  for (std::uint64_t k = 1; k <= 2 * d * d + 1; ++k)
    if (euler_phi(k) == d && cyclotomic(k) == P) return k;
  return std::nullopt;
}

}  // namespace hered

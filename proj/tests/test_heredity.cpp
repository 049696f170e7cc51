#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hered/heredity.hpp"

using namespace hered;

namespace {

QPoly X() { return QPoly::variable(); }
QPoly C(long c) { return QPoly{BigRational(c)}; }

FieldPtr rat() { return NumberField::rationals(); }
FieldPtr gaussian() { return NumberField::make(X() * X() + C(1), "i"); }
FieldPtr sqrt2() { return NumberField::make(X() * X() - C(2), "r"); }
FieldPtr quartic2() { return NumberField::make(pow(X(), 4) - C(2), "a"); }
FieldPtr sqrt17() { return NumberField::make(X() * X() - C(17), "b"); }
FieldPtr quartic17() { return NumberField::make(pow(X(), 4) - C(17), "b"); }

NFElement num(const FieldPtr& K, long v) { return NFElement(K, BigRational(v)); }
KPoly kx(const FieldPtr& K) { return KPoly::variable(K); }
KPoly kq(const QPoly& p, const FieldPtr& K = rat()) { return to_kpoly(p, K); }

// Oracle: is the nonzero integer v an exact p-th power in Z, by trial
// division of |v| and a sign rule.
bool int_is_pth_power(long v, unsigned p) {
  if (v < 0 && p % 2 == 0) return false;
  long n = v < 0 ? -v : v;
  if (n == 1) return true;
  for (long q = 2; q * q <= n; ++q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e % p != 0) return false;
  }
  return n == 1;
}

bool oracle_irreducible(const KPoly& P) { return factor_over_nf(P).irreducible(); }

std::vector<std::uint64_t> level_sizes(const HeredityTree& T) {
  std::vector<std::uint64_t> s;
  for (const auto& l : T.levels) s.push_back(l.size());
  return s;
}

}  // namespace

TEST_CASE("very_rootless examples") {
  auto v = very_rootless(num(rat(), -4), 50);
  CHECK(v.rootless);
  CHECK(v.bound == 50);
  CHECK(v.unconditional);

  auto w = very_rootless(num(rat(), 16), 50);
  CHECK_FALSE(w.rootless);
  CHECK(w.prime == 2);
  CHECK(w.root == num(rat(), 4));

  auto A = quartic2();
  auto u = very_rootless(num(A, -2), 50);
  CHECK(u.rootless);
  CHECK(u.unconditional);

  CHECK_THROWS_AS(very_rootless(num(rat(), -1), 10), DomainError);
  CHECK_THROWS_AS(very_rootless(num(rat(), 0), 10), DomainError);
  CHECK_THROWS_AS(very_rootless(NFElement::generator(gaussian()), 10), DomainError);
}

TEST_CASE("very_rootless_modtor examples") {
  auto v = very_rootless_modtor(num(rat(), -4), 50);
  CHECK_FALSE(v.rootless);
  CHECK(v.zeta == num(rat(), -1));
  CHECK(v.root == num(rat(), 2));
  CHECK(v.prime == 2);

  CHECK(very_rootless_modtor(num(rat(), 2), 50).rootless);

  auto K = sqrt17();
  auto w = very_rootless_modtor(num(K, -17), 50);
  CHECK_FALSE(w.rootless);
  CHECK(w.zeta == num(K, -1));
  CHECK(w.root == NFElement::generator(K));
  CHECK(w.prime == 2);
  CHECK(w.zeta * w.root.pow(2) == num(K, -17));
}

TEST_CASE("very_rootless agrees with a valuation oracle over Q") {
  for (long v = -200; v <= 200; ++v) {
    if (v == 0 || v == 1 || v == -1) continue;
    bool oracle = true;
    for (unsigned p = 2; p <= 13; ++p)
      if (int_is_pth_power(v, p)) oracle = false;
    auto r = very_rootless(num(rat(), v), 13);
    CHECK_MESSAGE(r.rootless == oracle, v);
    if (!r.rootless) CHECK(r.root.pow(static_cast<long>(r.prime)) == num(rat(), v));
    bool oracle_mt = true;
    for (unsigned p = 2; p <= 13; ++p)
      if (int_is_pth_power(v, p) || int_is_pth_power(-v, p)) oracle_mt = false;
    CHECK_MESSAGE(very_rootless_modtor(num(rat(), v), 13).rootless == oracle_mt, v);
  }
}

TEST_CASE("root_profile examples") {
  auto p4 = root_profile(num(rat(), 4), 10);
  CHECK(p4.solvable == std::vector<std::uint64_t>{1, 2});
  CHECK(p4.generator == BigRational(1, 2));

  auto p2 = root_profile(num(rat(), 2), 10);
  CHECK(p2.solvable == std::vector<std::uint64_t>{1});
  CHECK(p2.generator == 1);

  auto pm4 = root_profile(num(rat(), -4), 64);
  CHECK(pm4.solvable == std::vector<std::uint64_t>{1});
  CHECK(pm4.modtor_solvable == std::vector<std::uint64_t>{1, 2});
  CHECK(pm4.generator == BigRational(1, 2));
  CHECK(pm4.plain_generator == 1);
  CHECK(pm4.twist.at(2) == 1);

  CHECK_THROWS_AS(root_profile(num(rat(), -1), 10), DomainError);
}

TEST_CASE("root_profile invariants") {
  for (long v : {8L, -8L, 64L, -27L, 36L, 3L, 81L, -64L}) {
    auto p = root_profile(num(rat(), v), 24);
    std::set<std::uint64_t> mt(p.modtor_solvable.begin(), p.modtor_solvable.end());
    for (auto n : p.solvable) CHECK(mt.count(n) == 1);
    CHECK(p.solvable.front() == 1);
    CHECK(p.modtor_solvable.front() == 1);
    for (const BigRational& q : p.observed) {
      BigRational k = q / p.generator;
      CHECK(k.get_den() == 1);
    }
    for (std::uint64_t n = 1; n <= 24; ++n) {
      const bool plain = int_is_pth_power(v, static_cast<unsigned>(n));
      CHECK_MESSAGE((std::count(p.solvable.begin(), p.solvable.end(), n) == 1) == (n == 1 || plain), v, " ", n);
    }
  }
}

TEST_CASE("power_witness_from_factor examples") {
  auto K = rat();
  KPoly x = kx(K);
  auto w = power_witness_from_factor(x * x - x * num(K, 2) + num(K, 2), 4, num(K, -4));
  CHECK(w.xi == num(K, -1));
  CHECK(w.g == num(K, 2));
  CHECK(w.n_prime == 2);
  CHECK(w.xi * w.g.pow(2) == num(K, -4));

  auto v = power_witness_from_factor(x - num(K, 2), 2, num(K, 4));
  CHECK(v.xi == num(K, 1));
  CHECK(v.g == num(K, 2));
  CHECK(v.n_prime == 2);

  auto R = sqrt2();
  NFElement r = NFElement::generator(R);
  KPoly y = kx(R);
  CHECK_THROWS_AS(power_witness_from_factor(y * y - y * r + num(R, 3), 4, num(R, -4)), DomainError);
  CHECK_THROWS_AS(power_witness_from_factor(pow(x, 4) + num(K, 4), 4, num(K, -4)), DomainError);
}

TEST_CASE("power_witness soundness over random factors") {
  std::mt19937_64 rng(7);
  for (const FieldPtr& K : {rat(), gaussian(), sqrt2()}) {
    std::uniform_int_distribution<long> d(-6, 6);
    int found = 0;
    for (int trial = 0; trial < 40 && found < 12; ++trial) {
      NFElement g(K, qpoly({d(rng), K->degree() > 1 ? d(rng) : 0}));
      if (g.is_zero() || root_of_unity_order(g)) continue;
      const std::uint64_t n = 2 + static_cast<std::uint64_t>(trial % 5);
      const std::uint64_t e = n * (1 + static_cast<std::uint64_t>(trial % 2));
      const NFElement a = g.pow(static_cast<long>(e)) * torsion_units(K).generator;
      auto f = factor_over_nf(KPoly::monomial(num(K, 1), n) - a);
      for (const auto& [Q, m] : f.factors) {
        if (Q.degree() >= static_cast<int>(n)) continue;
        ++found;
        auto w = power_witness_from_factor(Q, n, a);
        CHECK(w.xi * w.g.pow(static_cast<long>(w.n_prime)) == a);
        CHECK(w.n_prime > 1);
        CHECK(root_of_unity_order(w.xi).has_value());
      }
    }
    CHECK(found > 0);
  }
}

TEST_CASE("hi_certificate examples") {
  auto K = rat();
  KPoly x = kx(K);
  auto e = hi_certificate(x - num(K, 2));
  REQUIRE(e);
  CHECK(e->kind == CertKind::Eisenstein);
  CHECK(e->eisenstein_prime == 2);
  CHECK(verify_certificate(x - num(K, 2), *e));

  auto s = hi_certificate(x + num(K, 4));
  REQUIRE(s);
  CHECK(s->kind == CertKind::SplitWitness);
  CHECK(s->split_exponent == 4);
  REQUIRE(s->split_factors.size() == 2);
  CHECK(s->split_factors[0].first == kq(X() * X() - C(2) * X() + C(2)));
  CHECK(s->split_factors[1].first == kq(X() * X() + C(2) * X() + C(2)));
  CHECK(verify_certificate(x + num(K, 4), *s));

  CHECK_THROWS_AS(hi_certificate(x * x + num(K, 1)), DomainError);
  CHECK_THROWS_AS(hi_certificate(x), DomainError);

  auto c = hi_certificate(x * x + num(K, 3));
  REQUIRE(c);
  CHECK(c->kind == CertKind::Eisenstein);

  auto lin = hi_certificate(x + num(K, 6));
  REQUIRE(lin);
  CHECK(lin->kind == CertKind::Eisenstein);

  auto l2 = hi_certificate(x - num(K, 72));
  REQUIRE(l2);
  CHECK(l2->kind == CertKind::LinearRootlessModtor);
  CHECK(l2->unconditional);
  CHECK(verify_certificate(x - num(K, 72), *l2));

  auto cap = hi_certificate(x * x - x + num(K, 3));
  REQUIRE(cap);
  CHECK(cap->proves_irreducible());
  CHECK(verify_certificate(x * x - x + num(K, 3), *cap));
}

TEST_CASE("unit roots only get a bounded certificate") {
  auto R = sqrt2();
  NFElement u = NFElement::generator(R) + num(R, 1);  // fundamental unit, not a power
  HeredityOptions opts;
  opts.prime_bound = 13;
  opts.modtor_bound = 13;
  auto c = hi_certificate(kx(R) - u, opts);
  REQUIRE(c);
  CHECK(c->proves_irreducible());
  CHECK_FALSE(c->unconditional);
  CHECK(c->prime_bound == 13);
  CHECK(verify_certificate(kx(R) - u, *c, opts));
}

TEST_CASE("x+17 over the quartic field: every inflation up to 12 is irreducible") {
  auto K = quartic17();
  KPoly x = kx(K);
  for (std::uint64_t n = 1; n <= 12; ++n)
    CHECK_MESSAGE(oracle_irreducible(KPoly::monomial(num(K, 1), n) + num(K, 17)), n);
  auto c = hi_certificate(x + num(K, 17));
  REQUIRE(c);
  CHECK(c->proves_irreducible());
  CHECK(c->unconditional);
}

TEST_CASE("certificate soundness: Eisenstein persists, Capelli matches factorization") {
  for (const QPoly& p : {X() * X() - C(2), pow(X(), 3) + C(6) * X() + C(3), X() - C(2), X() * X() + C(10) * X() + C(5)}) {
    auto c = hi_certificate(kq(p));
    REQUIRE(c);
    REQUIRE(c->kind == CertKind::Eisenstein);
    for (std::size_t n = 1; n <= 20; ++n) CHECK(check_eisenstein(inflate(p, n), EisensteinWitness{c->eisenstein_prime, 0}));
  }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-20, 20);
  int checked = 0;
  for (const FieldPtr& K : {rat(), gaussian(), sqrt2()}) {
    for (int trial = 0; trial < 6; ++trial) {
      NFElement a(K, qpoly({d(rng), K->degree() > 1 ? d(rng) : 0}));
      if (a.is_zero() || root_of_unity_order(a)) continue;
      KPoly Q = kx(K) - a;
      auto c = hi_certificate(Q);
      REQUIRE(c);
      if (!c->proves_irreducible()) {
        CHECK_FALSE(oracle_irreducible(inflate(Q, c->split_exponent)));
        continue;
      }
      for (std::size_t n = 1; n <= 12; ++n) CHECK_MESSAGE(oracle_irreducible(inflate(Q, n)), to_string(a), " n=", n);
      ++checked;
    }
  }
  CHECK(checked > 5);
}

TEST_CASE("rootless-linear: both directions against factorization") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-30, 30);
  for (const FieldPtr& K : {rat(), gaussian()}) {
    for (int trial = 0; trial < 8; ++trial) {
      NFElement a(K, qpoly({d(rng), K->degree() > 1 ? d(rng) : 0}));
      if (a.is_zero() || root_of_unity_order(a)) continue;
      auto v = very_rootless_modtor(a, 13);
      if (v.rootless)
        for (std::uint64_t n = 2; n <= 12; ++n)
          CHECK_MESSAGE(oracle_irreducible(KPoly::monomial(num(K, 1), n) - a), to_string(a), " n=", n);
    }
    for (long base : {2L, 3L, 5L}) {
      NFElement c = num(K, base);
      for (std::uint64_t n = 2; n <= 6; ++n) {
        NFElement a = c.pow(static_cast<long>(n));
        CHECK(rem(KPoly::monomial(num(K, 1), n) - a, kx(K) - c).is_zero());
        CHECK_FALSE(very_rootless(a, 13).rootless);
      }
    }
  }
}

TEST_CASE("build_tree examples") {
  auto K = rat();
  KPoly x = kx(K);
  TreeRequest req;
  req.depth = 4;
  auto t = build_tree(x - num(K, 2), req);
  CHECK(level_sizes(t) == std::vector<std::uint64_t>{1, 1, 1, 1});
  CHECK(t.exponents == std::vector<std::uint64_t>{1, 2, 6, 24});
  for (const auto& n : t.nodes) {
    CHECK(n.status == NodeStatus::Certified);
    REQUIRE(n.certificate);
    CHECK(n.certificate->kind == CertKind::Eisenstein);
  }
  CHECK(t.trimmed_nodes().size() == 1);
  CHECK(t.node(t.levels[3][0]).poly == KPoly::monomial(num(K, 1), 24) - num(K, 2));

  req.depth = 3;
  auto c = build_tree(x * x + num(K, 1), req);
  CHECK(level_sizes(c) == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(c.node(c.levels[1][0]).poly == kq(pow(X(), 4) + C(1)));
  CHECK(c.node(c.levels[2][0]).poly == kq(pow(X(), 4) + C(1)));
  CHECK(c.node(c.levels[2][1]).poly == kq(pow(X(), 8) - pow(X(), 4) + C(1)));
  for (bool ok : c.level_product_ok) CHECK(ok);
  CHECK_FALSE(c.warnings.empty());

  req.depth = 4;
  auto s = build_tree(x + num(K, 4), req);
  CHECK(level_sizes(s) == std::vector<std::uint64_t>{1, 1, 1, 2});
  CHECK(s.node(s.levels[3][0]).poly == kq(pow(X(), 12) - C(2) * pow(X(), 6) + C(2)));
  CHECK(s.node(s.levels[3][1]).poly == kq(pow(X(), 12) + C(2) * pow(X(), 6) + C(2)));
  CHECK(s.node(s.levels[0][0]).certificate->kind == CertKind::SplitWitness);

  CHECK_THROWS_AS(build_tree(x, req), DomainError);
  CHECK_THROWS_AS(build_tree(KPoly::constant(num(K, 3)), req), DomainError);
}

TEST_CASE("explicit exponent chains") {
  auto K = rat();
  TreeRequest req;
  req.depth = 3;
  req.exponents = {1, 2, 12};
  auto t = build_tree(kx(K) + num(K, 4), req);
  CHECK_FALSE(t.factorial_schedule);
  CHECK(level_sizes(t) == std::vector<std::uint64_t>{1, 1, 2});
  req.exponents = {1, 3, 4};
  CHECK_THROWS_AS(build_tree(kx(K) + num(K, 4), req), DomainError);
}

TEST_CASE("classify_good_heredity examples") {
  auto K = rat();
  KPoly x = kx(K);
  TreeRequest req;
  auto r = classify_good_heredity(x - num(K, 2), req);
  CHECK(r.verdict == Verdict::GoodHeredityCertified);
  CHECK(r.certified_at_level == 1);
  CHECK(r.certificate_scope == "unconditional");

  auto s = classify_good_heredity(x - num(K, 16), req);
  CHECK(s.verdict == Verdict::GoodHeredityCertified);
  CHECK(s.tree.levels[1].size() == 2);
  CHECK(s.tree.node(s.tree.levels[1][0]).poly == x - num(K, 4));
  CHECK(s.tree.node(s.tree.levels[1][1]).poly == x + num(K, 4));

  auto f = classify_good_heredity(x + num(K, 4), req);
  CHECK(f.verdict == Verdict::GoodHeredityCertified);
  CHECK(f.certified_at_level == 4);

  req.depth = 2;
  auto g = classify_good_heredity(x + num(K, 4), req);
  CHECK(g.verdict == Verdict::InconclusiveAtDepth);
  REQUIRE(g.open_branches.size() == 1);
  CHECK(g.open_branches[0].size() == 2);
  CHECK(g.open_branches[0][1].n == 2);
  CHECK(g.open_branches[0][1].k == 2);

  CHECK_THROWS_AS(classify_good_heredity(x * x + num(K, 1), req), DomainError);
  CHECK_THROWS_AS(classify_good_heredity((x - num(K, 1)) * (x - num(K, 3)), req), DomainError);
}

TEST_CASE("level products and trimming on random trees") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 12; ++trial) {
    QPoly p{BigRational(d(rng)), BigRational(d(rng)), BigRational(1)};
    if (p[0] == 0) continue;
    TreeRequest req;
    req.depth = 3;
    auto t = build_tree(kq(p), req);
    for (std::size_t i = 0; i < t.levels.size(); ++i) CHECK(t.level_product_ok[i]);
    for (const auto& n : t.nodes) {
      if (n.parent < 0) continue;
      const auto& par = t.node(n.parent);
      CHECK(rem(inflate(par.poly, n.exponent / par.exponent), n.poly).is_zero());
      if (par.status == NodeStatus::Certified) CHECK_FALSE(n.in_trimmed);
    }
  }
}

TEST_CASE("degree-M finiteness while deepening") {
  auto K = rat();
  for (long c : {-16L, 4L, -2L, 9L}) {
    KPoly P = kx(K) + num(K, c);
    std::set<std::string> seen;
    for (int D = 4; D <= 5; ++D) {
      TreeRequest req;
      req.depth = D;
      auto r = classify_good_heredity(P, req);
      REQUIRE(r.verdict == Verdict::GoodHeredityCertified);
      std::set<std::string> now;
      for (const auto& n : r.tree.nodes)
        if (n.poly.degree() <= 6) now.insert(to_string(n.poly));
      if (!seen.empty()) CHECK(now == seen);
      seen = now;
    }
  }
}

TEST_CASE("subfield monotonicity") {
  for (const QPoly& p : {pow(X(), 4) + C(4), pow(X(), 4) + C(2), pow(X(), 4) - C(8), pow(X(), 6) + C(27)}) {
    auto fq = factor_over_q(p);
    for (const FieldPtr& K : {gaussian(), sqrt2(), quartic2()}) {
      auto fk = factor_over_nf(kq(p, K));
      for (const auto& [g, m] : fq.factors) {
        (void)m;
        KPoly prod = KPoly::constant(num(K, 1));
        for (const auto& [h, e] : fk.factors)
          if (rem(kq(g, K), h).is_zero()) prod *= pow(h, e);
        CHECK(prod == kq(g, K));
      }
    }
  }
}

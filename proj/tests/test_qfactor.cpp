#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "hered/qfactor.hpp"

using namespace hered;

namespace {

QPoly X() { return QPoly::variable(); }
QPoly C(long c) { return QPoly{BigRational(c)}; }

FpPoly fp(std::initializer_list<long> c, std::uint32_t p) {
  std::vector<Fp> v;
  for (long x : c) v.emplace_back(x, p);
  return FpPoly(std::move(v), FpContext{p});
}

using corpus::rabin_irreducible;
using corpus::random_irreducible;

}  // namespace

TEST_CASE("factor_mod_p examples") {
  std::mt19937_64 rng(1);
  auto f = factor_mod_p(fp({1, 0, 1}, 5), rng);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == fp({2, 1}, 5));
  CHECK(f.factors[1].first == fp({3, 1}, 5));
  // oracle: roots of x^2+1 mod 5 by exhaustion
  std::vector<long> roots;
  for (long a = 0; a < 5; ++a)
    if ((a * a + 1) % 5 == 0) roots.push_back(a);
  CHECK(roots == std::vector<long>{2, 3});
  auto g = factor_mod_p(fp({1, 0, 1}, 3), rng);
  CHECK(g.irreducible());
  for (long a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);
  auto h = factor_mod_p(fp({0, 0, 1}, 7), rng);
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].first == fp({0, 1}, 7));
  CHECK(h.factors[0].second == 2);
  CHECK_THROWS_AS(factor_mod_p(FpPoly(FpContext{7}), rng), DomainError);
}

TEST_CASE("factor_mod_p agrees with Rabin's test on random inputs") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    for (int it = 0; it < 60; ++it) {
      std::vector<Fp> v;
      const int d = 1 + static_cast<int>(rng() % 10);
      for (int i = 0; i <= d; ++i) v.emplace_back(static_cast<long>(rng() % p), p);
      v.back() = Fp(1 + static_cast<long>(rng() % (p - 1)), p);
      FpPoly f(std::move(v), FpContext{p});
      auto fac = factor_mod_p(f, rng);
      REQUIRE(fac.expand() == f);
      for (auto& [g, m] : fac.factors) REQUIRE(rabin_irreducible(g));
    }
  }
}

TEST_CASE("hensel_lift examples") {
  ZPoly f{BigInt(-1), BigInt(0), BigInt(1)};
  auto l = hensel_lift(f, {fp({2, 1}, 3), fp({1, 1}, 3)}, 2);
  REQUIRE(l.size() == 2);
  CHECK(reduce_symmetric(l[0], 9) == ZPoly{BigInt(-1), BigInt(1)});
  CHECK(reduce_symmetric(l[1], 9) == ZPoly{BigInt(1), BigInt(1)});

  ZPoly g{BigInt(1), BigInt(0), BigInt(1)};
  auto m = hensel_lift(g, {fp({2, 1}, 5), fp({3, 1}, 5)}, 2);
  // oracle: a with a^2 = -1 mod 25 and a = 2 mod 5
  long a = 0;
  for (long t = 0; t < 25; ++t)
    if ((t * t + 1) % 25 == 0 && t % 5 == 2) a = t;
  CHECK(a == 7);
  CHECK(m[0] == ZPoly{BigInt(a), BigInt(1)});
  CHECK(m[1] == ZPoly{BigInt(18), BigInt(1)});

  auto same = hensel_lift(g, {fp({2, 1}, 5), fp({3, 1}, 5)}, 1);
  CHECK(same[0] == ZPoly{BigInt(2), BigInt(1)});
  CHECK(same[1] == ZPoly{BigInt(3), BigInt(1)});
}

TEST_CASE("hensel_lift reproduces f modulo p^k") {
  std::mt19937_64 rng(11);
  ZPoly f{BigInt(7), BigInt(-3), BigInt(0), BigInt(5), BigInt(1), BigInt(0), BigInt(3)};
  const std::uint32_t p = 13;
  auto fac = factor_mod_p(reduce_mod(f, p), rng);
  std::vector<FpPoly> polys;
  for (auto& [g, mult] : fac.factors) {
    REQUIRE(mult == 1);
    polys.push_back(g);
  }
  for (unsigned k : {1u, 2u, 3u, 5u, 9u}) {
    auto lifted = hensel_lift(f, polys, k);
    BigInt M;
    mpz_ui_pow_ui(M.get_mpz_t(), p, k);
    ZPoly prod{f.lead()};
    for (auto& g : lifted) prod = reduce_symmetric(prod * g, M);
    CHECK(reduce_symmetric(prod - f, M).is_zero());
    for (std::size_t i = 0; i < lifted.size(); ++i) CHECK(reduce_mod(lifted[i], p) == polys[i]);
  }
}

TEST_CASE("factor_over_q examples") {
  auto x = X();
  auto f = factor_over_q(pow(x, 4) + C(4));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == x * x - C(2) * x + C(2));
  CHECK(f.factors[1].first == x * x + C(2) * x + C(2));
  CHECK(f.expand() == pow(x, 4) + C(4));

  auto g = factor_over_q(pow(x, 4) + C(1));
  CHECK(g.irreducible());
  // oracle: no monic integer quadratic splitting (x^2+ax+b)(x^2+cx+d)
  bool split = false;
  for (long b : {-1L, 1L})
    for (long a = -3; a <= 3; ++a)
      for (long c = -3; c <= 3; ++c) {
        long d = b;  // b*d = 1
        if ((x * x + C(a) * x + C(b)) * (x * x + C(c) * x + C(d)) == pow(x, 4) + C(1)) split = true;
      }
  CHECK_FALSE(split);

  auto h = factor_over_q(pow(x, 12) + C(1));
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].first == pow(x, 4) + C(1));
  CHECK(h.factors[1].first == pow(x, 8) - pow(x, 4) + C(1));
  CHECK(exact_quotient(pow(x, 24) - C(1), pow(x, 12) - C(1)) == pow(x, 12) + C(1));
  CHECK(h.factors[0].first * h.factors[1].first == pow(x, 12) + C(1));
  CHECK_THROWS_AS(factor_over_q(QPoly()), DomainError);
}

TEST_CASE("factor_over_q edge cases") {
  auto x = X();
  auto f = factor_over_q(C(-3) * pow(x, 3) * pow(x - C(1), 2));
  CHECK(f.unit == -3);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == x - C(1));
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[1].first == x);
  CHECK(f.factors[1].second == 3);
  auto g = factor_over_q(C(5));
  CHECK(g.factors.empty());
  auto h = factor_over_q(pow(x, 24) + C(4));
  REQUIRE(h.factors.size() == 2);
  CHECK(h.factors[0].first == pow(x, 12) - C(2) * pow(x, 6) + C(2));
  auto w = factor_over_q(make_rational(1, 2) * x * x - make_rational(1, 8));
  REQUIRE(w.factors.size() == 2);
  CHECK(w.factors[0].first == x - make_rational(1, 2));
  FactorLimits tiny;
  tiny.max_degree = 3;
  CHECK_THROWS_AS(factor_over_q(pow(x, 4) + C(1), tiny), ResourceError);
}

TEST_CASE("factor_over_q round trip on random products of irreducibles") {
  std::mt19937_64 rng(4242);
  for (int it = 0; it < 200; ++it) {
    const int count = 2 + static_cast<int>(rng() % 3);
    std::vector<QPoly> parts;
    QPoly prod = C(1);
    for (int i = 0; i < count; ++i) {
      parts.push_back(random_irreducible(rng));
      prod *= parts.back();
    }
    auto fac = factor_over_q(prod);
    std::vector<QPoly> got;
    for (auto& [g, m] : fac.factors)
      for (unsigned i = 0; i < m; ++i) got.push_back(g);
    auto cmp = [](const QPoly& a, const QPoly& b) { return compare(a, b) < 0; };
    std::sort(parts.begin(), parts.end(), cmp);
    std::sort(got.begin(), got.end(), cmp);
    REQUIRE(got == parts);
    int deg = 0;
    for (auto& [g, m] : fac.factors) deg += static_cast<int>(m) * g.degree();
    REQUIRE(deg == prod.degree());
    REQUIRE(fac.unit == prod.lead());
  }
}

TEST_CASE("Q-factorization refines into the mod-p factorization") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 40; ++it) {
    QPoly prod = random_irreducible(rng) * random_irreducible(rng) * random_irreducible(rng);
    auto fac = factor_over_q(prod);
    ZPoly z = primitive_form(prod).prim;
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
      FpPoly zp = reduce_mod(z, p);
      if (mpz_fdiv_ui(z.lead().get_mpz_t(), p) == 0) continue;
      if (euclid_gcd(zp, derivative(zp)).degree() != 0) continue;
      auto whole = factor_mod_p(reduce_mod(prod, p), rng);
      std::vector<FpPoly> a, b;
      for (auto& [g, m] : whole.factors) a.push_back(g);
      for (auto& [q, m] : fac.factors)
        for (auto& [g, mm] : factor_mod_p(reduce_mod(q, p), rng).factors) b.push_back(g);
      auto cmp = [](const FpPoly& u, const FpPoly& v) { return compare(u, v) < 0; };
      std::sort(a.begin(), a.end(), cmp);
      std::sort(b.begin(), b.end(), cmp);
      REQUIRE(a == b);
      break;
    }
  }
}

TEST_CASE("eisenstein_witness examples") {
  auto x = X();
  auto w = eisenstein_witness(x * x - C(2));
  REQUIRE(w);
  CHECK(w->p == 2);
  CHECK(w->shift == 0);
  auto w24 = eisenstein_witness(pow(x, 24) - C(2));
  REQUIRE(w24);
  CHECK(w24->p == 2);
  CHECK(w24->shift == 0);
  auto w3 = eisenstein_witness(x * x + x + C(1));
  REQUIRE(w3);
  CHECK(w3->p == 3);
  CHECK(w3->shift == 1);
  CHECK(taylor_shift(x * x + x + C(1), BigRational(1)) == x * x + C(3) * x + C(3));
  CHECK_FALSE(eisenstein_witness(x * x + C(1), 0, 0).has_value());
}

TEST_CASE("Eisenstein witnesses survive inflation") {
  auto x = X();
  for (const QPoly& P : {x * x - C(2), pow(x, 3) + C(6) * x + C(3), x - C(2)}) {
    auto w = eisenstein_witness(P, 0, 0);
    REQUIRE(w);
    for (std::size_t n = 1; n <= 20; ++n) {
      auto wn = eisenstein_witness(inflate(P, n), 0, 0);
      REQUIRE(wn);
      CHECK(wn->p == w->p);
      CHECK(wn->shift == 0);
      CHECK(check_eisenstein(inflate(P, n), *w));
    }
  }
}

TEST_CASE("cyclotomic_index") {
  auto x = X();
  CHECK(cyclotomic_index(x * x + x + C(1)).value() == 3);
  CHECK(cyclotomic_index(pow(x, 4) + C(1)).value() == 8);
  CHECK(euler_phi(8) == 4);
  CHECK_FALSE(cyclotomic_index(x - C(2)).has_value());
  CHECK_THROWS_AS(cyclotomic_index(x * x - C(1)), DomainError);
  for (std::uint64_t k = 1; k <= 60; ++k) {
    QPoly phi = cyclotomic(k);
    REQUIRE(cyclotomic_index(phi).value() == k);
    REQUIRE(rem(QPoly::monomial(BigRational(1), k) - C(1), phi).is_zero());
  }
}

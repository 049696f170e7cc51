#include <random>

#include "doctest.h"
#include "hered/polyalg.hpp"
#include "hered/rational_poly.hpp"

using namespace hered;

namespace {

QPoly X() { return QPoly::variable(); }
QPoly C(long c) { return QPoly{BigRational(c)}; }

// Independent oracle: determinant of the Sylvester matrix by Gaussian
// elimination over Q.
BigRational sylvester_resultant(const QPoly& a, const QPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<BigRational>> M(N, std::vector<BigRational>(N, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];
  BigRational det = 1;
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (M[r][col] == 0) continue;
      BigRational f = M[r][col] / M[col][col];
      for (int c = col; c < N; ++c) M[r][c] -= f * M[col][c];
    }
  }
  return det;
}

QPoly random_qpoly(std::mt19937_64& rng, int max_deg, long h) {
  std::uniform_int_distribution<int> dd(0, max_deg);
  std::uniform_int_distribution<long> cd(-h, h);
  int d = dd(rng);
  std::vector<BigRational> v;
  for (int i = 0; i <= d; ++i) v.emplace_back(make_rational(cd(rng), std::uniform_int_distribution<long>(1, 3)(rng)));
  return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("divrem examples") {
  auto x = X();
  auto [q1, r1] = divrem(x * x - C(1), x - C(1));
  CHECK(q1 == x + C(1));
  CHECK(r1.is_zero());
  auto [q2, r2] = divrem(pow(x, 4) + C(4), x * x + C(2) * x + C(2));
  CHECK(q2 == x * x - C(2) * x + C(2));
  CHECK(r2.is_zero());
  // oracle: expand the product
  CHECK((x * x + C(2) * x + C(2)) * (x * x - C(2) * x + C(2)) == pow(x, 4) + C(4));
  auto [q3, r3] = divrem(pow(x, 3), x * x);
  CHECK(q3 == x);
  CHECK(r3.is_zero());
  CHECK_THROWS_AS(divrem(x, QPoly()), DomainError);
  FpPoly a(std::vector<Fp>{Fp(1, 5)}, FpContext{5});
  FpPoly b(std::vector<Fp>{Fp(1, 7)}, FpContext{7});
  CHECK_THROWS_AS(divrem(a, b), DomainError);
}

TEST_CASE("inflate") {
  auto x = X();
  CHECK(inflate(x - C(2), 3) == pow(x, 3) - C(2));
  CHECK(inflate(x * x - C(3) * x + C(1), 2) == pow(x, 4) - C(3) * x * x + C(1));
  QPoly p = qpoly({5, -1, 0, 7});
  CHECK(inflate(p, 1) == p);
  CHECK_THROWS_AS(inflate(p, 0), DomainError);
}

TEST_CASE("gcd examples") {
  auto x = X();
  CHECK(poly_gcd(x * x - C(1), x * x - C(2) * x + C(1)) == x - C(1));
  QPoly f = pow(x, 4) + C(4);
  CHECK(poly_gcd(f, derivative(f)) == C(1));
  CHECK(resultant(f, derivative(f)) != 0);  // oracle for squarefreeness
  QPoly p = C(3) * x * x + C(6);
  CHECK(poly_gcd(p, QPoly()) == x * x + C(2));
  CHECK_THROWS_AS(poly_gcd(QPoly(), QPoly()), DomainError);
}

TEST_CASE("derivative") {
  auto x = X();
  CHECK(derivative(pow(x, 3) - C(2)) == C(3) * x * x);
  QPoly T = C(2) * x * x - C(1);
  QPoly TT = compose(T, T);
  CHECK(TT == C(8) * pow(x, 4) - C(8) * x * x + C(1));
  CHECK(derivative(TT) == C(32) * pow(x, 3) - C(16) * x);
  CHECK(derivative(C(7)).is_zero());
}

TEST_CASE("resultant examples") {
  auto x = X();
  QPoly a = x * x - C(2), b = x * x - C(3);
  CHECK(resultant(a, b) == 1);
  CHECK(sylvester_resultant(a, b) == 1);
  QPoly B = pow(x, 3) + C(2) * x - C(5);
  CHECK(resultant(x - C(3), B) == evaluate(B, BigRational(3)));
  CHECK(resultant(B, B) == 0);
  CHECK_THROWS_AS(resultant(QPoly(), B), DomainError);
}

TEST_CASE("squarefree decomposition examples") {
  auto x = X();
  auto d = squarefree_decomposition(pow(x - C(1), 2) * (x + C(2)));
  REQUIRE(d.size() == 2);
  CHECK(d[0].first == x + C(2));
  CHECK(d[0].second == 1);
  CHECK(d[1].first == x - C(1));
  CHECK(d[1].second == 2);
  auto e = squarefree_decomposition(C(32) * pow(x, 3) - C(16) * x);
  REQUIRE(e.size() == 1);
  CHECK(e[0].second == 1);
  CHECK(e[0].first == pow(x, 3) - make_rational(1, 2) * x);
  auto f = squarefree_decomposition(pow(x, 5));
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == x);
  CHECK(f[0].second == 5);
  CHECK_THROWS_AS(squarefree_decomposition(QPoly()), DomainError);
}

TEST_CASE("canonical string") {
  auto x = X();
  CHECK(to_string(pow(x, 4) - C(3) * x * x + C(1)) == "x^4-3*x^2+1");
  CHECK(to_string(make_rational(-1, 2) * x) == "-1/2*x");
  CHECK(to_string(QPoly()) == "0");
}

TEST_CASE("divrem round trip over Q and GF(p)") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    QPoly a = random_qpoly(rng, 8, 20), b = random_qpoly(rng, 5, 20);
    if (b.is_zero()) continue;
    auto [q, r] = divrem(a, b);
    REQUIRE(b * q + r == a);
    REQUIRE(r.degree() < b.degree());
  }
  for (int i = 0; i < 1000; ++i) {
    QPoly a0 = random_qpoly(rng, 8, 20), b0 = random_qpoly(rng, 5, 20);
    FpPoly a = reduce_mod(primitive_form(a0).prim, 101), b = reduce_mod(primitive_form(b0).prim, 101);
    if (b.is_zero()) continue;
    auto [q, r] = divrem(a, b);
    REQUIRE(b * q + r == a);
    REQUIRE(r.degree() < b.degree());
  }
}

TEST_CASE("inflate is a ring homomorphism") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    QPoly p = random_qpoly(rng, 5, 9), s = random_qpoly(rng, 5, 9);
    std::size_t a = 1 + rng() % 4, b = 1 + rng() % 4;
    REQUIRE(inflate(p * s, a) == inflate(p, a) * inflate(s, a));
    REQUIRE(inflate(inflate(p, a), b) == inflate(p, a * b));
  }
}

TEST_CASE("gcd, squarefreeness and resultant agree") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    QPoly a = random_qpoly(rng, 4, 5), b = random_qpoly(rng, 4, 5);
    if (a.degree() < 1 || b.degree() < 1) continue;
    if (rng() % 3 == 0) {
      QPoly common = random_qpoly(rng, 2, 4);
      if (common.degree() >= 1) {
        a *= common;
        b *= common;
      }
    }
    BigRational res = resultant(a, b);
    REQUIRE(res == sylvester_resultant(a, b));
    QPoly g = poly_gcd(a, b);
    REQUIRE((res == 0) == (g.degree() > 0));
    REQUIRE(rem(a, g).is_zero());
    REQUIRE(rem(b, g).is_zero());
    auto sq = squarefree_decomposition(a);
    unsigned maxm = 0;
    QPoly prod = C(1);
    for (auto& [f, m] : sq) {
      maxm = std::max(maxm, m);
      prod *= pow(f, m);
    }
    REQUIRE(prod == monic(a));
    REQUIRE((poly_gcd(a, derivative(a)).degree() == 0) == (maxm == 1));
  }
}

#pragma once

// Algorithms generic over the coefficient domain: subresultant resultant
// (any integral domain with exact division) and Yun's squarefree
// decomposition (characteristic-zero fields).

#include <utility>
#include <vector>

#include "hered/poly.hpp"
#include "hered/rational_poly.hpp"

namespace hered {

template <class T>
T ring_power(const T& base, unsigned long e, const typename ring_traits<T>::context& ctx) {
  T result = ring_traits<T>::one(ctx);
  T b = base;
  while (e != 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return result;
}

/// Res(A, B) by the subresultant PRS (no content removal).
template <class T>
T resultant(Poly<T> A, Poly<T> B) {
  using tr = ring_traits<T>;
  if (A.is_zero() || B.is_zero()) throw DomainError("resultant of a zero polynomial");
  A.check(B);
  const auto ctx = A.context();
  bool negate = false;
  if (A.degree() < B.degree()) {
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) negate = true;
    std::swap(A, B);
  }
  if (B.degree() == 0) {
    T r = ring_power(B.lead(), static_cast<unsigned long>(A.degree()), ctx);
    return negate ? T(-r) : r;
  }
  T g = tr::one(ctx);
  T h = tr::one(ctx);
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) negate = !negate;
    Poly<T> R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return tr::zero(ctx);
    T divisor = g * ring_power(h, static_cast<unsigned long>(delta), ctx);
    std::vector<T> rc;
    rc.reserve(R.size());
    for (const T& c : R.coeffs()) rc.push_back(tr::exact_div(c, divisor));
    B = Poly<T>(std::move(rc), ctx);
    g = A.lead();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = tr::exact_div(ring_power(g, static_cast<unsigned long>(delta), ctx),
                        ring_power(h, static_cast<unsigned long>(delta - 1), ctx));
    }
    if (B.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(A.degree());
      T r = tr::exact_div(ring_power(B.lead(), da, ctx), ring_power(h, da - 1, ctx));
      return negate ? T(-r) : r;
    }
  }
}

/// Generic gcd over a field; the Q overload in rational_poly.hpp is faster.
template <class T>
Poly<T> poly_gcd(const Poly<T>& a, const Poly<T>& b) {
  return euclid_gcd(a, b);
}

/// Yun's algorithm: monic(P) == prod f_i^{m_i}, pairwise coprime squarefree
/// f_i, listed by increasing multiplicity.
template <class T>
std::vector<std::pair<Poly<T>, unsigned>> squarefree_decomposition(const Poly<T>& P) {
  if (P.is_zero()) throw DomainError("squarefree decomposition of zero");
  std::vector<std::pair<Poly<T>, unsigned>> out;
  if (P.degree() == 0) return out;
  Poly<T> f = monic(P);
  Poly<T> df = derivative(f);
  Poly<T> a = poly_gcd(f, df);
  Poly<T> b = exact_quotient(f, a);
  Poly<T> c = exact_quotient(df, a);
  Poly<T> d = c - derivative(b);
  unsigned i = 1;
  while (b.degree() > 0) {
    Poly<T> g = poly_gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - derivative(b);
    ++i;
  }
  return out;
}

}  // namespace hered

#pragma once

// Dense univariate polynomials over any coefficient domain described by
// ring_traits<T>. Coefficients are stored constant-term first; the zero
// polynomial is the empty vector.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hered/ring.hpp"

namespace hered {

template <class T>
class Poly {
 public:
  using traits = ring_traits<T>;
  using context_type = typename traits::context;
  using value_type = T;

  Poly() = default;
  explicit Poly(context_type ctx) : ctx_(std::move(ctx)) {}
  Poly(std::vector<T> coeffs, context_type ctx) : c_(std::move(coeffs)), ctx_(std::move(ctx)) {
    normalize();
  }
  template <class U = T>
    requires std::is_same_v<typename ring_traits<U>::context, NoContext>
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) {
    normalize();
  }
  template <class U = T>
    requires std::is_same_v<typename ring_traits<U>::context, NoContext>
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}, traits::context_of(c)); }
  static Poly monomial(const T& c, std::size_t k) {
    auto ctx = traits::context_of(c);
    std::vector<T> v(k + 1, traits::zero(ctx));
    v[k] = c;
    return Poly(std::move(v), ctx);
  }
  /// The polynomial x.
  static Poly variable(const context_type& ctx = {}) {
    return Poly(std::vector<T>{traits::zero(ctx), traits::one(ctx)}, ctx);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : traits::zero(ctx_); }
  const T& lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  const std::vector<T>& coeffs() const { return c_; }
  const context_type& context() const { return ctx_; }
  T zero_scalar() const { return traits::zero(ctx_); }
  T one_scalar() const { return traits::one(ctx_); }
  bool is_one() const { return c_.size() == 1 && c_[0] == traits::one(ctx_); }

  Poly operator+(const Poly& o) const {
    check(o);
    const Poly& big = c_.size() >= o.c_.size() ? *this : o;
    const Poly& small = c_.size() >= o.c_.size() ? o : *this;
    std::vector<T> r = big.c_;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r[i] += small.c_[i];
    return Poly(std::move(r), ctx_);
  }
  Poly operator-(const Poly& o) const {
    check(o);
    std::vector<T> r = c_;
    if (r.size() < o.c_.size()) r.resize(o.c_.size(), traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r), ctx_);
  }
  Poly operator-() const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const T& c : c_) r.push_back(-c);
    return Poly(std::move(r), ctx_);
  }
  Poly operator*(const Poly& o) const {
    check(o);
    if (c_.empty() || o.c_.empty()) return Poly(ctx_);
    std::vector<T> r(c_.size() + o.c_.size() - 1, traits::zero(ctx_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (traits::is_zero(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(r), ctx_);
  }
  Poly operator*(const T& s) const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const T& c : c_) r.push_back(c * s);
    return Poly(std::move(r), ctx_);
  }
  Poly operator+(const T& s) const { return *this + constant_like(s); }
  Poly operator-(const T& s) const { return *this - constant_like(s); }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  void check(const Poly& o) const {
    if (!traits::same_context(ctx_, o.ctx_)) throw DomainError("mixed coefficient domains");
  }

 private:
  Poly constant_like(const T& s) const {
    if (traits::is_zero(s)) return Poly(ctx_);
    return Poly(std::vector<T>{s}, ctx_);
  }
  void normalize() {
    while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
  context_type ctx_{};
};

template <class T>
Poly<T> operator*(const T& s, const Poly<T>& p) {
  return p * s;
}

template <class T>
Poly<T> derivative(const Poly<T>& p) {
  using tr = ring_traits<T>;
  if (p.degree() <= 0) return Poly<T>(p.context());
  std::vector<T> r;
  r.reserve(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i)
    r.push_back(p[i] * tr::from_int(static_cast<long>(i), p.context()));
  return Poly<T>(std::move(r), p.context());
}

/// P(x^n).
template <class T>
Poly<T> inflate(const Poly<T>& p, std::size_t n) {
  if (n == 0) throw DomainError("inflate needs n >= 1");
  if (n == 1 || p.is_zero()) return p;
  using tr = ring_traits<T>;
  std::vector<T> r((p.size() - 1) * n + 1, tr::zero(p.context()));
  for (std::size_t i = 0; i < p.size(); ++i) r[i * n] = p[i];
  return Poly<T>(std::move(r), p.context());
}

template <class T>
T evaluate(const Poly<T>& p, const T& x) {
  if (p.is_zero()) return ring_traits<T>::zero(ring_traits<T>::context_of(x));
  T acc = p.lead();
  for (int i = p.degree() - 1; i >= 0; --i) acc = acc * x + p[static_cast<std::size_t>(i)];
  return acc;
}

/// p(q(x)) by Horner.
template <class T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q) {
  Poly<T> acc(p.context());
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<T>::constant(p[static_cast<std::size_t>(i)]);
  return acc;
}

/// p(x + c).
template <class T>
Poly<T> taylor_shift(const Poly<T>& p, const T& c) {
  using tr = ring_traits<T>;
  std::vector<T> a = p.coeffs();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  (void)sizeof(tr);
  return Poly<T>(std::move(a), p.context());
}

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned long e) {
  Poly<T> result = Poly<T>::constant(base.one_scalar());
  Poly<T> b = base;
  while (e != 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

template <class T>
Poly<T> monic(const Poly<T>& p) {
  static_assert(ring_traits<T>::is_field, "monic() needs field coefficients");
  if (p.is_zero()) return p;
  return p * ring_traits<T>::inverse(p.lead());
}

/// Long division by a divisor whose leading coefficient divides every
/// intermediate leading coefficient (always true over a field, or when the
/// divisor is monic).
template <class T>
std::pair<Poly<T>, Poly<T>> divrem_general(const Poly<T>& a, const Poly<T>& b) {
  using tr = ring_traits<T>;
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  a.check(b);
  if (a.degree() < b.degree()) return {Poly<T>(a.context()), a};
  std::vector<T> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<T> q(r.size() - db, tr::zero(a.context()));
  const bool unit_lead = b.lead() == tr::one(a.context());
  for (std::size_t k = r.size(); k-- > db;) {
    if (tr::is_zero(r[k])) continue;
    T coef = unit_lead ? r[k] : tr::exact_div(r[k], b.lead());
    const std::size_t shift = k - db;
    q[shift] = coef;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= coef * b[j];
  }
  r.resize(db);
  return {Poly<T>(std::move(q), a.context()), Poly<T>(std::move(r), a.context())};
}

template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
  static_assert(ring_traits<T>::is_field, "divrem() needs field coefficients");
  return divrem_general(a, b);
}

template <class T>
Poly<T> rem(const Poly<T>& a, const Poly<T>& b) {
  return divrem(a, b).second;
}

/// a / b, throwing when b does not divide a.
template <class T>
Poly<T> exact_quotient(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divrem_general(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class T>
Poly<T> pseudo_remainder(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw DomainError("pseudo-division by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<T> r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const T& lb = b.lead();
  for (std::size_t k = r.size(); k-- > db;) {
    T coef = r[k];
    for (T& c : r) c *= lb;
    const std::size_t shift = k - db;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= coef * b[j];
  }
  r.resize(db);
  return Poly<T>(std::move(r), a.context());
}

/// Monic gcd by the Euclidean algorithm over a field.
template <class T>
Poly<T> euclid_gcd(Poly<T> a, Poly<T> b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly<T> r = rem(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

template <class T>
struct PolyExtGcd {
  Poly<T> g, s, t;  // s*a + t*b == g, g monic
};

template <class T>
PolyExtGcd<T> ext_gcd(const Poly<T>& a, const Poly<T>& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  using P = Poly<T>;
  const auto& ctx = a.is_zero() ? b.context() : a.context();
  P r0 = a, r1 = b;
  P s0 = P::constant(ring_traits<T>::one(ctx)), s1(ctx);
  P t0(ctx), t1 = P::constant(ring_traits<T>::one(ctx));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    P t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  T inv = ring_traits<T>::inverse(r0.lead());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// base^e mod m over a field, e given as a big integer.
template <class T>
Poly<T> powmod(const Poly<T>& base, const BigInt& e, const Poly<T>& m) {
  Poly<T> result = rem(Poly<T>::constant(m.one_scalar()), m);
  Poly<T> b = rem(base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(result * result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(result * b, m);
  }
  return result;
}

/// Total order used for deterministic output: degree first, then
/// coefficients from the leading one down.
template <class T>
int compare(const Poly<T>& a, const Poly<T>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    int c = ring_traits<T>::compare(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    if (c != 0) return c;
  }
  return 0;
}

/// Canonical text: descending powers, explicit signs, no spaces.
template <class T>
std::string to_string(const Poly<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const T& c = p[static_cast<std::size_t>(i)];
    if (ring_traits<T>::is_zero(c)) continue;
    std::string s = ring_traits<T>::to_string(c);
    bool negative = false;
    bool compound = false;
    std::string body = s;
    if (!s.empty() && s[0] == '-') {
      std::string rest = s.substr(1);
      if (rest.find_first_of("+-") == std::string::npos) {
        negative = true;
        body = rest;
      } else {
        compound = true;
      }
    } else if (s.find_first_of("+-") != std::string::npos) {
      compound = true;
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    std::string term;
    if (compound)
      term = "(" + s + ")" + (mono.empty() ? "" : "*" + mono);
    else if (mono.empty())
      term = body;
    else if (body == "1")
      term = mono;
    else
      term = body + "*" + mono;
    if (out.empty())
      out = (negative ? "-" : "") + term;
    else
      out += (negative ? "-" : "+") + term;
  }
  return out;
}

/// Polynomials as coefficients (bivariate work: resultants in y over Q[x]).
template <class T>
struct ring_traits<Poly<T>> {
  using context = typename Poly<T>::context_type;
  static constexpr bool is_field = false;
  static context context_of(const Poly<T>& p) { return p.context(); }
  static bool same_context(const context& a, const context& b) {
    return ring_traits<T>::same_context(a, b);
  }
  static Poly<T> zero(const context& c) { return Poly<T>(c); }
  static Poly<T> one(const context& c) { return Poly<T>::constant(ring_traits<T>::one(c)); }
  static Poly<T> from_int(long v, const context& c) {
    return Poly<T>(std::vector<T>{ring_traits<T>::from_int(v, c)}, c);
  }
  static bool is_zero(const Poly<T>& p) { return p.is_zero(); }
  static Poly<T> exact_div(const Poly<T>& a, const Poly<T>& b) { return exact_quotient(a, b); }
  static int compare(const Poly<T>& a, const Poly<T>& b) { return hered::compare(a, b); }
  static std::string to_string(const Poly<T>& p) { return hered::to_string(p, "x"); }
};

}  // namespace hered

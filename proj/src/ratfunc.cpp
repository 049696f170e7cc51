#include "hered/ratfunc.hpp"

namespace hered {

namespace {

BigInt denominator_lcm(const QPoly& p, BigInt acc) {
  for (const auto& c : p.coeffs()) mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), c.get_den_mpz_t());
  return acc;
}

BigInt numerator_gcd(const QPoly& p, BigInt acc) {
  for (const auto& c : p.coeffs()) mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), c.get_num_mpz_t());
  return acc;
}

}  // namespace

RationalFunction::RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly{BigRational(1)};
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  const BigInt l = denominator_lcm(den_, denominator_lcm(num_, 1));
  const BigInt c = numerator_gcd(den_ * BigRational(l), numerator_gcd(num_ * BigRational(l), 0));
  BigRational scale = make_rational(l, c);
  if (den_.lead() < 0) scale = -scale;
  num_ = num_ * scale;
  den_ = den_ * scale;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("division by the zero rational function");
  return RationalFunction(den_, num_);
}

std::string to_string(const RationalFunction& f) {
  const std::string n = to_string(f.num(), "t");
  if (f.den() == QPoly{BigRational(1)}) return n;
  const bool compound_num = n.find_first_of("+-", 1) != std::string::npos;
  const std::string d = to_string(f.den(), "t");
  return (compound_num ? "(" + n + ")" : n) + "/" + (f.is_polynomial() ? d : "(" + d + ")");
}

}  // namespace hered

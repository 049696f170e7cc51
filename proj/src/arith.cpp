#include "hered/arith.hpp"

#include <algorithm>
#include <cctype>

namespace hered {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

ExtendedGcd gcd_ext(const BigInt& a, const BigInt& b) {
  if (a == 0 && b == 0) throw DomainError("gcd_ext(0, 0) is undefined");
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (r != 0) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
  if (modulus < 2) throw DomainError("mod_pow needs modulus >= 2");
  if (exp < 0) throw DomainError("mod_pow needs a non-negative exponent");
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

namespace {

const unsigned kBaseWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
const unsigned kExtraWitnesses[] = {
    41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163,
    167, 173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233,
    239, 241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, unsigned a) {
  BigInt base = a;
  if (base % n == 0) return true;
  BigInt x = mod_pow(base, d, n);
  BigInt n1 = n - 1;
  if (x == 1 || x == n1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned p : kBaseWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (unsigned a : kBaseWitnesses)
    if (!miller_rabin_round(n, d, s, a)) return false;
  static const BigInt kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;
  for (unsigned a : kExtraWitnesses)
    if (!miller_rabin_round(n, d, s, a)) return false;
  return true;
}

std::optional<BigInt> exact_root(const BigInt& n, unsigned long k) {
  if (k == 0) throw DomainError("0-th root");
  if (k == 1) return n;
  if (n < 0 && k % 2 == 0) return std::nullopt;
  BigInt mag = abs(n);
  BigInt r;
  if (mpz_root(r.get_mpz_t(), mag.get_mpz_t(), k) == 0) return std::nullopt;
  if (n < 0) r = -r;
  return r;
}

std::optional<BigRational> exact_root(const BigRational& q, unsigned long k) {
  auto num = exact_root(BigInt(q.get_num()), k);
  if (!num) return std::nullopt;
  auto den = exact_root(BigInt(q.get_den()), k);
  if (!den) return std::nullopt;
  return make_rational(*num, *den);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(1000000);
  return primes;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0.
BigInt pollard_brent(const BigInt& n, unsigned long c) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt y = 2, x, ys, q = 1, g = 1, diff;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(m, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        diff = abs(x - y);
        q = q * diff % n;
      }
      g = gcd(q, n);
      k += m;
    }
    r *= 2;
    if (r > (1ul << 26)) return 0;
  }
  if (g == n) {
    do {
      step(ys);
      diff = abs(x - ys);
      g = gcd(diff, n);
    } while (g == 1);
  }
  if (g == n) return 0;
  return g;
}

void split_cofactor(const BigInt& n, std::vector<BigInt>& primes, BigInt& leftover) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 96) {
    leftover *= n;
    return;
  }
  if (auto sq = exact_root(n, 2)) {
    split_cofactor(*sq, primes, leftover);
    split_cofactor(*sq, primes, leftover);
    return;
  }
  for (unsigned long c = 1; c < 40; ++c) {
    BigInt f = pollard_brent(n, c);
    if (f != 0 && f != 1 && f != n) {
      BigInt other = n / f;
      split_cofactor(f, primes, leftover);
      split_cofactor(other, primes, leftover);
      return;
    }
  }
  leftover *= n;
}

}  // namespace

IntegerFactorization factor_integer(const BigInt& value) {
  IntegerFactorization out;
  BigInt n = abs(value);
  if (n <= 1) return out;
  std::vector<BigInt> found;
  const auto& primes = small_primes();
  for (std::uint32_t p : primes) {
    if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      found.emplace_back(p);
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  split_cofactor(n, found, out.unfactored);
  std::sort(found.begin(), found.end());
  for (const BigInt& p : found) {
    if (!out.primes.empty() && out.primes.back().first == p)
      ++out.primes.back().second;
    else
      out.primes.emplace_back(p, 1);
  }
  return out;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_u64(a, b) * b;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return n != 0;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw ParseError("malformed rational '" + text + "'", 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  BigInt d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'", slash + 2);
  return make_rational(BigInt(num), d);
}

}  // namespace hered

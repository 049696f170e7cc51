#include "hered/heredity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace hered {

namespace {

NFElement one_of(const FieldPtr& K) { return NFElement(K, BigRational(1)); }

std::string element_key(const NFElement& e) { return to_string(e.repr(), "a"); }

void require_rootless_input(const NFElement& a) {
  if (a.is_zero()) throw DomainError("element must be nonzero");
  if (root_of_unity_order(a)) throw DomainError("element " + to_string(a) + " is a root of unity");
}

// Primes p for which a p-th power class is still possible. When |N| != 1,
// N = r^p forces p <= log2 max(|num|, den), and the list is exhaustive.
struct PrimeCandidates {
  std::vector<std::uint64_t> primes;
  bool unconditional = false;
};

PrimeCandidates candidate_primes(const BigRational& N, std::uint64_t bound) {
  PrimeCandidates out;
  const BigRational A = abs(N);
  if (A == 1) {
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(bound))) out.primes.push_back(p);
    return out;
  }
  const BigInt num = A.get_num(), den = A.get_den();
  const BigInt& top = num > den ? num : den;
  const auto bits = static_cast<std::uint32_t>(mpz_sizeinbase(top.get_mpz_t(), 2));
  for (std::uint32_t p : primes_up_to(bits))
    if (exact_root(A, p)) out.primes.push_back(p);
  out.unconditional = true;
  return out;
}

// Representatives of mu / mu^n: generator^j for j < gcd(n, w).
std::vector<std::pair<std::uint64_t, NFElement>> twists(const TorsionGroup& T, std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, NFElement>> out;
  const std::uint64_t r = gcd_u64(n, T.order);
  NFElement z = one_of(T.generator.field());
  for (std::uint64_t j = 0; j < r; ++j) {
    out.emplace_back(j, z);
    z *= T.generator;
  }
  return out;
}

bool in_minus_four_fourth_powers(const NFElement& t, const NFLimits& limits) {
  const NFElement q = -t / NFElement(t.field(), BigRational(4));
  return !nth_roots(q, 4, limits).empty();
}

std::vector<std::pair<KPoly, unsigned>> factor_with(FactorProvider* provider, const KPoly& P,
                                                    const NFLimits& limits) {
  if (provider) return provider->factor(P, limits);
  MemoFactorProvider local;
  return local.factor(P, limits);
}

bool is_torsion_rooted(const KPoly& Q) {
  const QPoly mp = squarefree_part(norm_poly(Q));
  if (abs(mp[0]) != 1 || !(abs(mp.lead()) == 1)) return false;
  return cyclotomic_index(monic(mp), true).has_value();
}

}  // namespace

// ---------------------------------------------------------------------------

std::string factor_cache_key(const KPoly& P) {
  std::string key = to_string(P.context()->modulus(), "a") + "|";
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (i) key += ';';
    key += element_key(P[i]);
  }
  return key;
}

std::vector<std::pair<KPoly, unsigned>> MemoFactorProvider::factor(const KPoly& P, const NFLimits& limits) {
  const std::string key = factor_cache_key(P);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++hits_;
      return it->second;
    }
  }
  Factorization<NFElement> f = factor_over_nf(monic(P), limits);
  std::vector<std::pair<KPoly, unsigned>> out(f.factors.begin(), f.factors.end());
  std::lock_guard<std::mutex> lock(mu_);
  ++misses_;
  memo_.emplace(key, out);
  return out;
}

// ---------------------------------------------------------------------------
// Element diagnostics

RootlessVerdict very_rootless(const NFElement& a, std::uint64_t prime_bound, const NFLimits& limits) {
  require_rootless_input(a);
  RootlessVerdict v;
  v.bound = prime_bound;
  v.zeta = one_of(a.field());
  const PrimeCandidates cand = candidate_primes(norm(a), prime_bound);
  for (std::uint64_t p : cand.primes) {
    if (p > prime_bound && !cand.unconditional) break;
    auto roots = nth_roots(a, p, limits);
    if (!roots.empty()) {
      v.rootless = false;
      v.prime = p;
      v.root = roots.front();
      return v;
    }
  }
  v.unconditional = cand.unconditional;
  return v;
}

RootlessVerdict very_rootless_modtor(const NFElement& a, std::uint64_t prime_bound, const NFLimits& limits) {
  require_rootless_input(a);
  RootlessVerdict v;
  v.bound = prime_bound;
  v.zeta = one_of(a.field());
  const TorsionGroup T = torsion_units(a.field());
  const PrimeCandidates cand = candidate_primes(norm(a), prime_bound);
  for (std::uint64_t p : cand.primes) {
    if (p > prime_bound && !cand.unconditional) break;
    for (const auto& [j, z] : twists(T, p)) {
      auto roots = nth_roots(a / z, p, limits);
      if (!roots.empty()) {
        v.rootless = false;
        v.prime = p;
        v.zeta = z;
        v.root = roots.front();
        return v;
      }
    }
  }
  v.unconditional = cand.unconditional;
  return v;
}

RootProfile root_profile(const NFElement& a, std::uint64_t N, const NFLimits& limits) {
  require_rootless_input(a);
  if (N < 1) throw DomainError("root profile bound must be at least 1");
  RootProfile prof;
  prof.element = a;
  prof.bound = N;
  const TorsionGroup T = torsion_units(a.field());
  const BigRational An = abs(norm(a));
  std::uint64_t l_all = 1, l_plain = 1;
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (n > 1 && !exact_root(An, n)) continue;  // |N(zeta*a)| = |N(a)| must be an n-th power
    if (n == 1 || !nth_roots(a, n, limits).empty()) {
      prof.solvable.push_back(n);
      l_plain = lcm_u64(l_plain, n);
    }
    for (const auto& [j, z] : twists(T, n)) {
      if (n == 1 || !nth_roots(a / z, n, limits).empty()) {
        prof.modtor_solvable.push_back(n);
        prof.twist[n] = j;
        l_all = lcm_u64(l_all, n);
        break;
      }
    }
  }
  prof.generator = make_rational(1, BigInt(static_cast<unsigned long>(l_all)));
  prof.plain_generator = make_rational(1, BigInt(static_cast<unsigned long>(l_plain)));
  for (std::uint64_t n : prof.modtor_solvable)
    prof.observed.push_back(make_rational(1, BigInt(static_cast<unsigned long>(n))));
  return prof;
}

PowerWitness power_witness_from_factor(const KPoly& Q0, std::uint64_t n, const NFElement& a) {
  if (Q0.degree() < 1) throw DomainError("factor must be nonconstant");
  const FieldPtr& K = a.field();
  if (!same_field(Q0.context(), K)) throw DomainError("factor and element live in different fields");
  const KPoly Q = monic(Q0);
  const std::uint64_t m = static_cast<std::uint64_t>(Q.degree());
  if (m >= n) throw DomainError("factor degree must be smaller than n");
  const KPoly f = KPoly::monomial(one_of(K), n) - a;
  if (!rem(f, Q).is_zero()) throw DomainError("polynomial does not divide x^n - a");
  PowerWitness w;
  w.c = (m % 2 == 0) ? Q[0] : -Q[0];
  if (w.c.pow(static_cast<long>(n)) != a.pow(static_cast<long>(m)))
    throw InternalError("root product violates c^n = a^m");
  const std::uint64_t k = gcd_u64(m, n);
  const std::uint64_t mp = m / k;
  w.n_prime = n / k;
  ExtendedGcd e = gcd_ext(BigInt(static_cast<unsigned long>(mp)), BigInt(static_cast<unsigned long>(w.n_prime)));
  w.alpha = e.x;
  w.beta = e.y;
  const long al = w.alpha.get_si(), be = w.beta.get_si();
  const NFElement zeta = w.c.pow(static_cast<long>(w.n_prime)) / a.pow(static_cast<long>(mp));
  w.xi = zeta.pow(-al);
  w.g = w.c.pow(al) * a.pow(be);
  if (w.xi * w.g.pow(static_cast<long>(w.n_prime)) != a) throw InternalError("power witness failed to verify");
  return w;
}

// ---------------------------------------------------------------------------
// Certificates

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::Eisenstein: return "eisenstein";
    case CertKind::LinearRootlessModtor: return "linear-rootless-modtor";
    case CertKind::Capelli: return "capelli";
    case CertKind::SplitWitness: return "split-witness";
  }
  return "?";
}

std::string Certificate::scope() const {
  if (kind == CertKind::SplitWitness) return "refutation";
  if (unconditional) return "unconditional";
  return "exact for all n with prime divisors <= " + std::to_string(prime_bound);
}

bool capelli_irreducible(const NFElement& a, std::uint64_t n, const NFLimits& limits) {
  if (a.is_zero()) throw DomainError("capelli test needs a nonzero element");
  if (n == 0) throw DomainError("capelli test needs n >= 1");
  std::uint64_t r = n;
  for (std::uint64_t p = 2; p <= r; ++p) {
    if (r % p != 0) continue;
    while (r % p == 0) r /= p;
    if (!nth_roots(a, p, limits).empty()) return false;
  }
  if (n % 4 == 0 && in_minus_four_fourth_powers(a, limits)) return false;
  return true;
}

namespace {

Certificate split_certificate(const KPoly& Q, std::uint64_t n, const std::string& why, const HeredityOptions& opts,
                              FactorProvider* provider) {
  Certificate c;
  c.kind = CertKind::SplitWitness;
  c.split_exponent = n;
  c.reason = why;
  try {
    c.split_factors = factor_with(provider, inflate(Q, n), opts.limits);
  } catch (const ResourceError&) {
    c.reason += "; factors not computed within the caps";
  }
  return c;
}

}  // namespace

std::optional<Certificate> hi_certificate(const KPoly& Q0, const HeredityOptions& opts, FactorProvider* provider) {
  if (Q0.degree() < 1) throw DomainError("certificate requested for a constant polynomial");
  const KPoly Q = monic(Q0);
  const FieldPtr& K = Q.context();
  if (Q[0].is_zero()) throw DomainError("polynomial has the root 0");
  if (is_torsion_rooted(Q)) throw DomainError("roots of " + to_string(Q, "x") + " are roots of unity");

  if (K->is_rational()) {
    const QPoly q = to_qpoly(Q);
    if (auto w = eisenstein_witness(q, 0, 0)) {
      Certificate c;
      c.kind = CertKind::Eisenstein;
      c.unconditional = true;
      c.eisenstein_prime = w->p;
      c.reason = "Eisenstein at p = " + to_string(w->p) + ", preserved by every inflation";
      return c;
    }
  }

  try {
    const AbsoluteExtension ext = absolute_extension(Q, opts.limits);
    const NFElement& theta = ext.theta;
    const BigRational N = norm(theta);
    const PrimeCandidates cand = candidate_primes(N, opts.prime_bound);

    Certificate c;
    c.theta_norm = N;
    c.unconditional = cand.unconditional;
    c.prime_bound = opts.prime_bound;

    for (std::uint64_t p : cand.primes) {
      if (!nth_roots(theta, p, opts.limits).empty())
        return split_certificate(Q, p, "root is a " + std::to_string(p) + "-th power in the extension", opts,
                                 provider);
      c.primes_checked.push_back(p);
    }

    if (Q.degree() == 1) {
      // Rootless modulo torsion is the stronger linear criterion; try it
      // before falling back to the full Capelli test.
      const TorsionGroup T = torsion_units(K);
      bool modtor = true;
      for (std::uint64_t p : cand.primes) {
        for (const auto& [j, z] : twists(T, p)) {
          if (j == 0) continue;
          if (!nth_roots(theta / z, p, opts.limits).empty()) {
            modtor = false;
            break;
          }
        }
        if (!modtor) break;
      }
      if (modtor) {
        c.kind = CertKind::LinearRootlessModtor;
        c.prime_bound = opts.modtor_bound;
        c.reason = "root is very rootless modulo torsion";
        if (!cand.unconditional) {
          c.primes_checked.clear();
          for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(opts.modtor_bound)))
            c.primes_checked.push_back(p);
          // The plain p-th power check above ran only up to prime_bound.
          for (std::uint64_t p : c.primes_checked)
            if (p > opts.prime_bound) {
              for (const auto& [j, z] : twists(T, p))
                if (!nth_roots(theta / z, p, opts.limits).empty()) modtor = false;
            }
        }
        if (modtor) return c;
        c.primes_checked = cand.primes;
        c.prime_bound = opts.prime_bound;
      }
    }

    c.minus_four_checked = true;
    if (in_minus_four_fourth_powers(theta, opts.limits))
      return split_certificate(Q, 4, "root lies in -4 times the fourth powers", opts, provider);
    c.kind = CertKind::Capelli;
    c.reason = cand.unconditional ? "no p-th power for any prime p (norm argument) and not in -4L^4"
                                  : "no p-th power for primes p <= " + std::to_string(opts.prime_bound) +
                                        " and not in -4L^4";
    return c;
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

bool verify_certificate(const KPoly& Q0, const Certificate& c, const HeredityOptions& opts) {
  const KPoly Q = monic(Q0);
  const FieldPtr& K = Q.context();
  switch (c.kind) {
    case CertKind::Eisenstein: {
      if (!K->is_rational()) return false;
      return check_eisenstein(to_qpoly(Q), EisensteinWitness{c.eisenstein_prime, 0});
    }
    case CertKind::SplitWitness: {
      if (c.split_exponent < 2) return false;
      const KPoly target = inflate(Q, c.split_exponent);
      if (c.split_factors.empty()) {
        const AbsoluteExtension ext = absolute_extension(Q, opts.limits);
        return !capelli_irreducible(ext.theta, c.split_exponent, opts.limits);
      }
      KPoly prod = KPoly::constant(one_of(K));
      std::size_t count = 0;
      for (const auto& [f, m] : c.split_factors) {
        prod *= pow(f, m);
        count += m;
      }
      return count > 1 && prod == target;
    }
    case CertKind::LinearRootlessModtor:
    case CertKind::Capelli: {
      const AbsoluteExtension ext = absolute_extension(Q, opts.limits);
      const NFElement& theta = ext.theta;
      if (theta.is_zero()) return false;
      if (c.kind == CertKind::LinearRootlessModtor && Q.degree() != 1) return false;
      const BigRational N = norm(theta);
      std::vector<std::uint64_t> needed;
      if (c.unconditional) {
        if (abs(N) == 1) return false;
        needed = candidate_primes(N, 0).primes;
      } else {
        for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(c.prime_bound))) needed.push_back(p);
      }
      const TorsionGroup T = torsion_units(theta.field());
      for (std::uint64_t p : needed) {
        if (c.kind == CertKind::Capelli) {
          if (!nth_roots(theta, p, opts.limits).empty()) return false;
        } else {
          for (const auto& [j, z] : twists(T, p))
            if (!nth_roots(theta / z, p, opts.limits).empty()) return false;
        }
      }
      if (c.kind == CertKind::Capelli && in_minus_four_fourth_powers(theta, opts.limits)) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Trees

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::Certified: return "certified";
    case NodeStatus::Splits: return "splits";
    case NodeStatus::UnknownAtDepth: return "unknown-at-depth";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::GoodHeredityCertified: return "GOOD-HEREDITY-CERTIFIED";
    case Verdict::NotGoodHeredityWitnessed: return "NOT-GOOD-HEREDITY-WITNESSED";
    case Verdict::InconclusiveAtDepth: return "INCONCLUSIVE-at-depth";
  }
  return "?";
}

std::vector<int> HeredityTree::trimmed_nodes() const {
  std::vector<int> out;
  for (const auto& n : nodes)
    if (n.in_trimmed) out.push_back(n.id);
  return out;
}

std::vector<std::uint64_t> level_exponents(const TreeRequest& req) {
  if (req.depth < 1) throw DomainError("depth must be at least 1");
  std::vector<std::uint64_t> e;
  if (!req.exponents.empty()) {
    if (req.exponents.size() < static_cast<std::size_t>(req.depth))
      throw DomainError("exponent chain shorter than the requested depth");
    for (int i = 0; i < req.depth; ++i) {
      const std::uint64_t v = req.exponents[static_cast<std::size_t>(i)];
      if (v == 0 || (i > 0 && v % e.back() != 0)) throw DomainError("exponents must form a divisibility chain");
      e.push_back(v);
    }
    return e;
  }
  std::uint64_t f = 1;
  for (int n = 1; n <= req.depth; ++n) {
    if (f > UINT64_MAX / static_cast<std::uint64_t>(n)) throw ResourceError("level exponent overflows");
    f *= static_cast<std::uint64_t>(n);
    e.push_back(f);
  }
  return e;
}

namespace {

void check_tree_input(const KPoly& P) {
  if (P.is_zero() || P.degree() < 1) throw DomainError("tree root must be a nonconstant polynomial");
  if (P[0].is_zero()) throw DomainError("x divides the input; zero roots are excluded");
}

// Attaches a certificate (or a note) to a node that has no certified ancestor.
void certify(HeredityNode& node, HeredityTree& tree, FactorProvider* provider) {
  try {
    if (node.poly.degree() > tree.options.max_node_degree) {
      node.note = "degree above the node cap";
      return;
    }
    node.certificate = hi_certificate(node.poly, tree.options, provider);
    if (!node.certificate) node.note = "no certificate within the caps";
  } catch (const DomainError& e) {
    node.note = e.what();
    tree.warnings.push_back("node " + to_string(node.poly, "x") + ": " + e.what());
  }
}

}  // namespace

HeredityTree build_tree(const KPoly& P, const TreeRequest& req, FactorProvider* provider) {
  check_tree_input(P);
  MemoFactorProvider local;
  if (!provider) provider = &local;

  HeredityTree tree;
  tree.field = P.context();
  tree.root = P;
  tree.depth = req.depth;
  tree.exponents = level_exponents(req);
  tree.factorial_schedule = req.exponents.empty();
  tree.options = req.options;
  const KPoly Pm = monic(P);

  auto add_node = [&](int level, const KPoly& poly, unsigned mult, int parent) {
    HeredityNode n;
    n.id = static_cast<int>(tree.nodes.size());
    n.level = level;
    n.exponent = tree.exponents[static_cast<std::size_t>(level - 1)];
    n.poly = poly;
    n.multiplicity = mult;
    n.parent = parent;
    tree.nodes.push_back(std::move(n));
    return tree.nodes.back().id;
  };

  // Level 1.
  tree.levels.emplace_back();
  {
    auto fs = factor_with(provider, inflate(Pm, tree.exponents[0]), tree.options.limits);
    for (auto& [f, m] : fs) tree.levels[0].push_back(add_node(1, f, m, -1));
  }
  tree.level_complete.push_back(true);

  for (int level = 1; level <= req.depth; ++level) {
    auto& ids = tree.levels[static_cast<std::size_t>(level - 1)];
    for (int id : ids) {
      HeredityNode& n = tree.nodes[static_cast<std::size_t>(id)];
      const bool parent_certified =
          n.parent >= 0 && tree.node(n.parent).status == NodeStatus::Certified;
      if (parent_certified) {
        n.certificate = tree.node(n.parent).certificate;
        n.inherited = true;
        n.in_trimmed = false;
        n.status = NodeStatus::Certified;
        continue;
      }
      if (n.parent >= 0 && !tree.node(n.parent).in_trimmed) n.in_trimmed = false;
      certify(n, tree, provider);
      if (n.certificate && n.certificate->proves_irreducible()) n.status = NodeStatus::Certified;
    }
    if (level == req.depth) break;

    const std::uint64_t ratio = tree.exponents[static_cast<std::size_t>(level)] /
                                tree.exponents[static_cast<std::size_t>(level - 1)];
    std::vector<std::pair<KPoly, std::pair<unsigned, int>>> next;
    bool complete = tree.level_complete.back();
    for (int id : tree.levels[static_cast<std::size_t>(level - 1)]) {
      const HeredityNode& n = tree.node(id);
      const KPoly child = inflate(n.poly, ratio);
      if (n.status == NodeStatus::Certified) {
        next.push_back({child, {n.multiplicity, id}});
        continue;
      }
      try {
        if (child.degree() > tree.options.max_node_degree)
          throw ResourceError("degree " + std::to_string(child.degree()) + " above the node cap");
        for (auto& [f, m] : factor_with(provider, child, tree.options.limits))
          next.push_back({f, {n.multiplicity * m, id}});
      } catch (const ResourceError& e) {
        tree.nodes[static_cast<std::size_t>(id)].note = std::string("expansion stopped: ") + e.what();
        complete = false;
      }
    }
    std::stable_sort(next.begin(), next.end(),
                     [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });
    tree.levels.emplace_back();
    for (auto& [f, mp] : next) {
      const int cid = add_node(level + 1, f, mp.first, mp.second);
      tree.nodes[static_cast<std::size_t>(mp.second)].children.push_back(cid);
      tree.levels.back().push_back(cid);
    }
    for (int id : tree.levels[static_cast<std::size_t>(level - 1)]) {
      HeredityNode& n = tree.nodes[static_cast<std::size_t>(id)];
      if (n.status != NodeStatus::Certified && !n.children.empty()) n.status = NodeStatus::Splits;
    }
    tree.level_complete.push_back(complete);
  }

  // Trimming: nothing above a certified node survives.
  for (auto& n : tree.nodes)
    if (n.parent >= 0) {
      const HeredityNode& par = tree.node(n.parent);
      if (par.status == NodeStatus::Certified || !par.in_trimmed) n.in_trimmed = false;
    }

  // Level-product identity.
  for (std::size_t i = 0; i < tree.levels.size(); ++i) {
    if (!tree.level_complete[i]) {
      tree.level_product_ok.push_back(false);
      continue;
    }
    KPoly prod = KPoly::constant(one_of(tree.field));
    for (int id : tree.levels[i]) prod *= pow(tree.node(id).poly, tree.node(id).multiplicity);
    const bool ok = prod == inflate(Pm, tree.exponents[i]);
    if (!ok) throw InternalError("level product identity failed at level " + std::to_string(i + 1));
    tree.level_product_ok.push_back(true);
  }
  return tree;
}

ClassificationReport classify_good_heredity(const KPoly& P, const TreeRequest& req, FactorProvider* provider) {
  check_tree_input(P);
  for (const auto& [f, m] : factor_over_q(norm_poly(monic(P)), req.options.limits.q).factors) {
    (void)m;
    if (abs(f[0]) == 1 && cyclotomic_index(f, true))
      throw DomainError("input has roots of unity among its zeros (a factor of its norm is " + to_string(f, "x") +
                        ")");
  }

  ClassificationReport rep;
  rep.tree = build_tree(P, req, provider);
  const HeredityTree& T = rep.tree;

  for (std::size_t i = 0; i < T.levels.size(); ++i) {
    if (!T.level_complete[i]) break;
    bool all = true;
    for (int id : T.levels[i])
      if (T.node(id).status != NodeStatus::Certified) all = false;
    if (all) {
      rep.certified_at_level = static_cast<int>(i) + 1;
      break;
    }
  }

  if (rep.certified_at_level > 0) {
    rep.verdict = Verdict::GoodHeredityCertified;
    bool unconditional = true;
    std::uint64_t bound = 0;
    for (const auto& n : T.nodes)
      if (n.in_trimmed && n.status == NodeStatus::Certified && n.certificate) {
        unconditional = unconditional && n.certificate->unconditional;
        bound = std::max(bound, n.certificate->prime_bound);
      }
    rep.certificate_scope = unconditional ? "unconditional"
                                          : "exact for all n with prime divisors <= " + std::to_string(bound);
    std::size_t leaves = 0;
    for (int id : T.levels[static_cast<std::size_t>(rep.certified_at_level - 1)])
      if (T.node(id).in_trimmed) ++leaves;
    std::ostringstream s;
    s << "every node at level " << rep.certified_at_level << " (exponent "
      << T.exponents[static_cast<std::size_t>(rep.certified_at_level - 1)]
      << ") is hereditarily irreducible; trimmed tree has " << T.trimmed_nodes().size() << " nodes and " << leaves
      << " certified leaves";
    rep.summary = s.str();
    return rep;
  }

  rep.verdict = Verdict::InconclusiveAtDepth;
  for (const auto& n : T.nodes) {
    if (n.status == NodeStatus::Certified || !n.children.empty()) continue;
    std::vector<BranchStep> chain;
    for (int id = n.id; id >= 0; id = T.node(id).parent) {
      const HeredityNode& x = T.node(id);
      chain.push_back({x.exponent, x.poly, x.poly.degree()});
    }
    std::reverse(chain.begin(), chain.end());
    rep.open_branches.push_back(std::move(chain));
  }
  std::ostringstream s;
  s << rep.open_branches.size() << " branch(es) still uncertified at depth " << req.depth;
  rep.summary = s.str();
  return rep;
}

}  // namespace hered

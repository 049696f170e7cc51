#pragma once

// Hereditary factor trees, node certificates and element diagnostics
// (very rootless, modtor variants, root profiles).

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hered/numfield.hpp"

namespace hered {

/// Factorization backend used by tree expansion. The default keeps an
/// in-memory memo; the CLI adds a persistent layer.
class FactorProvider {
 public:
  virtual ~FactorProvider() = default;
  /// Monic irreducible factors with multiplicities, canonically sorted.
  virtual std::vector<std::pair<KPoly, unsigned>> factor(const KPoly& P, const NFLimits& limits) = 0;
};

class MemoFactorProvider : public FactorProvider {
 public:
  std::vector<std::pair<KPoly, unsigned>> factor(const KPoly& P, const NFLimits& limits) override;
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::mutex mu_;
  std::map<std::string, std::vector<std::pair<KPoly, unsigned>>> memo_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// Cache key shared by every provider: field modulus and polynomial in
/// canonical form.
std::string factor_cache_key(const KPoly& P);

// ---------------------------------------------------------------------------
// Element diagnostics

struct RootlessVerdict {
  bool rootless = true;        // "TRUE-up-to-bound" when set
  std::uint64_t bound = 0;
  bool unconditional = false;  // the norm argument rules out every prime
  std::uint64_t prime = 0;     // witness exponent when not rootless
  NFElement zeta;              // torsion twist, 1 for the plain variant
  NFElement root;              // a == zeta * root^prime
};

/// Throws DomainError for zero or torsion input.
RootlessVerdict very_rootless(const NFElement& a, std::uint64_t prime_bound, const NFLimits& limits = {});
RootlessVerdict very_rootless_modtor(const NFElement& a, std::uint64_t prime_bound, const NFLimits& limits = {});

struct RootProfile {
  NFElement element;
  std::uint64_t bound = 0;
  std::vector<std::uint64_t> solvable;         // n with x^n = a solvable
  std::vector<std::uint64_t> modtor_solvable;  // n with x^n = zeta*a solvable for some torsion zeta
  std::map<std::uint64_t, std::uint64_t> twist;  // n -> j, zeta = generator^j
  BigRational generator = 1;                   // 1/lcm(modtor_solvable)
  BigRational plain_generator = 1;             // 1/lcm(solvable)
  std::vector<BigRational> observed;           // 1/n for n in modtor_solvable
};
RootProfile root_profile(const NFElement& a, std::uint64_t N, const NFLimits& limits = {});

struct PowerWitness {
  NFElement xi;  // torsion
  NFElement g;
  std::uint64_t n_prime = 0;  // a == xi * g^n_prime
  NFElement c;                // product of the roots of Q
  BigInt alpha, beta;         // alpha*m' + beta*n' == 1
};
/// Q a monic irreducible proper factor of x^n - a over K.
PowerWitness power_witness_from_factor(const KPoly& Q, std::uint64_t n, const NFElement& a);

// ---------------------------------------------------------------------------
// Certificates

enum class CertKind { Eisenstein, LinearRootlessModtor, Capelli, SplitWitness };
std::string to_string(CertKind k);

struct Certificate {
  CertKind kind = CertKind::Capelli;
  bool unconditional = false;                // scope: unconditional vs bounded by prime_bound
  BigInt eisenstein_prime;                   // Eisenstein
  std::uint64_t prime_bound = 0;             // Capelli / linear
  std::vector<std::uint64_t> primes_checked; // Capelli / linear
  bool minus_four_checked = false;           // Capelli
  BigRational theta_norm;                    // norm of the root, drives pruning
  std::uint64_t split_exponent = 0;          // SplitWitness
  std::vector<std::pair<KPoly, unsigned>> split_factors;
  std::string reason;                        // one-line explanation

  bool proves_irreducible() const { return kind != CertKind::SplitWitness; }
  std::string scope() const;
};

struct HeredityOptions {
  std::uint64_t prime_bound = 97;
  std::uint64_t modtor_bound = 97;
  NFLimits limits;
  int max_node_degree = 256;
};

/// Decides hereditary irreducibility of a monic irreducible Q over K.
/// Returns nullopt when no certificate could be produced within the caps.
/// Throws DomainError when a root of Q is zero or a root of unity.
std::optional<Certificate> hi_certificate(const KPoly& Q, const HeredityOptions& opts = {},
                                          FactorProvider* provider = nullptr);

/// Independent re-check of a certificate.
bool verify_certificate(const KPoly& Q, const Certificate& c, const HeredityOptions& opts = {});

/// Capelli prediction for x^n - a over K (a != 0): irreducible iff a is no
/// p-th power for primes p | n and, when 4 | n, a is not in -4K^4.
bool capelli_irreducible(const NFElement& a, std::uint64_t n, const NFLimits& limits = {});

// ---------------------------------------------------------------------------
// Trees

enum class NodeStatus { Certified, Splits, UnknownAtDepth };
std::string to_string(NodeStatus s);

struct HeredityNode {
  int id = 0;
  int level = 0;               // 1-based
  std::uint64_t exponent = 1;  // the node divides P(x^exponent)
  KPoly poly;
  unsigned multiplicity = 1;
  int parent = -1;
  std::vector<int> children;
  NodeStatus status = NodeStatus::UnknownAtDepth;
  std::optional<Certificate> certificate;  // HI certificate or split witness
  bool inherited = false;                  // certificate inherited from an ancestor
  bool in_trimmed = true;
  std::string note;
};

struct HeredityTree {
  FieldPtr field;
  KPoly root;
  int depth = 0;
  std::vector<std::uint64_t> exponents;  // per level
  bool factorial_schedule = true;
  std::vector<HeredityNode> nodes;
  std::vector<std::vector<int>> levels;  // node ids per level
  std::vector<bool> level_complete;      // fully expanded
  std::vector<bool> level_product_ok;
  std::vector<std::string> warnings;
  HeredityOptions options;

  const HeredityNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
  std::vector<int> trimmed_nodes() const;
};

struct TreeRequest {
  int depth = 4;
  std::vector<std::uint64_t> exponents;  // empty: factorial schedule
  HeredityOptions options;
};

/// Exponent schedule n! for n = 1..depth, or an explicit divisibility chain.
std::vector<std::uint64_t> level_exponents(const TreeRequest& req);

HeredityTree build_tree(const KPoly& P, const TreeRequest& req, FactorProvider* provider = nullptr);

enum class Verdict { GoodHeredityCertified, NotGoodHeredityWitnessed, InconclusiveAtDepth };
std::string to_string(Verdict v);

struct BranchStep {
  std::uint64_t n;  // exponent n_i
  KPoly Q;          // Q_i
  int k;            // deg Q_i
};

struct ClassificationReport {
  Verdict verdict = Verdict::InconclusiveAtDepth;
  std::string certificate_scope;  // for certified verdicts
  HeredityTree tree;
  int certified_at_level = 0;
  std::vector<std::vector<BranchStep>> open_branches;  // chains ending at uncertified frontier nodes
  std::string summary;
};

/// Rejects x | P and polynomials with roots of unity among their zeros.
ClassificationReport classify_good_heredity(const KPoly& P, const TreeRequest& req,
                                            FactorProvider* provider = nullptr);

}  // namespace hered

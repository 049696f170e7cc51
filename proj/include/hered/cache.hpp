#pragma once

// Persistent factorization cache: append-only JSON lines keyed by the
// SHA-256 of the canonical field and polynomial strings.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <mutex>
#include <string>

#include "hered/heredity.hpp"

namespace hered {

inline constexpr const char* kEngineVersion = "hered-1";

std::string sha256_hex(const std::string& data);

class FactorCache : public FactorProvider {
 public:
  /// Loads `path` if it exists; corrupt lines are skipped with a warning
  /// on `warn`.
  FactorCache(std::string path, std::ostream& warn);

  std::vector<std::pair<KPoly, unsigned>> factor(const KPoly& P, const NFLimits& limits) override;

  /// $HERED_CACHE, else $HOME/.cache/hered/factor-cache.jsonl.
  static std::string default_path();
  static std::string key_for(const KPoly& P);

  const std::string& path() const { return path_; }
  std::size_t records() const { return records_.size(); }
  std::size_t corrupt_lines() const { return corrupt_; }
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  std::size_t rejected() const { return rejected_; }

  struct Record {
    std::string field;
    std::string poly;
    std::vector<std::pair<std::string, unsigned>> factors;
    std::string engine;
  };
  const std::map<std::string, Record>& entries() const { return records_; }

 private:
  void append(const std::string& key, const Record& r);

  std::string path_;
  std::ostream& warn_;
  std::mutex mu_;
  std::map<std::string, Record> records_;
  std::size_t corrupt_ = 0, hits_ = 0, misses_ = 0, rejected_ = 0;
};

}  // namespace hered

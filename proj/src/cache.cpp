#include "hered/cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "hered/parse.hpp"
#include "json.hpp"

namespace hered {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 digest failed");
  std::ostringstream s;
  for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

std::string FactorCache::default_path() {
  if (const char* p = std::getenv("HERED_CACHE"); p && *p) return p;
  const char* home = std::getenv("HOME");
  return std::string(home && *home ? home : ".") + "/.cache/hered/factor-cache.jsonl";
}

std::string FactorCache::key_for(const KPoly& P) {
  return sha256_hex(field_string(P.context()) + "\n" + to_string(P));
}

FactorCache::FactorCache(std::string path, std::ostream& warn) : path_(std::move(path)), warn_(warn) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      Record r;
      r.field = j.at("field").get<std::string>();
      r.poly = j.at("poly").get<std::string>();
      r.engine = j.at("engine").get<std::string>();
      for (const auto& f : j.at("factors")) r.factors.emplace_back(f.at(0).get<std::string>(), f.at(1).get<unsigned>());
      const std::string key = j.at("key").get<std::string>();
      if (key != sha256_hex(r.field + "\n" + r.poly)) throw std::runtime_error("key mismatch");
      records_[key] = std::move(r);
    } catch (const std::exception& e) {
      ++corrupt_;
      warn_ << "warning: skipping corrupt cache line " << lineno << " in " << path_ << " (" << e.what() << ")\n";
    }
  }
}

void FactorCache::append(const std::string& key, const Record& r) {
  nlohmann::json j;
  j["key"] = key;
  j["field"] = r.field;
  j["poly"] = r.poly;
  j["engine"] = r.engine;
  j["factors"] = nlohmann::json::array();
  for (const auto& [f, m] : r.factors) j["factors"].push_back({f, m});
  std::error_code ec;
  const auto dir = std::filesystem::path(path_).parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir, ec);
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    warn_ << "warning: cannot write cache file " << path_ << "\n";
    return;
  }
  out << j.dump() << '\n';
}

std::vector<std::pair<KPoly, unsigned>> FactorCache::factor(const KPoly& P0, const NFLimits& limits) {
  const KPoly P = monic(P0);
  const FieldPtr& K = P.context();
  const std::string key = key_for(P);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = records_.find(key);
    if (it != records_.end() && it->second.engine == kEngineVersion) {
      // Re-multiply before trusting the record.
      try {
        const FieldSpec spec{field_string(K), K};
        std::vector<std::pair<KPoly, unsigned>> out;
        KPoly prod = KPoly::constant(NFElement(K, BigRational(1)));
        for (const auto& [s, m] : it->second.factors) {
          out.emplace_back(parse_poly(s, spec), m);
          prod *= pow(out.back().first, m);
        }
        if (prod == P) {
          ++hits_;
          return out;
        }
      } catch (const std::exception&) {
      }
      ++rejected_;
      warn_ << "warning: cache record for " << it->second.poly << " does not reproduce it; recomputing\n";
      records_.erase(it);
    }
  }
  Factorization<NFElement> f = factor_over_nf(P, limits);
  std::vector<std::pair<KPoly, unsigned>> out(f.factors.begin(), f.factors.end());
  Record r{field_string(K), to_string(P), {}, kEngineVersion};
  for (const auto& [g, m] : out) r.factors.emplace_back(to_string(g), m);
  std::lock_guard<std::mutex> lock(mu_);
  ++misses_;
  append(key, r);
  records_[key] = std::move(r);
  return out;
}

}  // namespace hered

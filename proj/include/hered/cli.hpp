#pragma once

// Command-line driver: report builders, the example registry and the
// subcommand dispatcher behind the `hered` binary.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hered/heredity.hpp"
#include "hered/parse.hpp"
#include "json.hpp"

namespace hered::cli {

using nlohmann::json;

enum Exit : int { kOk = 0, kUsage = 1, kRefuted = 2, kResource = 3 };

struct RunConfig {
  int depth = 4;
  std::uint64_t prime_bound = 97;
  std::uint64_t profile_bound = 64;
  int degree_cap = 0;                    // 0: 512 over Q, 128*[K:Q] over K
  std::vector<std::uint64_t> exponents;  // empty: factorial schedule
  bool json = false;
  bool use_cache = true;
  std::string cache_path;                // empty: FactorCache::default_path()

  HeredityOptions heredity_options(const FieldPtr& K) const;
};

/// Reports. Every one is a pure function of its inputs, so cold and warm
/// cache runs serialize identically.
json factor_report(const KPoly& P, FactorProvider& provider, const NFLimits& limits);
json tree_json(const HeredityTree& t);
json classify_json(const ClassificationReport& r);
json element_report(const NFElement& a, const RunConfig& cfg);

/// Example registry. `n` overrides each example's default size bound.
const std::vector<std::string>& example_ids();
json run_example(const std::string& id, std::optional<int> n);
/// True when every check in a registry report passed.
bool example_passed(const json& report);

/// Human-readable rendering of any report above.
std::string render_text(const json& report);

/// Full dispatcher; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hered::cli

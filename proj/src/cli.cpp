#include "hered/cli.hpp"

#include <filesystem>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "hered/cache.hpp"

namespace hered::cli {

HeredityOptions RunConfig::heredity_options(const FieldPtr& K) const {
  HeredityOptions o;
  o.prime_bound = prime_bound;
  o.modtor_bound = prime_bound;
  o.limits.max_norm_degree = degree_cap > 0 ? degree_cap : (K->is_rational() ? 512 : 128 * K->degree());
  return o;
}

namespace {

json cache_report(const std::string& action, const std::string& path, std::ostream& err, bool& invalid_found) {
  json j{{"command", "cache"}, {"action", action}, {"path", path}};
  if (action == "clear") {
    std::error_code ec;
    j["removed"] = std::filesystem::remove(path, ec);
    return j;
  }
  FactorCache cache(path, err);
  j["records"] = cache.records();
  j["corrupt_lines"] = cache.corrupt_lines();
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  j["bytes"] = ec ? 0 : size;
  if (action == "verify") {
    std::map<std::string, FieldSpec> fields;
    json bad = json::array();
    for (const auto& [key, r] : cache.entries()) {
      bool ok = false;
      try {
        auto it = fields.find(r.field);
        if (it == fields.end()) it = fields.emplace(r.field, parse_field(r.field)).first;
        const KPoly P = parse_poly(r.poly, it->second);
        KPoly prod = KPoly::constant(NFElement(it->second.field, BigRational(1)));
        for (const auto& [f, m] : r.factors) prod *= pow(parse_poly(f, it->second), m);
        ok = prod == P && FactorCache::key_for(P) == key;
      } catch (const std::exception&) {
      }
      if (!ok) bad.push_back(key);
    }
    j["invalid"] = bad;
    invalid_found = !bad.empty();
  }
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hereditary irreducibility toolkit", "hered"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_flag("--json", cfg.json, "Emit JSON instead of text");
  app.add_option("--cache", cfg.cache_path, "Factorization cache file (default $HERED_CACHE or ~/.cache/hered)");
  app.add_flag("--no-cache", [&](std::int64_t) { cfg.use_cache = false; }, "Do not read or write the cache");
  app.add_option("--prime-bound", cfg.prime_bound, "Prime bound for rootlessness and certificates")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
  app.add_option("--degree-cap", cfg.degree_cap, "Cap on deg(P)*[K:Q] for factorization over K")
      ->check(CLI::PositiveNumber);

  std::string field_text = "Q", poly_text, element_text, cache_action;
  std::vector<std::string> ids;
  bool all = false, require_rootless = false;
  std::optional<int> example_n;

  auto* factor = app.add_subcommand("factor", "Factor a polynomial over Q or a number field");
  auto* tree = app.add_subcommand("tree", "Build the hereditary factor tree");
  auto* classify = app.add_subcommand("classify", "Classify good heredity from the trimmed tree");
  for (auto* s : {factor, tree, classify}) {
    s->add_option("-f,--field", field_text, "Field: Q or Q[a]/(m)");
    s->add_option("poly", poly_text, "Polynomial in x")->required();
  }
  std::vector<CLI::Option*> depth_opts;
  for (auto* s : {tree, classify}) {
    depth_opts.push_back(s->add_option("--depth", cfg.depth, "Number of levels (default 4)")->check(CLI::Range(1, 12)));
    s->add_option("--exponents", cfg.exponents, "Explicit divisibility chain of level exponents; sets the depth")
        ->delimiter(',');
  }
  auto* element = app.add_subcommand("element", "Rootlessness diagnostics for a field element");
  element->add_option("-f,--field", field_text, "Field: Q or Q[a]/(m)");
  element->add_option("element", element_text, "Element in the generator")->required();
  element->add_option("-N,--profile-bound", cfg.profile_bound, "Exponent bound for the root profile")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{4096}));
  element->add_flag("--require-rootless", require_rootless, "Exit 2 unless both rootless verdicts are TRUE");
  auto* verify = app.add_subcommand("verify", "Run registered examples");
  verify->add_option("ids", ids, "Example identifiers");
  verify->add_flag("--all", all, "Run every registered example");
  verify->add_option("--n", example_n, "Size bound for the examples");
  auto* cache = app.add_subcommand("cache", "Inspect the factorization cache");
  cache->add_option("action", cache_action, "stats | clear | verify")
      ->required()
      ->check(CLI::IsMember({"stats", "clear", "verify"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (!cfg.exponents.empty() && depth_opts[0]->count() == 0 && depth_opts[1]->count() == 0)
    cfg.depth = static_cast<int>(cfg.exponents.size());
  if (cfg.cache_path.empty()) cfg.cache_path = FactorCache::default_path();

  try {
    int status = kOk;
    json report;
    if (cache->parsed()) {
      bool invalid = false;
      report = cache_report(cache_action, cfg.cache_path, err, invalid);
      if (invalid) status = kRefuted;
    } else if (verify->parsed()) {
      if (all) ids = example_ids();
      if (ids.empty()) throw DomainError("verify needs example identifiers or --all");
      report = {{"command", "verify"}, {"examples", json::array()}};
      for (const auto& id : ids) {
        json r = run_example(id, example_n);
        if (!example_passed(r)) status = kRefuted;
        report["examples"].push_back(std::move(r));
      }
    } else {
      const FieldSpec F = parse_field(field_text);
      std::unique_ptr<FactorProvider> provider;
      if (cfg.use_cache)
        provider = std::make_unique<FactorCache>(cfg.cache_path, err);
      else
        provider = std::make_unique<MemoFactorProvider>();
      const HeredityOptions opts = cfg.heredity_options(F.field);
      if (factor->parsed()) {
        report = factor_report(parse_poly(poly_text, F), *provider, opts.limits);
      } else if (element->parsed()) {
        report = element_report(parse_element(element_text, F), cfg);
        const bool rootless = report["very_rootless"]["verdict"] == "TRUE-up-to-bound" &&
                              report["very_rootless_modtor"]["verdict"] == "TRUE-up-to-bound";
        if (require_rootless && !rootless) status = kRefuted;
      } else {
        TreeRequest req;
        req.depth = cfg.depth;
        req.exponents = cfg.exponents;
        req.options = opts;
        const KPoly P = parse_poly(poly_text, F);
        if (tree->parsed()) {
          report = {{"command", "tree"}, {"tree", tree_json(build_tree(P, req, provider.get()))}};
        } else {
          const ClassificationReport c = classify_good_heredity(P, req, provider.get());
          report = classify_json(c);
          if (c.verdict == Verdict::NotGoodHeredityWitnessed) status = kRefuted;
        }
      }
    }
    out << (cfg.json ? report.dump(2) + "\n" : render_text(report));
    return status;
  } catch (const ResourceError& e) {
    err << "resource cap exceeded: " << e.what() << "\n";
    if (!e.progress().empty()) err << "progress: " << e.progress() << "\n";
    return kResource;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hered::cli

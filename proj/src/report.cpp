#include <sstream>

#include "hered/cli.hpp"

namespace hered::cli {

namespace {

std::string str(const BigRational& q) { return q.get_str(); }
std::string str(const BigInt& z) { return z.get_str(); }

json factor_list(const std::vector<std::pair<KPoly, unsigned>>& fs) {
  json a = json::array();
  for (const auto& [f, m] : fs) a.push_back({{"poly", to_string(f)}, {"degree", f.degree()}, {"multiplicity", m}});
  return a;
}

json certificate_json(const Certificate& c) {
  json j{{"kind", to_string(c.kind)}, {"scope", c.scope()}, {"unconditional", c.unconditional}, {"reason", c.reason}};
  switch (c.kind) {
    case CertKind::Eisenstein:
      j["prime"] = str(c.eisenstein_prime);
      break;
    case CertKind::Capelli:
    case CertKind::LinearRootlessModtor:
      j["prime_bound"] = c.prime_bound;
      j["primes_checked"] = c.primes_checked;
      j["minus_four_checked"] = c.minus_four_checked;
      j["theta_norm"] = str(c.theta_norm);
      break;
    case CertKind::SplitWitness:
      j["split_exponent"] = c.split_exponent;
      j["split_factors"] = factor_list(c.split_factors);
      break;
  }
  return j;
}

json verdict_json(const RootlessVerdict& v) {
  json j{{"verdict", v.rootless ? "TRUE-up-to-bound" : "FALSE"}, {"bound", v.bound}, {"unconditional", v.unconditional}};
  if (!v.rootless) j["witness"] = {{"prime", v.prime}, {"zeta", to_string(v.zeta)}, {"g", to_string(v.root)}};
  return j;
}

void indent(std::ostringstream& o, int d) { o << std::string(static_cast<std::size_t>(2 * d), ' '); }

// Generic fallback: nested key/value listing of the report.
void render_generic(std::ostringstream& o, const json& j, int d) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    indent(o, d);
    if (j.is_object()) o << it.key() << ":";
    else o << "-";
    const json& v = it.value();
    if (v.is_structured() && !v.empty()) {
      bool flat = v.is_array();
      for (const auto& e : v)
        if (e.is_structured()) flat = false;
      if (flat) {
        o << " " << v.dump() << "\n";
      } else {
        o << "\n";
        render_generic(o, v, d + 1);
      }
    } else {
      o << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

std::string cert_line(const json& c) {
  std::string s = c.at("kind").get<std::string>() + " [" + c.at("scope").get<std::string>() + "]";
  if (c.contains("prime")) s += " p=" + c["prime"].get<std::string>();
  if (c.contains("split_exponent")) s += " n=" + std::to_string(c["split_exponent"].get<std::uint64_t>());
  return s;
}

void render_tree(std::ostringstream& o, const json& t) {
  o << "field: " << t["field"].get<std::string>() << "\n";
  o << "root: " << t["root"].get<std::string>() << "\n";
  o << "schedule: " << t["schedule"].get<std::string>() << " " << t["exponents"].dump() << "\n";
  for (const auto& L : t["levels"]) {
    o << "level " << L["level"] << " (exponent " << L["exponent"] << "): " << L["nodes"].size() << " node(s)"
      << (L["complete"].get<bool>() ? "" : ", incomplete") << (L["product_ok"].get<bool>() ? ", product ok" : "")
      << "\n";
    for (const auto& id : L["nodes"]) {
      const json& n = t["nodes"][id.get<std::size_t>()];
      o << "  #" << n["id"] << " " << n["poly"].get<std::string>();
      if (n["multiplicity"].get<unsigned>() > 1) o << " ^" << n["multiplicity"];
      if (!n["parent"].is_null()) o << "  parent #" << n["parent"];
      o << "  " << n["status"].get<std::string>();
      if (!n["certificate"].is_null())
        o << " " << cert_line(n["certificate"]) << (n["inherited"].get<bool>() ? " (inherited)" : "");
      if (!n["in_trimmed"].get<bool>()) o << " [trimmed]";
      if (!n["note"].get<std::string>().empty()) o << "  (" << n["note"].get<std::string>() << ")";
      o << "\n";
      if (!n["certificate"].is_null() && n["certificate"].contains("split_factors"))
        for (const auto& f : n["certificate"]["split_factors"]) {
          o << "      witness factor " << f["poly"].get<std::string>();
          if (f["multiplicity"].get<unsigned>() > 1) o << " ^" << f["multiplicity"];
          o << "\n";
        }
    }
  }
  for (const auto& w : t["warnings"]) o << "warning: " << w.get<std::string>() << "\n";
}

}  // namespace

json factor_report(const KPoly& P, FactorProvider& provider, const NFLimits& limits) {
  if (P.is_zero()) throw DomainError("cannot factor the zero polynomial");
  json j{{"command", "factor"}, {"field", field_string(P.context())}, {"poly", to_string(P)},
         {"unit", to_string(P.lead())}};
  j["factors"] = P.degree() == 0 ? json::array() : factor_list(provider.factor(P, limits));
  return j;
}

json tree_json(const HeredityTree& t) {
  json j{{"field", field_string(t.field)},
         {"root", to_string(t.root)},
         {"depth", t.depth},
         {"exponents", t.exponents},
         {"schedule", t.factorial_schedule ? "factorial" : "explicit"},
         {"prime_bound", t.options.prime_bound}};
  j["levels"] = json::array();
  for (std::size_t l = 0; l < t.levels.size(); ++l)
    j["levels"].push_back({{"level", l + 1},
                           {"exponent", t.exponents[l]},
                           {"nodes", t.levels[l]},
                           {"complete", static_cast<bool>(t.level_complete[l])},
                           {"product_ok", static_cast<bool>(t.level_product_ok[l])}});
  j["nodes"] = json::array();
  for (const auto& n : t.nodes)
    j["nodes"].push_back({{"id", n.id},
                          {"level", n.level},
                          {"exponent", n.exponent},
                          {"poly", to_string(n.poly)},
                          {"degree", n.poly.degree()},
                          {"multiplicity", n.multiplicity},
                          {"parent", n.parent < 0 ? json(nullptr) : json(n.parent)},
                          {"children", n.children},
                          {"status", to_string(n.status)},
                          {"certificate", n.certificate ? certificate_json(*n.certificate) : json(nullptr)},
                          {"inherited", n.inherited},
                          {"in_trimmed", n.in_trimmed},
                          {"note", n.note}});
  j["trimmed_nodes"] = t.trimmed_nodes();
  j["warnings"] = t.warnings;
  return j;
}

json classify_json(const ClassificationReport& r) {
  json j{{"command", "classify"},
         {"verdict", to_string(r.verdict)},
         {"certificate_scope", r.certificate_scope},
         {"certified_at_level", r.certified_at_level},
         {"summary", r.summary}};
  j["open_branches"] = json::array();
  for (const auto& b : r.open_branches) {
    json chain = json::array();
    for (const auto& s : b) chain.push_back({{"n", s.n}, {"Q", to_string(s.Q)}, {"k", s.k}});
    j["open_branches"].push_back(chain);
  }
  j["tree"] = tree_json(r.tree);
  return j;
}

json element_report(const NFElement& a, const RunConfig& cfg) {
  const FieldPtr& K = a.field();
  const HeredityOptions o = cfg.heredity_options(K);
  json j{{"command", "element"}, {"field", field_string(K)}, {"element", to_string(a)}};
  j["very_rootless"] = verdict_json(very_rootless(a, cfg.prime_bound, o.limits));
  j["very_rootless_modtor"] = verdict_json(very_rootless_modtor(a, cfg.prime_bound, o.limits));
  const RootProfile p = root_profile(a, cfg.profile_bound, o.limits);
  json twist = json::object();
  for (const auto& [n, k] : p.twist) twist[std::to_string(n)] = k;
  json observed = json::array();
  for (const auto& q : p.observed) observed.push_back(str(q));
  const TorsionGroup T = torsion_units(K);
  j["root_profile"] = {{"bound", p.bound},
                       {"solvable", p.solvable},
                       {"modtor_solvable", p.modtor_solvable},
                       {"torsion_order", T.order},
                       {"torsion_generator", to_string(T.generator)},
                       {"twist", twist},
                       {"generator", str(p.generator)},
                       {"plain_generator", str(p.plain_generator)},
                       {"observed", observed}};
  return j;
}

std::string render_text(const json& r) {
  std::ostringstream o;
  const std::string cmd = r.value("command", "");
  if (cmd == "factor") {
    o << "field: " << r["field"].get<std::string>() << "\n";
    o << "poly: " << r["poly"].get<std::string>() << "\n";
    o << "unit: " << r["unit"].get<std::string>() << "\n";
    for (const auto& f : r["factors"]) {
      o << "  " << f["poly"].get<std::string>();
      if (f["multiplicity"].get<unsigned>() > 1) o << " ^" << f["multiplicity"];
      o << "  (degree " << f["degree"] << ")\n";
    }
  } else if (cmd == "tree") {
    render_tree(o, r["tree"]);
  } else if (cmd == "classify") {
    o << "verdict: " << r["verdict"].get<std::string>() << "\n";
    if (!r["certificate_scope"].get<std::string>().empty())
      o << "scope: " << r["certificate_scope"].get<std::string>() << "\n";
    if (r["certified_at_level"].get<int>() > 0) o << "certified at level: " << r["certified_at_level"] << "\n";
    o << "summary: " << r["summary"].get<std::string>() << "\n";
    for (std::size_t b = 0; b < r["open_branches"].size(); ++b) {
      o << "open branch " << b + 1 << ":";
      for (const auto& s : r["open_branches"][b])
        o << " (n=" << s["n"] << ", Q=" << s["Q"].get<std::string>() << ", k=" << s["k"] << ")";
      o << "\n";
    }
    render_tree(o, r["tree"]);
  } else if (cmd == "verify") {
    for (const auto& e : r["examples"]) {
      o << e["id"].get<std::string>() << ": " << e["status"].get<std::string>() << "\n";
      for (const auto& c : e["checks"])
        o << "  [" << (c["ok"].get<bool>() ? "ok" : "FAIL") << "] " << c["name"].get<std::string>() << ": "
          << c["detail"].get<std::string>() << "\n";
      for (const auto& d : e["discrepancies"])
        o << "  discrepancy " << d["id"].get<std::string>() << ": printed " << d["printed"].get<std::string>()
          << "; verified " << d["verified"].get<std::string>() << ". " << d["note"].get<std::string>() << "\n";
    }
  } else {
    render_generic(o, r, 0);
  }
  return o.str();
}

}  // namespace hered::cli

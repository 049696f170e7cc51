#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "hered/cache.hpp"
#include "hered/cli.hpp"

using namespace hered;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& tag) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("hered-test-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".jsonl");
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

struct Run {
  int status;
  std::string out, err;
};

Run hered_run(std::vector<std::string> args) {
  std::vector<const char*> argv{"hered"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int s = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {s, out.str(), err.str()};
}

std::string read_all(const std::filesystem::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("parse_poly examples") {
  const FieldSpec Q = parse_field("Q");
  const KPoly p = parse_poly("x^4 + 2", Q);
  REQUIRE(p.degree() == 4);
  const std::vector<long> want{2, 0, 0, 0, 1};
  for (int i = 0; i <= 4; ++i) CHECK(p[static_cast<std::size_t>(i)] == NFElement(Q.field, BigRational(want[i])));

  const FieldSpec F = parse_field("Q[a]/(a^4 - 2)");
  CHECK(F.text == "Q[a]/(a^4-2)");
  const KPoly f = parse_poly("x^2 + a^3*x + a^2", F);
  const NFElement a = NFElement::generator(F.field);
  CHECK(f[0] == a.pow(2));
  CHECK(f[1] == a.pow(3));
  CHECK(f[2] == NFElement(F.field, BigRational(1)));
  // The printed factor divides x^4 + 2 exactly.
  CHECK(divrem(parse_poly("x^4+2", F), f).second.is_zero());

  CHECK(parse_poly("(x+1)^2 - x^2", Q) == parse_poly("2*x+1", Q));
  CHECK(parse_poly("x/2 + 1/3", Q)[0] == NFElement(Q.field, BigRational(1, 3)));
  CHECK(parse_poly("-x", Q) == -KPoly::variable(Q.field));
}

TEST_CASE("parse errors carry 1-based offsets") {
  const FieldSpec Q = parse_field("Q");
  try {
    parse_poly("x^^2", Q);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  try {
    parse_poly("2x", Q);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_poly("x/0", Q), ParseError);
  CHECK_THROWS_AS(parse_poly("a*x", Q), ParseError);
  CHECK_THROWS_AS(parse_poly("x+", Q), ParseError);
  CHECK_THROWS_AS(parse_poly("(x+1", Q), ParseError);
  CHECK_THROWS_AS(parse_poly("x^99999999", Q), ParseError);
  CHECK_THROWS_AS(parse_element("x", Q), ParseError);

  CHECK_THROWS_AS(parse_field("R"), ParseError);
  CHECK_THROWS_AS(parse_field("Q[x]/(x^2-2)"), ParseError);
  CHECK_THROWS_AS(parse_field("Q[a]/(a^2-4)"), DomainError);   // reducible
  CHECK_THROWS_AS(parse_field("Q[a]/(2*a^2-1)"), DomainError); // not monic
  CHECK_THROWS_AS(parse_field("Q[a]/(a^2-1/2)"), DomainError); // not integral
  CHECK_THROWS_AS(parse_field("Q[a]/(a^2-b)"), ParseError);
}

TEST_CASE("print/parse round trip is idempotent") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-9, 9);
  for (const char* field : {"Q", "Q[a]/(a^3-2)", "Q[g]/(g^2+g+1)"}) {
    const FieldSpec F = parse_field(field);
    for (int i = 0; i < 60; ++i) {
      std::vector<NFElement> c;
      const int deg = static_cast<int>(rng() % 6);
      for (int k = 0; k <= deg; ++k) {
        QPoly r;
        for (int j = 0; j < F.field->degree(); ++j) {
          const long den = d(rng);
          r += QPoly::monomial(make_rational(d(rng), den == 0 ? 1 : den), j);
        }
        c.emplace_back(F.field, r);
      }
      const KPoly p(std::move(c), F.field);
      const std::string s = to_string(p);
      const KPoly q = parse_poly(s, F);
      CHECK(q == p);
      CHECK(to_string(q) == s);
    }
  }
}

TEST_CASE("factor cache persists and validates records") {
  TempFile tmp("cache");
  std::ostringstream warn;
  const FieldSpec F = parse_field("Q[a]/(a^4-2)");
  const KPoly P = parse_poly("x^4+2", F);
  std::vector<std::pair<KPoly, unsigned>> first;
  {
    FactorCache c(tmp.path.string(), warn);
    first = c.factor(P, {});
    CHECK(c.misses() == 1);
    CHECK(c.hits() == 0);
    CHECK(first.size() == 2);
  }
  {
    FactorCache c(tmp.path.string(), warn);
    CHECK(c.records() == 1);
    const auto again = c.factor(P, {});
    CHECK(c.hits() == 1);
    REQUIRE(again.size() == first.size());
    for (std::size_t i = 0; i < again.size(); ++i) CHECK(again[i].first == first[i].first);
  }
  // The key ignores input spelling: it hashes the canonical strings.
  CHECK(FactorCache::key_for(parse_poly("2 + x ^ 4", F)) == FactorCache::key_for(P));
  CHECK(FactorCache::key_for(P) != FactorCache::key_for(parse_poly("x^4+2", parse_field("Q[a]/(a^4-3)"))));

  // Tamper with a factor while keeping the key valid: the record must be rejected.
  std::string text = read_all(tmp.path);
  const auto pos = text.find("x^2-a^3*x+a^2");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 13, "x^2-a^3*x+a^3");
  std::ofstream(tmp.path) << text << "not json\n";
  {
    std::ostringstream w;
    FactorCache c(tmp.path.string(), w);
    CHECK(c.corrupt_lines() == 1);
    const auto again = c.factor(P, {});
    CHECK(c.rejected() == 1);
    CHECK(c.misses() == 1);
    CHECK(again.size() == 2);
    CHECK(w.str().find("corrupt") != std::string::npos);
  }
}

TEST_CASE("sha256 known answer") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("run_command exit codes") {
  TempFile tmp("cli");
  const std::string cache = tmp.path.string();
  auto r = hered_run({"--cache", cache, "factor", "-f", "Q[a]/(a^4-2)", "x^4+2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("x^2+a^3*x+a^2") != std::string::npos);
  CHECK(r.out.find("x^2-a^3*x+a^2") != std::string::npos);

  CHECK(hered_run({"--cache", cache, "factor", "x^^2"}).status == 1);
  CHECK(hered_run({"--cache", cache, "factor", "-f", "Q[a]/(a^2-4)", "x"}).status == 1);
  CHECK(hered_run({"bogus"}).status == 1);
  CHECK(hered_run({}).status == 1);
  CHECK(hered_run({"--help"}).status == 0);
  CHECK(hered_run({"verify", "no-such-example"}).status == 1);
  CHECK(hered_run({"--no-cache", "--degree-cap", "8", "factor", "-f", "Q[a]/(a^4-2)", "x^4+2"}).status == 3);
  CHECK(hered_run({"--no-cache", "element", "--require-rootless", "16"}).status == 2);
  CHECK(hered_run({"--no-cache", "element", "--require-rootless", "2"}).status == 0);
  CHECK(hered_run({"--no-cache", "element", "-1"}).status == 1);
  CHECK(hered_run({"--no-cache", "tree", "x"}).status == 1);
}

TEST_CASE("tree report for x+4 splits at level 4") {
  auto r = hered_run({"--no-cache", "--json", "tree", "-f", "Q", "x+4", "--depth", "4"});
  REQUIRE(r.status == 0);
  const auto j = cli::json::parse(r.out);
  const auto& t = j["tree"];
  CHECK(t["exponents"] == cli::json::array({1, 2, 6, 24}));
  REQUIRE(t["levels"].size() == 4);
  CHECK(t["levels"][2]["nodes"].size() == 1);
  CHECK(t["levels"][3]["nodes"].size() == 2);
  std::set<std::string> top;
  for (const auto& id : t["levels"][3]["nodes"]) top.insert(t["nodes"][id.get<std::size_t>()]["poly"]);
  // Sophie Germain: x^24 + 4 = (x^12 - 2x^6 + 2)(x^12 + 2x^6 + 2).
  CHECK(top == std::set<std::string>{"x^12-2*x^6+2", "x^12+2*x^6+2"});
  for (const auto& L : t["levels"]) CHECK(L["product_ok"].get<bool>());
}

TEST_CASE("verify registry") {
  CHECK(cli::example_ids().size() == 9);
  auto r = hered_run({"--json", "verify", "rottenroots-claim3", "--n", "4"});
  CHECK(r.status == 0);
  const auto j = cli::json::parse(r.out);
  CHECK(j["examples"][0]["status"] == "verified");
  CHECK(j["examples"][0]["discrepancies"][0]["id"] == "quadratic-factor-sign");

  auto all = hered_run({"--json", "verify", "--all"});
  CHECK(all.status == 0);
  const auto ja = cli::json::parse(all.out);
  REQUIRE(ja["examples"].size() == cli::example_ids().size());
  for (const auto& e : ja["examples"]) CHECK(e["status"] == "verified");

  const auto b = cli::run_example("one-converse-fail-b", 8);
  REQUIRE(b["discrepancies"].size() == 1);
  CHECK(b["discrepancies"][0]["verified"].get<std::string>().find("{4,8}") != std::string::npos);
}

TEST_CASE("cold and warm runs are byte-identical") {
  TempFile tmp("det");
  const std::vector<std::string> args{"--cache", tmp.path.string(), "--json", "classify", "x-16"};
  const auto cold = hered_run(args);
  CHECK(std::filesystem::exists(tmp.path));
  const auto warm = hered_run(args);
  CHECK(cold.status == 0);
  CHECK(cold.out == warm.out);
  const auto text = hered_run({"--cache", tmp.path.string(), "classify", "x-16"});
  CHECK(text.out.find("GOOD-HEREDITY-CERTIFIED") != std::string::npos);

  auto stats = hered_run({"--cache", tmp.path.string(), "--json", "cache", "verify"});
  CHECK(stats.status == 0);
  CHECK(cli::json::parse(stats.out)["invalid"].empty());
  CHECK(hered_run({"--cache", tmp.path.string(), "cache", "clear"}).status == 0);
  CHECK_FALSE(std::filesystem::exists(tmp.path));
}

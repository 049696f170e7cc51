#include "hered/parse.hpp"

#include <cctype>

namespace hered {

namespace {

constexpr unsigned long kMaxExponent = 1UL << 16;

class Parser {
 public:
  Parser(const std::string& s, FieldPtr K, std::string var, std::string gen)
      : s_(s), K_(std::move(K)), var_(std::move(var)), gen_(std::move(gen)) {}

  KPoly parse() {
    KPoly r = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, i_ + 1); }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  BigInt integer() {
    skip();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an integer");
    return BigInt(s_.substr(start, i_ - start));
  }

  KPoly constant(const BigRational& c) const { return KPoly::constant(NFElement(K_, c)); }

  KPoly expr() {
    skip();
    bool negate = false;
    if (eat('-'))
      negate = true;
    else
      eat('+');
    KPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  KPoly term() {
    KPoly acc = power();
    for (;;) {
      skip();
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        const BigInt d = integer();
        if (d == 0) fail("division by zero");
        acc *= constant(make_rational(1, d));
      } else {
        if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '('))
          fail("implicit multiplication is not allowed");
        return acc;
      }
    }
  }

  KPoly power() {
    KPoly base = atom();
    if (eat('^')) {
      skip();
      const BigInt e = integer();
      if (e > BigInt(kMaxExponent)) fail("exponent too large");
      return pow(base, e.get_ui());
    }
    return base;
  }

  KPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(BigRational(integer()));
    if (c == '(') {
      ++i_;
      KPoly r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      const std::string name = s_.substr(start, i_ - start);
      if (!var_.empty() && name == var_) return KPoly::variable(K_);
      if (!gen_.empty() && name == gen_) return KPoly::constant(NFElement::generator(K_));
      i_ = start;
      if (gen_.empty() && name != var_) fail("unknown identifier '" + name + "' (the field has no generator)");
      fail("unknown identifier '" + name + "'");
    }
    fail("expected a number, a variable or '('");
  }

  const std::string& s_;
  FieldPtr K_;
  std::string var_, gen_;
  std::size_t i_ = 0;
};

}  // namespace

std::string field_string(const FieldPtr& K) {
  if (K->is_rational() && K->modulus() == QPoly::variable()) return "Q";
  return "Q[" + K->generator_name() + "]/(" + to_string(K->modulus(), K->generator_name()) + ")";
}

FieldSpec parse_field(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Q") return {"Q", NumberField::rationals()};
  if (t.size() < 2 || t.compare(0, 2, "Q[") != 0) throw ParseError("field must be 'Q' or 'Q[g]/(m)'", 1);
  const std::size_t close = t.find(']');
  if (close == std::string::npos) throw ParseError("missing ']'", t.size());
  const std::string gen = t.substr(2, close - 2);
  if (gen.empty() || !std::isalpha(static_cast<unsigned char>(gen[0])) || gen == "x")
    throw ParseError("invalid generator name", 3);
  for (char c : gen)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') throw ParseError("invalid generator name", 3);
  if (t.compare(close + 1, 2, "/(") != 0 || t.back() != ')') throw ParseError("expected '/(' modulus ')'", close + 2);
  const std::string body = t.substr(close + 3, t.size() - close - 4);
  Parser p(body, NumberField::rationals(), gen, "");
  QPoly m;
  try {
    m = to_qpoly(p.parse());
  } catch (const ParseError& e) {
    throw ParseError(std::string("in modulus: ") + e.what(), close + 3 + e.offset());
  }
  if (m.degree() < 1) throw DomainError("modulus must be nonconstant");
  if (!(m.lead() == 1)) throw DomainError("modulus must be monic");
  for (const auto& c : m.coeffs())
    if (c.get_den() != 1) throw DomainError("modulus must have integer coefficients");
  FieldPtr K = NumberField::make(m, gen);
  return {field_string(K), K};
}

KPoly parse_poly(const std::string& text, const FieldSpec& K) {
  const std::string gen = K.field->is_rational() && K.text == "Q" ? "" : K.field->generator_name();
  return Parser(text, K.field, "x", gen).parse();
}

NFElement parse_element(const std::string& text, const FieldSpec& K) {
  const std::string gen = K.field->is_rational() && K.text == "Q" ? "" : K.field->generator_name();
  KPoly p = Parser(text, K.field, "", gen).parse();
  if (p.is_zero()) return NFElement(K.field, BigRational(0));
  return p[0];
}

}  // namespace hered

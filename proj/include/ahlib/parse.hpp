#pragma once

// Text syntax for fields, scalars, polynomials and algebra elements.
//
//   expr  = [+|-] term ((+|-) term)*
//   term  = power (* power)*
//   power = atom [^ integer]
//   atom  = integer [/ integer] | identifier | ( expr )

#include <cctype>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ahlib/ahalg.hpp"

namespace ahlib {

template <class V>
struct ParseOps {
  std::function<V(const Scalar&)> from_scalar;
  std::function<std::optional<V>(const std::string&)> variable;
};

template <class V>
class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Field field, ParseOps<V> ops)
      : s_(text), field_(std::move(field)), ops_(std::move(ops)) {}

  V parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    V v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    V acc = term();
    if (neg) acc = ops_.from_scalar(-field_.one()) * acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  V term() {
    V acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  V power() {
    V base = atom();
    if (!eat('^')) return base;
    const mpz_class e = integer();
    if (e > 4096) fail("exponent too large");
    V acc = ops_.from_scalar(field_.one());
    for (unsigned long i = 0; i < e.get_ui(); ++i) acc = acc * base;
    return acc;
  }

  mpz_class integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  V atom() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class q(integer());
      if (eat('/')) {
        const mpz_class d = integer();
        if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in \"" + std::string(s_) + "\"");
        q = mpq_class(q.get_num(), d);
        q.canonicalize();
      }
      return ops_.from_scalar(field_.from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(start, pos_ - start));
      if (auto v = ops_.variable(name)) return *v;
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  Field field_;
  ParseOps<V> ops_;
};

namespace detail {

/// Thin wrapper so scalars reuse the generic parser.
struct ScalarBox {
  Scalar v;
  ScalarBox operator+(const ScalarBox& o) const { return {v + o.v}; }
  ScalarBox operator-(const ScalarBox& o) const { return {v - o.v}; }
  ScalarBox operator*(const ScalarBox& o) const { return {v * o.v}; }
};

}  // namespace detail

/// Scalar literal; extension elements are polynomials in t.
inline Scalar parse_scalar(std::string_view text, const Field& field) {
  ParseOps<detail::ScalarBox> ops{
      [](const Scalar& s) { return detail::ScalarBox{s}; },
      [&](const std::string& name) -> std::optional<detail::ScalarBox> {
        if (name == "t" && field.is_extension()) return detail::ScalarBox{field.generator()};
        return std::nullopt;
      }};
  return ExpressionParser<detail::ScalarBox>(text, field, ops).parse().v;
}

/// Polynomial in `var` (default x); extension scalars may use t.
inline Poly parse_poly(std::string_view text, const Field& field, const std::string& var = "x") {
  ParseOps<Poly> ops{
      [](const Scalar& s) { return Poly::constant(s); },
      [&](const std::string& name) -> std::optional<Poly> {
        if (name == var) return Poly::x(field);
        if (name == "t" && field.is_extension()) return Poly::constant(field.generator());
        return std::nullopt;
      }};
  return ExpressionParser<Poly>(text, field, ops).parse();
}

/// Element of A_h in x and y; products are reordered into normal form.
inline AhElement parse_element(std::string_view text, const AhContext& ctx) {
  const Field& field = ctx.field();
  ParseOps<AhElement> ops{
      [&](const Scalar& s) { return AhElement::constant(ctx, s); },
      [&](const std::string& name) -> std::optional<AhElement> {
        if (name == "x") return AhElement::x(ctx);
        if (name == "y") return AhElement::y(ctx);
        if (name == "t" && field.is_extension()) return AhElement::constant(ctx, field.generator());
        return std::nullopt;
      }};
  return ExpressionParser<AhElement>(text, field, ops).parse();
}

/// "q", "fp:<p>", or either followed by "[<irreducible polynomial in t>]".
inline Field parse_field(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::string head = s;
  std::string modulus;
  if (const auto open = s.find('['); open != std::string::npos) {
    if (s.back() != ']') throw Error(ErrorCode::ParseError, "unterminated '[' in field \"" + s + "\"");
    head = s.substr(0, open);
    modulus = s.substr(open + 1, s.size() - open - 2);
  }
  Field base = Field::rationals();
  if (head == "q" || head == "Q") {
    base = Field::rationals();
  } else if (head.rfind("fp:", 0) == 0 && head.size() > 3) {
    for (std::size_t i = 3; i < head.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(head[i]))) {
        throw Error(ErrorCode::ParseError, "bad prime in field \"" + s + "\"");
      }
    if (head.size() > 13) throw Error(ErrorCode::NotPrime, head.substr(3) + " exceeds 2^31");
    base = Field::prime(std::stoull(head.substr(3)));
  } else {
    throw Error(ErrorCode::ParseError, "unknown field \"" + s + "\" (expected q or fp:<p>)");
  }
  if (modulus.empty()) return base;
  return make_extension(parse_poly(modulus, base, "t"));
}

}  // namespace ahlib

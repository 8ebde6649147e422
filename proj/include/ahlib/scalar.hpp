#pragma once

// Exact field elements over Q, F_p and simple extensions K[t]/(m) with K = Q or F_p.
//
// A Field is a cheap handle to immutable shared data; a Scalar carries its Field so that
// arithmetic between elements of different fields is detected at run time.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ahlib/errors.hpp"

namespace ahlib {

class Scalar;

namespace detail {

enum class FieldKind { Rationals, PrimeField, Extension };

using FpVec = std::vector<std::uint64_t>;
using QVec = std::vector<mpq_class>;

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;  // characteristic
  FieldKind base_kind = FieldKind::Rationals;
  // Monic modulus of an extension, low degree first, size degree + 1.
  FpVec mod_fp;
  QVec mod_q;
  std::size_t degree = 1;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

struct FpOps {
  using T = std::uint64_t;
  std::uint64_t p;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(T a, T b) const {
    T s = a + b;
    return s >= p ? s - p : s;
  }
  T sub(T a, T b) const { return a >= b ? a - b : a + p - b; }
  T neg(T a) const { return a == 0 ? 0 : p - a; }
  // p <= 2^31 so the product fits in 64 bits.
  T mul(T a, T b) const { return (a * b) % p; }
  T pow(T a, std::uint64_t e) const {
    T r = 1 % p;
    while (e > 0) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return r;
  }
  T inv(T a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in F_" + std::to_string(p));
    return pow(a, p - 2);
  }
};

struct QOps {
  using T = mpq_class;

  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return sgn(a) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T mul(const T& a, const T& b) const { return a * b; }
  T inv(const T& a) const {
    if (sgn(a) == 0) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in Q");
    return T(1) / a;
  }
};

// Dense coefficient vectors used for extension-field arithmetic.
template <class Ops>
void raw_trim(const Ops& ops, std::vector<typename Ops::T>& a) {
  while (!a.empty() && ops.is_zero(a.back())) a.pop_back();
}

template <class Ops>
std::vector<typename Ops::T> raw_mul(const Ops& ops, const std::vector<typename Ops::T>& a,
                                     const std::vector<typename Ops::T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<typename Ops::T> out(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ops.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = ops.add(out[i + j], ops.mul(a[i], b[j]));
    }
  }
  raw_trim(ops, out);
  return out;
}

template <class Ops>
std::vector<typename Ops::T> raw_sub(const Ops& ops, std::vector<typename Ops::T> a,
                                     const std::vector<typename Ops::T>& b) {
  if (a.size() < b.size()) a.resize(b.size(), ops.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ops.sub(a[i], b[i]);
  raw_trim(ops, a);
  return a;
}

template <class Ops>
std::pair<std::vector<typename Ops::T>, std::vector<typename Ops::T>> raw_divrem(
    const Ops& ops, std::vector<typename Ops::T> a, const std::vector<typename Ops::T>& b) {
  using T = typename Ops::T;
  raw_trim(ops, a);
  if (b.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  std::vector<T> q(a.size() - b.size() + 1, ops.zero());
  const T lead_inv = ops.inv(b.back());
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (ops.is_zero(a[i])) continue;
    const T c = ops.mul(a[i], lead_inv);
    const std::size_t shift = i + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = ops.sub(a[shift + j], ops.mul(c, b[j]));
    }
  }
  raw_trim(ops, a);
  raw_trim(ops, q);
  return {q, a};
}

// Reduce modulo a monic modulus of degree d; result has exactly d entries.
template <class Ops>
std::vector<typename Ops::T> raw_reduce(const Ops& ops, std::vector<typename Ops::T> a,
                                        const std::vector<typename Ops::T>& mod) {
  const std::size_t d = mod.size() - 1;
  for (std::size_t i = a.size(); i-- > d;) {
    if (ops.is_zero(a[i])) continue;
    const auto c = a[i];
    for (std::size_t j = 0; j <= d; ++j) a[i - d + j] = ops.sub(a[i - d + j], ops.mul(c, mod[j]));
  }
  a.resize(d, ops.zero());
  return a;
}

template <class Ops>
std::vector<typename Ops::T> raw_inverse_mod(const Ops& ops, std::vector<typename Ops::T> a,
                                             const std::vector<typename Ops::T>& mod) {
  using T = typename Ops::T;
  raw_trim(ops, a);
  if (a.empty()) throw Error(ErrorCode::DivisionByZero, "inverse of 0 in extension field");
  // Extended Euclid: invariant s * a == r (mod modulus).
  std::vector<T> r0 = mod, r1 = a;
  std::vector<T> s0, s1{ops.one()};
  raw_trim(ops, r0);
  while (!r1.empty()) {
    auto [q, r] = raw_divrem(ops, r0, r1);
    auto s = raw_sub(ops, s0, raw_mul(ops, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.size() != 1) throw Error(ErrorCode::NotIrreducible, "extension modulus is not irreducible");
  const T c = ops.inv(r0[0]);
  for (auto& v : s0) v = ops.mul(v, c);
  return raw_reduce(ops, s0, mod);
}

}  // namespace detail

/// Handle to an immutable field description.
class Field {
 public:
  using Kind = detail::FieldKind;

  static Field rationals() {
    static const auto data = std::make_shared<const detail::FieldData>();
    return Field(data);
  }

  /// F_p; p is checked for primality by trial division and must not exceed 2^31.
  static Field prime(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 31U)) throw Error(ErrorCode::InvalidArgument, "prime exceeds 2^31");
    if (!detail::is_prime_u64(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    auto d = std::make_shared<detail::FieldData>();
    d->kind = Kind::PrimeField;
    d->p = p;
    return Field(std::move(d));
  }

  /// base[t]/(modulus) without an irreducibility check; see make_extension in poly.hpp.
  static Field extension_unchecked(const Field& base, const std::vector<Scalar>& modulus);

  Kind kind() const { return data_->kind; }
  std::uint64_t characteristic() const { return data_->p; }
  bool is_finite() const { return data_->p != 0; }
  std::size_t degree() const { return data_->degree; }
  bool is_extension() const { return data_->kind == Kind::Extension; }

  Field base() const {
    if (!is_extension()) return *this;
    return data_->base_kind == Kind::Rationals ? rationals() : prime(data_->p);
  }

  /// Number of elements, when finite and representable.
  std::optional<std::uint64_t> order() const {
    if (!is_finite()) return std::nullopt;
    std::uint64_t q = 1;
    for (std::size_t i = 0; i < degree(); ++i) {
      if (q > UINT64_MAX / data_->p) return std::nullopt;
      q *= data_->p;
    }
    return q;
  }

  std::vector<Scalar> modulus() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;
  /// The class of t in base[t]/(m).
  Scalar generator() const;
  /// Image of a base-field element in this field (identity when the fields agree).
  Scalar embed(const Scalar& base_elem) const;
  /// Enumeration of a finite field: index i <-> element, digits base p.
  Scalar element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Scalar& a) const;
  std::vector<Scalar> elements() const;
  Scalar random(std::mt19937_64& rng) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    if (a.data_ == b.data_) return true;
    const auto& x = *a.data_;
    const auto& y = *b.data_;
    return x.kind == y.kind && x.p == y.p && x.base_kind == y.base_kind && x.degree == y.degree &&
           x.mod_fp == y.mod_fp && x.mod_q == y.mod_q;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  const detail::FieldData& data() const { return *data_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : data_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class Scalar {
 public:
  using Value = std::variant<std::uint64_t, mpq_class, detail::FpVec, detail::QVec>;

  Scalar(Field f, Value v) : field_(std::move(f)), v_(std::move(v)) {}

  const Field& field() const { return field_; }
  const Value& value() const { return v_; }

  bool is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, std::uint64_t>) {
            return v == 0;
          } else if constexpr (std::is_same_v<V, mpq_class>) {
            return sgn(v) == 0;
          } else if constexpr (std::is_same_v<V, detail::FpVec>) {
            for (auto c : v)
              if (c != 0) return false;
            return true;
          } else {
            for (const auto& c : v)
              if (sgn(c) != 0) return false;
            return true;
          }
        },
        v_);
  }
  bool is_one() const { return *this == field_.one(); }

  /// Rational value (Q only).
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  /// Residue in [0, p) (prime fields only).
  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  /// Coefficients over the base field, low degree first (extensions only).
  std::vector<Scalar> coefficients() const;

  Scalar operator+(const Scalar& o) const { return binary(o, Op::Add); }
  Scalar operator-(const Scalar& o) const { return binary(o, Op::Sub); }
  Scalar operator*(const Scalar& o) const { return binary(o, Op::Mul); }
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }
  Scalar operator-() const { return field_.zero() - *this; }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inv() const {
    const auto& d = field_.data();
    switch (d.kind) {
      case Field::Kind::Rationals: return {field_, detail::QOps{}.inv(rational())};
      case Field::Kind::PrimeField: return {field_, detail::FpOps{d.p}.inv(residue())};
      case Field::Kind::Extension:
        if (d.base_kind == Field::Kind::PrimeField) {
          return {field_, detail::raw_inverse_mod(detail::FpOps{d.p}, std::get<detail::FpVec>(v_), d.mod_fp)};
        }
        return {field_, detail::raw_inverse_mod(detail::QOps{}, std::get<detail::QVec>(v_), d.mod_q)};
    }
    return *this;
  }

  Scalar pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    return pow(mpz_class(static_cast<long>(e)));
  }
  Scalar pow(mpz_class e) const {
    if (sgn(e) < 0) return inv().pow(mpz_class(-e));
    Scalar result = field_.one();
    Scalar base = *this;
    while (sgn(e) > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string to_string() const;

  /// True when printing needs parentheses as a coefficient (more than one term).
  bool is_compound() const {
    if (!field_.is_extension()) return false;
    int nonzero = 0;
    for (const auto& c : coefficients())
      if (!c.is_zero()) ++nonzero;
    return nonzero > 1;
  }
  /// True for negative rationals, and for single-term extension elements with a negative
  /// rational coefficient; used to print " - " instead of " + -".
  bool is_negative() const {
    if (field_.kind() == Field::Kind::Rationals) return sgn(rational()) < 0;
    if (!field_.is_extension() || is_compound()) return false;
    for (const auto& c : coefficients())
      if (!c.is_zero()) return c.is_negative();
    return false;
  }

 private:
  enum class Op { Add, Sub, Mul };

  template <class Ops, class T>
  static T apply(const Ops& ops, Op op, const T& a, const T& b) {
    switch (op) {
      case Op::Add: return ops.add(a, b);
      case Op::Sub: return ops.sub(a, b);
      case Op::Mul: return ops.mul(a, b);
    }
    return a;
  }

  template <class Ops, class T>
  static std::vector<T> apply_ext(const Ops& ops, Op op, const std::vector<T>& a, const std::vector<T>& b,
                                  const std::vector<T>& mod) {
    if (op == Op::Mul) return detail::raw_reduce(ops, detail::raw_mul(ops, a, b), mod);
    std::vector<T> out(a.size(), ops.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = apply(ops, op, a[i], b[i]);
    return out;
  }

  Scalar binary(const Scalar& o, Op op) const {
    if (field_ != o.field_) {
      throw Error(ErrorCode::MixedContexts, field_.to_string() + " vs " + o.field_.to_string());
    }
    const auto& d = field_.data();
    switch (d.kind) {
      case Field::Kind::Rationals: return {field_, apply(detail::QOps{}, op, rational(), o.rational())};
      case Field::Kind::PrimeField: return {field_, apply(detail::FpOps{d.p}, op, residue(), o.residue())};
      case Field::Kind::Extension:
        if (d.base_kind == Field::Kind::PrimeField) {
          return {field_, apply_ext(detail::FpOps{d.p}, op, std::get<detail::FpVec>(v_),
                                    std::get<detail::FpVec>(o.v_), d.mod_fp)};
        }
        return {field_, apply_ext(detail::QOps{}, op, std::get<detail::QVec>(v_), std::get<detail::QVec>(o.v_),
                                  d.mod_q)};
    }
    return *this;
  }

  Field field_;
  Value v_;
};

/// a^p == a, i.e. a lies in the prime field.
inline bool frobenius_fixed(const Scalar& a) {
  const auto p = a.field().characteristic();
  if (p == 0) throw Error(ErrorCode::CharacteristicZero, "frobenius_fixed needs characteristic p");
  return a.pow(static_cast<long long>(p)) == a;
}

namespace detail {

// Shared term printer: terms are (monomial text, coefficient), highest first.
inline std::string format_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : terms) {
    Scalar c = coeff;
    bool negative = c.is_negative();
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += c.is_compound() ? "(" + c.to_string() + ")" : c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.is_compound() ? "(" + c.to_string() + ")" : c.to_string();
      out += "*" + mono;
    }
  }
  return out;
}

inline std::string power_text(const std::string& var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

}  // namespace detail

inline Field Field::extension_unchecked(const Field& base, const std::vector<Scalar>& modulus) {
  if (base.is_extension()) throw Error(ErrorCode::InvalidArgument, "extensions are one level deep");
  if (modulus.size() < 2) throw Error(ErrorCode::ConstantPolynomial, "extension modulus must have degree >= 1");
  const Scalar lead_inv = modulus.back().inv();
  auto d = std::make_shared<detail::FieldData>();
  d->kind = Kind::Extension;
  d->p = base.characteristic();
  d->base_kind = base.kind();
  d->degree = modulus.size() - 1;
  for (const auto& c : modulus) {
    if (c.field() != base) throw Error(ErrorCode::MixedContexts, "modulus coefficients must lie in the base field");
    const Scalar m = c * lead_inv;
    if (base.kind() == Kind::PrimeField) {
      d->mod_fp.push_back(m.residue());
    } else {
      d->mod_q.push_back(m.rational());
    }
  }
  return Field(std::move(d));
}

inline std::vector<Scalar> Field::modulus() const {
  std::vector<Scalar> out;
  const Field b = base();
  if (!is_extension()) return out;
  for (std::size_t i = 0; i <= degree(); ++i) {
    if (data_->base_kind == Kind::PrimeField) {
      out.emplace_back(b, data_->mod_fp[i]);
    } else {
      out.emplace_back(b, data_->mod_q[i]);
    }
  }
  return out;
}

inline Scalar Field::zero() const { return from_int(0); }
inline Scalar Field::one() const { return from_int(1); }
inline Scalar Field::from_int(long long v) const { return from_mpz(mpz_class(static_cast<long>(v))); }

inline Scalar Field::from_mpz(const mpz_class& v) const { return from_rational(mpq_class(v)); }

inline Scalar Field::from_rational(const mpq_class& v) const {
  switch (kind()) {
    case Kind::Rationals: return {*this, v};
    case Kind::PrimeField: {
      const mpz_class p(static_cast<unsigned long>(data_->p));
      mpz_class num = v.get_num() % p;
      mpz_class den = v.get_den() % p;
      if (num < 0) num += p;
      if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes mod " + std::to_string(data_->p));
      detail::FpOps ops{data_->p};
      return {*this, ops.mul(num.get_ui(), ops.inv(den.get_ui()))};
    }
    case Kind::Extension: return embed(base().from_rational(v));
  }
  return {*this, v};
}

inline Scalar Field::generator() const {
  if (!is_extension()) throw Error(ErrorCode::InvalidArgument, "generator t exists only in extension fields");
  if (degree() == 1) {
    // t is the root of a linear modulus t + m0.
    return -embed(modulus()[0]);
  }
  if (data_->base_kind == Kind::PrimeField) {
    detail::FpVec v(degree(), 0);
    v[1] = 1;
    return {*this, v};
  }
  detail::QVec v(degree(), mpq_class(0));
  v[1] = 1;
  return {*this, v};
}

inline Scalar Field::embed(const Scalar& base_elem) const {
  if (base_elem.field() == *this) return base_elem;
  if (!is_extension() || base_elem.field() != base()) {
    throw Error(ErrorCode::MixedContexts, "cannot embed " + base_elem.field().to_string() + " into " + to_string());
  }
  if (data_->base_kind == Kind::PrimeField) {
    detail::FpVec v(degree(), 0);
    v[0] = base_elem.residue();
    return {*this, v};
  }
  detail::QVec v(degree(), mpq_class(0));
  v[0] = base_elem.rational();
  return {*this, v};
}

inline Scalar Field::element_at(std::uint64_t index) const {
  if (!is_finite()) throw Error(ErrorCode::InvalidArgument, "element_at needs a finite field");
  const std::uint64_t p = data_->p;
  if (!is_extension()) return {*this, index % p};
  detail::FpVec v(degree(), 0);
  for (std::size_t i = 0; i < degree(); ++i) {
    v[i] = index % p;
    index /= p;
  }
  return {*this, v};
}

inline std::uint64_t Field::index_of(const Scalar& a) const {
  if (!is_finite()) throw Error(ErrorCode::InvalidArgument, "index_of needs a finite field");
  if (!is_extension()) return a.residue();
  const auto& v = std::get<detail::FpVec>(a.value());
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * data_->p + v[i];
  return idx;
}

inline std::vector<Scalar> Field::elements() const {
  const auto q = order();
  if (!q || *q > (std::uint64_t{1} << 24U)) throw Error(ErrorCode::FieldTooLarge, "cannot enumerate " + to_string());
  std::vector<Scalar> out;
  out.reserve(*q);
  for (std::uint64_t i = 0; i < *q; ++i) out.push_back(element_at(i));
  return out;
}

inline Scalar Field::random(std::mt19937_64& rng) const {
  if (is_finite()) {
    const auto q = order();
    std::uniform_int_distribution<std::uint64_t> dist(0, q ? *q - 1 : UINT64_MAX);
    return element_at(dist(rng));
  }
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  auto draw = [&] {
    mpq_class v(num(rng), static_cast<unsigned long>(den(rng)));
    v.canonicalize();
    return v;
  };
  if (!is_extension()) return {*this, draw()};
  detail::QVec v(degree());
  for (auto& c : v) c = draw();
  return {*this, v};
}

inline std::string Field::to_string() const {
  switch (kind()) {
    case Kind::Rationals: return "q";
    case Kind::PrimeField: return "fp:" + std::to_string(data_->p);
    case Kind::Extension: {
      std::vector<std::pair<std::string, Scalar>> terms;
      const auto m = modulus();
      for (std::size_t i = m.size(); i-- > 0;) {
        if (!m[i].is_zero()) terms.emplace_back(detail::power_text("t", i), m[i]);
      }
      return base().to_string() + "[" + detail::format_terms(terms) + "]";
    }
  }
  return "?";
}

inline std::vector<Scalar> Scalar::coefficients() const {
  std::vector<Scalar> out;
  const Field b = field_.base();
  if (const auto* fp = std::get_if<detail::FpVec>(&v_)) {
    for (auto c : *fp) out.emplace_back(b, c);
  } else if (const auto* q = std::get_if<detail::QVec>(&v_)) {
    for (const auto& c : *q) out.emplace_back(b, c);
  } else {
    out.push_back(*this);
  }
  return out;
}

inline std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint64_t>(&v_)) return std::to_string(*r);
  if (const auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  std::vector<std::pair<std::string, Scalar>> terms;
  const auto cs = coefficients();
  for (std::size_t i = cs.size(); i-- > 0;) {
    if (!cs[i].is_zero()) terms.emplace_back(detail::power_text("t", i), cs[i]);
  }
  return detail::format_terms(terms);
}

}  // namespace ahlib

#pragma once

// Dense univariate polynomials over a Field.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahlib/scalar.hpp"

namespace ahlib {

enum class Tri { Yes, No, Unknown };

inline std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "Yes";
    case Tri::No: return "No";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<Scalar> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_) {
      if (c.field() != field_) throw Error(ErrorCode::MixedContexts, "coefficient outside polynomial field");
    }
    trim();
  }

  static Poly constant(const Scalar& c) { return Poly(c.field(), {c}); }
  static Poly monomial(const Scalar& c, std::size_t e) {
    std::vector<Scalar> v(e + 1, c.field().zero());
    v[e] = c;
    return Poly(c.field(), std::move(v));
  }
  static Poly x(const Field& f) { return monomial(f.one(), 1); }
  /// Integer coefficients, lowest degree first.
  static Poly from_ints(const Field& f, const std::vector<long long>& coeffs) {
    std::vector<Scalar> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(f.from_int(c));
    return Poly(f, std::move(v));
  }

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Scalar leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Poly monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
  }

  Poly operator+(const Poly& o) const {
    check_same(o);
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), field_.zero());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(field_, std::move(v));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator-() const {
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(-c);
    return Poly(field_, std::move(v));
  }
  Poly operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(v));
  }
  Poly operator*(const Scalar& s) const {
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c * s);
    return Poly(field_, std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly result = constant(field_.one());
    Poly base = *this;
    while (e > 0) {
      if (e & 1U) result *= base;
      base *= base;
      e >>= 1U;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// k-th formal derivative.
  Poly derivative(unsigned k = 1) const {
    Poly r = *this;
    for (unsigned i = 0; i < k && !r.is_zero(); ++i) {
      std::vector<Scalar> v;
      for (std::size_t e = 1; e < r.c_.size(); ++e) v.push_back(r.c_[e] * field_.from_int(static_cast<long long>(e)));
      r = Poly(field_, std::move(v));
    }
    return r;
  }

  /// Digit-wise falling-factorial derivative: x^l -> prod_i l_i (l_i - 1) ... (l_i - k_i + 1) x^(l-k),
  /// with l_i, k_i the base-p digits of l and k.
  Poly p_adic_derivative(std::uint64_t k) const {
    const std::uint64_t p = field_.characteristic();
    if (p == 0) throw Error(ErrorCode::CharacteristicZero, "p-adic derivative needs characteristic p");
    if (k == 0) return *this;
    std::vector<Scalar> v;
    for (std::size_t l = k; l < c_.size(); ++l) {
      if (c_[l].is_zero()) continue;
      if (v.size() < l - k + 1) v.resize(l - k + 1, field_.zero());
      v[l - k] = c_[l] * field_.from_mpz(digit_falling_product(l, k, p));
    }
    return Poly(field_, std::move(v));
  }

  /// h^[k] / prod_i k_i!, the coefficient used in Taylor-type expansions in characteristic p.
  /// In characteristic 0 this is h^(k) / k!.
  Poly divided_derivative(std::uint64_t k) const {
    const std::uint64_t p = field_.characteristic();
    if (p == 0) {
      mpz_class fact = 1;
      for (std::uint64_t i = 2; i <= k; ++i) fact *= static_cast<unsigned long>(i);
      return derivative(static_cast<unsigned>(k)) * field_.from_mpz(fact).inv();
    }
    mpz_class digit_fact = 1;
    for (std::uint64_t r = k; r > 0; r /= p) {
      for (std::uint64_t i = 2; i <= r % p; ++i) digit_fact *= static_cast<unsigned long>(i);
    }
    return p_adic_derivative(k) * field_.from_mpz(digit_fact).inv();
  }

  /// Horner evaluation; `a` may live in an extension of this polynomial's field.
  Scalar evaluate(const Scalar& a) const {
    const Field& target = a.field();
    if (target != field_ && !(target.is_extension() && target.base() == field_)) {
      throw Error(ErrorCode::MixedContexts, "cannot evaluate over " + field_.to_string() + " at an element of " +
                                                target.to_string());
    }
    Scalar acc = target.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + target.embed(c_[i]);
    return acc;
  }

  /// Every nonzero coefficient sits at an exponent divisible by p.
  bool in_xp_subring() const {
    const std::uint64_t p = field_.characteristic();
    if (p == 0) throw Error(ErrorCode::CharacteristicZero, "F[x^p] membership needs characteristic p");
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (!c_[e].is_zero() && e % p != 0) return false;
    }
    return true;
  }

  std::string to_string(const std::string& var = "x") const {
    std::vector<std::pair<std::string, Scalar>> terms;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (!c_[i].is_zero()) terms.emplace_back(detail::power_text(var, i), c_[i]);
    }
    return detail::format_terms(terms);
  }

 private:
  static mpz_class digit_falling_product(std::uint64_t l, std::uint64_t k, std::uint64_t p) {
    mpz_class prod = 1;
    while (k > 0) {
      const std::uint64_t li = l % p;
      const std::uint64_t ki = k % p;
      if (ki > li) return 0;
      for (std::uint64_t i = 0; i < ki; ++i) prod *= static_cast<unsigned long>(li - i);
      l /= p;
      k /= p;
    }
    return prod;
  }

  void check_same(const Poly& o) const {
    if (field_ != o.field_) throw Error(ErrorCode::MixedContexts, "polynomials over different fields");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field field_;
  std::vector<Scalar> c_;
};

inline Poly operator*(const Scalar& s, const Poly& p) { return p * s; }

/// a = q * b + r with deg r < deg b.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.field() != b.field()) throw Error(ErrorCode::MixedContexts, "polynomials over different fields");
  const Field& f = a.field();
  std::vector<Scalar> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size()) return {Poly(f), a};
  std::vector<Scalar> q(r.size() - bc.size() + 1, f.zero());
  const Scalar lead_inv = b.leading().inv();
  for (std::size_t i = r.size(); i-- >= bc.size();) {
    if (r[i].is_zero()) continue;
    const Scalar c = r[i] * lead_inv;
    const std::size_t shift = i + 1 - bc.size();
    q[shift] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= c * bc[j];
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

inline bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

/// Monic gcd (zero when both inputs vanish).
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Inverse of a modulo m; throws DivisionByZero when gcd(a, m) != 1.
inline Poly inverse_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a % m;
  Poly s0(m.field()), s1 = Poly::constant(m.field().one());
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::DivisionByZero, "residue is not invertible modulo " + m.to_string());
  return (s0 * r0.leading().inv()) % m;
}

/// Monic polynomial of the given degree over a finite field, indexed by its lower coefficients.
inline Poly monic_poly_at(const Field& f, std::size_t degree, std::uint64_t index) {
  const std::uint64_t q = *f.order();
  std::vector<Scalar> v;
  v.reserve(degree + 1);
  for (std::size_t i = 0; i < degree; ++i) {
    v.push_back(f.element_at(index % q));
    index /= q;
  }
  v.push_back(f.one());
  return Poly(f, std::move(v));
}

namespace detail {

inline constexpr std::uint64_t kTrialDivisionBudget = std::uint64_t{1} << 24U;

// Number of monic polynomials of degree d over F_q, or nullopt above the budget.
inline std::optional<std::uint64_t> monic_count(const Field& f, std::size_t d) {
  const auto q = f.order();
  if (!q) return std::nullopt;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > kTrialDivisionBudget / *q) return std::nullopt;
    n *= *q;
  }
  return n;
}

inline mpz_class abs_mpz(const mpz_class& a) { return a < 0 ? mpz_class(-a) : a; }

// Positive divisors by trial division; nullopt when |n| is too large to enumerate.
inline std::optional<std::vector<mpz_class>> divisors(const mpz_class& n) {
  const mpz_class a = abs_mpz(n);
  if (a > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      small.push_back(d);
      if (d * d != a) large.push_back(a / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Distinct rational roots of a polynomial over Q (nullopt when the coefficients are too
/// large for divisor enumeration).
inline std::optional<std::vector<mpq_class>> rational_roots(const Poly& f) {
  if (f.field().kind() != Field::Kind::Rationals) throw Error(ErrorCode::InvalidArgument, "rational_roots needs Q");
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has every root");
  std::vector<mpq_class> roots;
  Poly g = f;
  if (g.coeff(0).is_zero()) {
    roots.emplace_back(0);
    while (g.coeff(0).is_zero()) g = divrem(g, Poly::x(f.field())).first;
  }
  if (g.degree() <= 0) return roots;
  mpz_class lcm = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  const mpz_class a0 = mpz_class(g.coeff(0).rational() * lcm);
  const mpz_class an = mpz_class(g.leading().rational() * lcm);
  const auto num_divs = detail::divisors(a0);
  const auto den_divs = detail::divisors(an);
  if (!num_divs || !den_divs) return std::nullopt;
  for (const auto& u : *num_divs) {
    for (const auto& v : *den_divs) {
      for (int sign : {1, -1}) {
        mpq_class cand(sign * u, v);
        cand.canonicalize();
        if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
        if (g.evaluate(f.field().from_rational(cand)).is_zero()) roots.push_back(cand);
      }
    }
  }
  return roots;
}

/// Exhaustive over finite fields (trial division by every monic polynomial of degree at most
/// deg/2); over Q exact up to degree 3 via the rational root test, Unknown above unless a
/// rational root is found. Over extensions of Q only degree 1 is decided.
inline Tri is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw Error(ErrorCode::ConstantPolynomial, "irreducibility of a constant");
  if (f.degree() == 1) return Tri::Yes;
  const Field& field = f.field();
  if (field.is_finite()) {
    for (std::size_t d = 1; d <= static_cast<std::size_t>(f.degree()) / 2; ++d) {
      const auto count = detail::monic_count(field, d);
      if (!count) return Tri::Unknown;
      for (std::uint64_t i = 0; i < *count; ++i) {
        if (divides(monic_poly_at(field, d, i), f)) return Tri::No;
      }
    }
    return Tri::Yes;
  }
  if (field.is_extension()) return Tri::Unknown;
  const auto roots = rational_roots(f);
  if (!roots) return Tri::Unknown;
  if (!roots->empty()) return Tri::No;
  return f.degree() <= 3 ? Tri::Yes : Tri::Unknown;
}

struct Factorization {
  Scalar unit;
  std::vector<std::pair<Poly, int>> factors;  // monic primes with multiplicity

  Poly product() const {
    Poly p = Poly::constant(unit);
    for (const auto& [f, m] : factors) p *= f.pow(static_cast<unsigned>(m));
    return p;
  }
};

/// Complete factorisation into monic primes. Finite fields: trial division in increasing
/// degree. Q: rational roots, then a residual factor of degree at most 3.
inline Factorization factor_into_primes(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  const Field& field = f.field();
  Factorization out{f.leading(), {}};
  Poly rest = f.monic();
  auto strip = [&](Poly g) {
    int m = 0;
    while (rest.degree() >= g.degree()) {
      auto [q, r] = divrem(rest, g);
      if (!r.is_zero()) break;
      rest = q;
      ++m;
    }
    if (m > 0) out.factors.emplace_back(g, m);
  };
  if (field.is_finite()) {
    for (std::size_t d = 1; 2 * d <= static_cast<std::size_t>(std::max(rest.degree(), 0)); ++d) {
      const auto count = detail::monic_count(field, d);
      if (!count) throw Error(ErrorCode::FactorizationOutOfScope, "trial division budget exceeded");
      for (std::uint64_t i = 0; i < *count && 2 * d <= static_cast<std::size_t>(rest.degree()); ++i) {
        strip(monic_poly_at(field, d, i));
      }
    }
    if (rest.degree() >= 1) strip(rest);
    return out;
  }
  if (field.is_extension()) {
    if (rest.degree() <= 1) {
      if (rest.degree() == 1) strip(rest);
      return out;
    }
    throw Error(ErrorCode::FactorizationOutOfScope, "factorisation over extensions of Q is not supported");
  }
  const auto roots = rational_roots(rest);
  if (!roots) throw Error(ErrorCode::FactorizationOutOfScope, "coefficients too large for the rational root test");
  std::vector<mpq_class> sorted = *roots;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& r : sorted) strip(Poly(field, {field.from_rational(-r), field.one()}));
  if (rest.degree() > 3) throw Error(ErrorCode::FactorizationOutOfScope, "residual factor " + rest.to_string());
  if (rest.degree() >= 1) strip(rest);
  return out;
}

/// base[t]/(modulus), after checking the modulus is irreducible.
inline Field make_extension(const Poly& modulus) {
  if (is_irreducible(modulus) != Tri::Yes) {
    throw Error(ErrorCode::NotIrreducible, modulus.to_string("t") + " is not known to be irreducible");
  }
  return Field::extension_unchecked(modulus.field(), modulus.coeffs());
}

/// Residue of r modulo the extension modulus, as an element of the extension field.
inline Scalar residue_in(const Field& ext, const Poly& r) {
  Scalar t = ext.generator();
  Scalar acc = ext.zero();
  const auto& c = r.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + ext.embed(c[i]);
  return acc;
}

/// Inverse of residue_in: the unique polynomial of degree < deg(modulus) representing a.
inline Poly lift_residue(const Scalar& a) {
  const Field base = a.field().base();
  if (!a.field().is_extension()) return Poly::constant(a);
  return Poly(base, a.coefficients());
}

}  // namespace ahlib

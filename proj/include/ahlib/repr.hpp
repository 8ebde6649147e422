#pragma once

// Finite-dimensional A_h-modules as matrix pairs (X, Y) acting on coordinate columns, and the
// induced module U(m) = A_h (x) D/m held as finitely supported maps y-degree -> residue mod f.

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ahlib/ahalg.hpp"
#include "ahlib/linalg.hpp"

namespace ahlib {

namespace provenance {

struct OneDim {
  Scalar lambda;
  Scalar mu;
};
struct NModule {
  Scalar lambda;
  Poly q;
  unsigned n;
};
/// L(m, g) for m = D f; g holds g_0..g_{n-1} of y^n - sum_j y^j g_j.
struct LFactor {
  Poly f;
  std::vector<Poly> g;
  Tri g_prime;
};
struct LZBeta {
  Scalar lambda;
  Scalar beta;
};
struct WeylRestrict {};
struct Custom {
  std::string label;
};

}  // namespace provenance

using Provenance = std::variant<provenance::OneDim, provenance::NModule, provenance::LFactor, provenance::LZBeta,
                                provenance::WeylRestrict, provenance::Custom>;

inline std::string provenance_kind(const Provenance& p) {
  static const char* names[] = {"OneDim", "NModule", "LFactor", "LZBeta", "WeylRestrict", "Custom"};
  return names[p.index()];
}

class FinModule {
 public:
  FinModule(AhContext ctx, Matrix x, Matrix y, Provenance prov)
      : ctx_(std::move(ctx)), x_(std::move(x)), y_(std::move(y)), prov_(std::move(prov)) {
    if (x_.rows() != x_.cols() || y_.rows() != y_.cols() || x_.rows() != y_.rows()) {
      throw Error(ErrorCode::InvalidArgument, "X and Y must be square of equal size");
    }
    if (x_.rows() == 0) throw Error(ErrorCode::InvalidArgument, "modules have positive dimension");
    if (x_.field() != ctx_.field() || y_.field() != ctx_.field()) {
      throw Error(ErrorCode::MixedContexts, "matrices over a different field than the algebra");
    }
  }

  const AhContext& context() const { return ctx_; }
  const Field& field() const { return ctx_.field(); }
  std::size_t dim() const { return x_.rows(); }
  const Matrix& X() const { return x_; }
  const Matrix& Y() const { return y_; }
  const Provenance& provenance() const { return prov_; }

  /// Matrix of x^m y^n.
  Matrix monomial_action(unsigned m, unsigned n) const { return x_.pow(m) * y_.pow(n); }

  /// Matrix of an arbitrary element.
  Matrix action(const AhElement& a) const {
    Matrix out(field(), dim(), dim());
    for (const auto& [mono, c] : a.terms()) out = out + monomial_action(mono.first, mono.second) * c;
    return out;
  }

 private:
  AhContext ctx_;
  Matrix x_;
  Matrix y_;
  Provenance prov_;
};

/// YX - XY == h(X).
inline bool verify_relation(const FinModule& m) {
  return m.Y() * m.X() - m.X() * m.Y() == evaluate(m.context().h(), m.X());
}

namespace detail {

inline FinModule checked(FinModule m) {
  if (!verify_relation(m)) throw Error(ErrorCode::RelationViolated, "constructed matrices violate YX - XY = h(X)");
  return m;
}

inline void require_base_scalar(const AhContext& ctx, const Scalar& s, const char* name) {
  if (s.field() != ctx.field()) throw Error(ErrorCode::MixedContexts, std::string(name) + " must lie in the base field");
}

}  // namespace detail

/// Arbitrary matrix pair; the relation is not enforced (see verify_relation).
inline FinModule custom_module(const AhContext& ctx, Matrix x, Matrix y, std::string label = "custom") {
  return FinModule(ctx, std::move(x), std::move(y), provenance::Custom{std::move(label)});
}

/// V_{lambda,mu}: x acts by lambda, y by mu; needs h(lambda) = 0.
inline FinModule one_dim(const AhContext& ctx, const Scalar& lambda, const Scalar& mu) {
  detail::require_base_scalar(ctx, lambda, "lambda");
  detail::require_base_scalar(ctx, mu, "mu");
  if (!ctx.h().evaluate(lambda).is_zero()) {
    throw Error(ErrorCode::LambdaNotRootOfH, "h(" + lambda.to_string() + ") != 0");
  }
  Matrix x(ctx.field(), 1, 1), y(ctx.field(), 1, 1);
  x(0, 0) = lambda;
  y(0, 0) = mu;
  return detail::checked(FinModule(ctx, x, y, provenance::OneDim{lambda, mu}));
}

/// N(m^{n+1}, q) for m = D(x - lambda), h(lambda) = 0, on the basis v_0..v_n with
///   x.v_j = lambda v_j + v_{j-1},
///   y.v_j = q.v_j + (n - j) sum_{l <= j} eta_{j+1-l} v_l,
/// where eta_k and q.v_j use the divided derivatives at lambda.
inline FinModule n_module(const AhContext& ctx, const Scalar& lambda, const Poly& q, unsigned n) {
  detail::require_base_scalar(ctx, lambda, "lambda");
  if (q.field() != ctx.field()) throw Error(ErrorCode::MixedContexts, "q must lie in F[x]");
  if (!ctx.h().evaluate(lambda).is_zero()) {
    throw Error(ErrorCode::LambdaNotRootOfH, "h(" + lambda.to_string() + ") != 0");
  }
  const Field& f = ctx.field();
  const std::size_t dim = n + 1;
  std::vector<Scalar> eta, qk;
  for (std::size_t k = 0; k <= dim; ++k) {
    eta.push_back(ctx.h().divided_derivative(k).evaluate(lambda));
    qk.push_back(q.divided_derivative(k).evaluate(lambda));
  }
  Matrix x(f, dim, dim), y(f, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    x(j, j) = lambda;
    if (j > 0) x(j - 1, j) = f.one();
    for (std::size_t k = 0; k <= j; ++k) y(j - k, j) += qk[k];
    const Scalar scale = f.from_int(static_cast<long long>(n - j));
    for (std::size_t l = 0; l <= j; ++l) y(l, j) += scale * eta[j + 1 - l];
  }
  return detail::checked(FinModule(ctx, x, y, provenance::NModule{lambda, q, n}));
}

/// Residue field D/m for m = D f: the base field when f is linear, else base[t]/(f).
inline Field residue_field(const Poly& f) {
  if (f.degree() == 1) return f.field();
  return make_extension(f);
}

/// Image of r in D/m.
inline Scalar reduce_mod(const Field& residue, const Poly& f, const Poly& r) {
  if (f.degree() == 1) return r.evaluate(-f.coeff(0) * f.leading().inv());
  return residue_in(residue, r);
}

/// y^n - sum_j g_j y^j over D/m.
inline Poly g_bar(const Poly& f, const std::vector<Poly>& g) {
  const Field residue = residue_field(f);
  std::vector<Scalar> coeffs;
  for (const auto& gj : g) coeffs.push_back(-reduce_mod(residue, f, gj));
  coeffs.push_back(residue.one());
  return Poly(residue, std::move(coeffs));
}

/// L(m, g) for m = D f, f a monic prime factor of h, on the basis y^k x^l v
/// (0 <= k < n, 0 <= l < deg f), index k * deg f + l.
inline FinModule l_module_factor(const AhContext& ctx, Poly f, const std::vector<Poly>& g) {
  if (f.field() != ctx.field()) throw Error(ErrorCode::MixedContexts, "f must lie in F[x]");
  if (f.degree() < 1) throw Error(ErrorCode::FNotFactorOfH, "f must be nonconstant");
  f = f.monic();
  if (is_irreducible(f) != Tri::Yes) throw Error(ErrorCode::FNotFactorOfH, f.to_string() + " is not a known prime");
  if (!divides(f, ctx.h())) throw Error(ErrorCode::FNotFactorOfH, f.to_string() + " does not divide h");
  if (g.empty()) throw Error(ErrorCode::InvalidArgument, "g must have degree >= 1 in y");
  for (const auto& gj : g)
    if (gj.field() != ctx.field()) throw Error(ErrorCode::MixedContexts, "g_j must lie in F[x]");

  const Poly gbar = g_bar(f, g);
  const Tri prime = is_irreducible(gbar);
  if (prime == Tri::No) {
    std::string witness;
    if (gbar.field().is_finite()) {
      const auto fac = factor_into_primes(gbar);
      witness = " (factor " + fac.factors.front().first.to_string("y") + ")";
    }
    throw Error(ErrorCode::GNotPrime, gbar.to_string("y") + " is reducible" + witness);
  }

  const Field& F = ctx.field();
  const std::size_t d = static_cast<std::size_t>(f.degree());
  const std::size_t n = g.size();
  const std::size_t dim = d * n;
  Matrix x(F, dim, dim), y(F, dim, dim);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < d; ++l) {
      const std::size_t col = k * d + l;
      if (l + 1 < d) {
        x(k * d + l + 1, col) = F.one();
      } else {
        for (std::size_t i = 0; i < d; ++i) x(k * d + i, col) = -f.coeff(i);
      }
      if (k + 1 < n) {
        y((k + 1) * d + l, col) = F.one();
      } else {
        const Poly xl = Poly::monomial(F.one(), l);
        for (std::size_t j = 0; j < n; ++j) {
          const Poly s = (g[j] * xl) % f;
          for (std::size_t i = 0; i < d; ++i) y(j * d + i, col) += s.coeff(i);
        }
      }
    }
  }
  return detail::checked(FinModule(ctx, x, y, provenance::LFactor{f, g, prime}));
}

/// L(m, z_beta) for m = D(x - lambda), h(lambda) != 0, characteristic p: basis v_0..v_{p-1},
///   y.v_n = v_{n+1} (n < p-1),  y.v_{p-1} = (delta^p(x)/h)(lambda) v_1 + beta v_0,
///   x.v_n = sum_j (-1)^j C(n, j) delta^j(x)(lambda) v_{n-j}.
inline FinModule l_z_beta(const AhContext& ctx, const Scalar& lambda, const Scalar& beta) {
  const auto p = ctx.field().characteristic();
  if (p == 0) throw Error(ErrorCode::CharacteristicZero, "L(m, z_beta) needs characteristic p");
  detail::require_base_scalar(ctx, lambda, "lambda");
  detail::require_base_scalar(ctx, beta, "beta");
  if (ctx.h().evaluate(lambda).is_zero()) {
    throw Error(ErrorCode::HVanishesAtLambda, "h(" + lambda.to_string() + ") = 0");
  }
  const Field& F = ctx.field();
  const std::size_t dim = p;
  const Scalar c = ctx.delta_p_x_over_h().evaluate(lambda);
  std::vector<Scalar> dx;  // delta^j(x)(lambda)
  Poly d = Poly::x(F);
  for (std::size_t j = 0; j < dim; ++j) {
    dx.push_back(d.evaluate(lambda));
    d = ctx.delta(d);
  }
  Matrix x(F, dim, dim), y(F, dim, dim);
  for (std::size_t n = 0; n < dim; ++n) {
    if (n + 1 < dim) {
      y(n + 1, n) = F.one();
    } else {
      y(1 % dim, n) += c;
      y(0, n) += beta;
    }
    for (std::size_t j = 0; j <= n; ++j) {
      Scalar term = F.from_mpz(binomial(n, j)) * dx[j];
      if (j % 2 == 1) term = -term;
      x(n - j, n) += term;
    }
  }
  return detail::checked(FinModule(ctx, x, y, provenance::LZBeta{lambda, beta}));
}

/// Restriction of an A_1-module (YX - XY = I) along x -> x, y -> y h: Y_hat = Y h(X).
inline FinModule weyl_restrict(const Matrix& x, const Matrix& y, const AhContext& ctx) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw Error(ErrorCode::InvalidArgument, "X and Y must be square of equal size");
  }
  if (y * x - x * y != Matrix::identity(x.field(), x.rows())) {
    throw Error(ErrorCode::NotAWeylModule, "YX - XY != I");
  }
  return detail::checked(FinModule(ctx, x, y * evaluate(ctx.h(), x), provenance::WeylRestrict{}));
}

/// Block-diagonal direct sum.
inline FinModule direct_sum(const FinModule& a, const FinModule& b) {
  if (a.context() != b.context()) throw Error(ErrorCode::MixedContexts, "modules over different algebras");
  const std::size_t n = a.dim() + b.dim();
  Matrix x(a.field(), n, n), y(a.field(), n, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      x(i, j) = a.X()(i, j);
      y(i, j) = a.Y()(i, j);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      x(a.dim() + i, a.dim() + j) = b.X()(i, j);
      y(a.dim() + i, a.dim() + j) = b.Y()(i, j);
    }
  return FinModule(a.context(), x, y, provenance::Custom{"direct sum"});
}

// ---------------------------------------------------------------------------------------------
// Induced modules

/// Element sum_k y^k r_k u_m of U(m), m = D f, with each r_k reduced modulo f.
class InducedElement {
 public:
  InducedElement(AhContext ctx, Poly f) : ctx_(std::move(ctx)), f_(std::move(f)) {
    if (f_.field() != ctx_.field()) throw Error(ErrorCode::MixedContexts, "f must lie in F[x]");
    if (f_.degree() < 1) throw Error(ErrorCode::InvalidArgument, "m = D f needs nonconstant f");
    f_ = f_.monic();
  }

  /// u_m.
  static InducedElement generator(const AhContext& ctx, const Poly& f) {
    InducedElement v(ctx, f);
    v.add(0, Poly::constant(ctx.field().one()));
    return v;
  }
  /// y^k x^l u_m.
  static InducedElement basis(const AhContext& ctx, const Poly& f, unsigned k, unsigned l) {
    InducedElement v(ctx, f);
    v.add(k, Poly::monomial(ctx.field().one(), l));
    return v;
  }

  const AhContext& context() const { return ctx_; }
  const Poly& f() const { return f_; }
  const std::map<unsigned, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int y_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }

  Poly residue(unsigned k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Poly(ctx_.field()) : it->second;
  }

  /// Adds y^k r u_m.
  void add(unsigned k, const Poly& r) {
    Poly red = r % f_;
    auto it = terms_.find(k);
    if (it != terms_.end()) red = (red + it->second) % f_;
    if (red.is_zero()) {
      if (it != terms_.end()) terms_.erase(it);
    } else if (it != terms_.end()) {
      it->second = red;
    } else {
      terms_.emplace(k, red);
    }
  }

  InducedElement operator+(const InducedElement& o) const {
    check_same(o);
    InducedElement r = *this;
    for (const auto& [k, p] : o.terms_) r.add(k, p);
    return r;
  }
  InducedElement operator*(const Scalar& s) const {
    InducedElement r(ctx_, f_);
    for (const auto& [k, p] : terms_) r.add(k, p * s);
    return r;
  }
  InducedElement operator-(const InducedElement& o) const { return *this + o * ctx_.field().from_int(-1); }

  friend bool operator==(const InducedElement& a, const InducedElement& b) {
    return a.ctx_ == b.ctx_ && a.f_ == b.f_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const InducedElement& a, const InducedElement& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      const std::string y = detail::power_text("y", it->first);
      const Poly& r = it->second;
      std::string rs;
      if (r != Poly::constant(ctx_.field().one())) {
        const bool bare = r.degree() == 0 ? !r.coeff(0).is_negative() && !r.coeff(0).is_compound()
                                          : r.to_string().find_first_of("+- ") == std::string::npos;
        rs = (bare ? r.to_string() : "(" + r.to_string() + ")") + "*";
      }
      s += (y.empty() ? "" : y + "*") + rs + "u";
    }
    return s;
  }

  /// Coordinates on the basis y^k x^l u_m, 0 <= k <= max_k, index k * deg f + l.
  Vec coordinates(unsigned max_k) const {
    const std::size_t d = static_cast<std::size_t>(f_.degree());
    Vec v = zero_vec(ctx_.field(), (max_k + 1) * d);
    for (const auto& [k, r] : terms_) {
      if (k > max_k) throw Error(ErrorCode::InvalidArgument, "element exceeds the coordinate window");
      for (std::size_t l = 0; l < d; ++l) v[k * d + l] = r.coeff(l);
    }
    return v;
  }

 private:
  void check_same(const InducedElement& o) const {
    if (ctx_ != o.ctx_ || f_ != o.f_) throw Error(ErrorCode::MixedContexts, "elements of different induced modules");
  }

  AhContext ctx_;
  Poly f_;
  std::map<unsigned, Poly> terms_;
};

/// y . y^n r u = y^{n+1} r u.
inline InducedElement induced_act_y(const InducedElement& v) {
  InducedElement out(v.context(), v.f());
  for (const auto& [k, r] : v.terms()) out.add(k + 1, r);
  return out;
}

/// x . y^n r u = sum_j (-1)^j C(n, j) y^{n-j} delta^j(x) r u.
inline InducedElement induced_act_x(const InducedElement& v) {
  const AhContext& ctx = v.context();
  const Field& F = ctx.field();
  InducedElement out(ctx, v.f());
  std::vector<Poly> dx{Poly::x(F)};
  for (const auto& [n, r] : v.terms()) {
    while (dx.size() <= n) dx.push_back(ctx.delta(dx.back()));
    for (unsigned j = 0; j <= n; ++j) {
      if (dx[j].is_zero()) break;
      Scalar c = F.from_mpz(binomial(n, j));
      if (j % 2 == 1) c = -c;
      if (c.is_zero()) continue;
      out.add(n - j, dx[j] * r * c);
    }
  }
  return out;
}

/// r(x) . v by Horner's rule on the x-action.
inline InducedElement induced_act_poly(const Poly& r, const InducedElement& v) {
  InducedElement acc(v.context(), v.f());
  const auto& c = r.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = induced_act_x(acc) + v * c[i];
  return acc;
}

/// a . v for an arbitrary element a.
inline InducedElement induced_act(const AhElement& a, const InducedElement& v) {
  InducedElement out(v.context(), v.f());
  for (const auto& [mono, c] : a.terms()) {
    InducedElement w = v;
    for (unsigned i = 0; i < mono.second; ++i) w = induced_act_y(w);
    for (unsigned i = 0; i < mono.first; ++i) w = induced_act_x(w);
    out = out + w * c;
  }
  return out;
}

/// m = D f is delta-invariant iff f divides delta(f) = f' h.
inline bool is_delta_invariant(const AhContext& ctx, const Poly& f) { return divides(f, ctx.delta(f)); }

/// N(m, q) = D/m with x acting by multiplication and y by r -> q r + delta(r), basis x^l + m.
inline FinModule n_quotient_module(const AhContext& ctx, const Poly& f, const Poly& q) {
  if (!is_delta_invariant(ctx, f)) throw Error(ErrorCode::NotDeltaInvariant, f.to_string() + " does not divide f' h");
  const Poly fm = f.monic();
  const Field& F = ctx.field();
  const std::size_t d = static_cast<std::size_t>(fm.degree());
  Matrix x(F, d, d), y(F, d, d);
  for (std::size_t l = 0; l < d; ++l) {
    const Poly xl = Poly::monomial(F.one(), l);
    const Poly xs = (Poly::x(F) * xl) % fm;
    const Poly ys = (q * xl + ctx.delta(xl)) % fm;
    for (std::size_t i = 0; i < d; ++i) {
      x(i, l) = xs.coeff(i);
      y(i, l) = ys.coeff(i);
    }
  }
  return detail::checked(FinModule(ctx, x, y, provenance::Custom{"N(m,q)"}));
}

/// The map U(m) -> N(m, q), a u_m -> a.(1 + m); the image is the residue of degree < deg f.
inline Poly n_quotient_hom(const InducedElement& v, const Poly& q) {
  const AhContext& ctx = v.context();
  const Poly& f = v.f();
  if (!is_delta_invariant(ctx, f)) throw Error(ErrorCode::NotDeltaInvariant, f.to_string() + " does not divide f' h");
  Poly out(ctx.field());
  for (const auto& [k, r] : v.terms()) {
    Poly w = r % f;
    for (unsigned i = 0; i < k; ++i) w = (q * w + ctx.delta(w)) % f;
    out += w;
  }
  return out % f;
}

}  // namespace ahlib

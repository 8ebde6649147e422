#pragma once

// The algebra A_h = F<x, y | yx = xy + h(x)> with elements kept in the normal form
// sum c_{m,n} x^m y^n.

#include <gmpxx.h>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ahlib/linalg.hpp"
#include "ahlib/poly.hpp"

namespace ahlib {

/// Shared, immutable (F, h) pair.
class AhContext {
 public:
  explicit AhContext(const Poly& h) : data_(std::make_shared<const Data>(Data{h.field(), h})) {
    if (h.is_zero()) throw Error(ErrorCode::InvalidArgument, "h must be nonzero");
  }

  /// The Weyl algebra A_1 (h = 1) over f.
  static AhContext weyl(const Field& f) { return AhContext(Poly::constant(f.one())); }

  const Field& field() const { return data_->field; }
  const Poly& h() const { return data_->h; }

  /// delta(r) = r' h.
  Poly delta(const Poly& r) const { return r.derivative() * h(); }

  Poly delta_apply(const Poly& r, unsigned k) const {
    Poly out = r;
    for (unsigned i = 0; i < k && !out.is_zero(); ++i) out = delta(out);
    return out;
  }

  /// delta^p(x) / h, which lies in F[x^p].
  Poly delta_p_x_over_h() const {
    const auto p = field().characteristic();
    if (p == 0) throw Error(ErrorCode::CharacteristicZero, "delta^p(x)/h needs characteristic p");
    const Poly dp = delta_apply(Poly::x(field()), static_cast<unsigned>(p));
    auto [q, r] = divrem(dp, h());
    if (!r.is_zero()) throw Error(ErrorCode::DivisibilityViolated, "h does not divide delta^p(x)");
    if (!q.in_xp_subring()) throw Error(ErrorCode::DivisibilityViolated, "delta^p(x)/h is not in F[x^p]");
    return q;
  }

  friend bool operator==(const AhContext& a, const AhContext& b) {
    return a.data_ == b.data_ || (a.field() == b.field() && a.h() == b.h());
  }
  friend bool operator!=(const AhContext& a, const AhContext& b) { return !(a == b); }

 private:
  struct Data {
    Field field;
    Poly h;
  };
  std::shared_ptr<const Data> data_;
};

/// Exponent pair (x-degree, y-degree) of a normal-form monomial x^m y^n.
using Monomial = std::pair<unsigned, unsigned>;

class AhElement {
 public:
  explicit AhElement(AhContext ctx) : ctx_(std::move(ctx)) {}

  static AhElement monomial(const AhContext& ctx, unsigned m, unsigned n, const Scalar& c) {
    AhElement e(ctx);
    e.add_term(m, n, c);
    return e;
  }
  static AhElement constant(const AhContext& ctx, const Scalar& c) { return monomial(ctx, 0, 0, c); }
  static AhElement one(const AhContext& ctx) { return constant(ctx, ctx.field().one()); }
  static AhElement x(const AhContext& ctx) { return monomial(ctx, 1, 0, ctx.field().one()); }
  static AhElement y(const AhContext& ctx) { return monomial(ctx, 0, 1, ctx.field().one()); }
  static AhElement from_poly(const AhContext& ctx, const Poly& r) {
    AhElement e(ctx);
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) e.add_term(static_cast<unsigned>(i), 0, r.coeffs()[i]);
    return e;
  }

  const AhContext& context() const { return ctx_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(unsigned m, unsigned n) const {
    auto it = terms_.find({m, n});
    return it == terms_.end() ? ctx_.field().zero() : it->second;
  }

  int x_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.first));
    return d;
  }
  int y_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.second));
    return d;
  }

  void add_term(unsigned m, unsigned n, const Scalar& c) {
    if (c.field() != ctx_.field()) throw Error(ErrorCode::MixedContexts, "coefficient outside the algebra's field");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({m, n}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Coefficient of y^n as a polynomial in x (normal form x^m y^n).
  Poly x_coefficient(unsigned n) const {
    std::vector<Scalar> v;
    for (const auto& [mono, c] : terms_) {
      if (mono.second != n) continue;
      if (v.size() <= mono.first) v.resize(mono.first + 1, ctx_.field().zero());
      v[mono.first] = c;
    }
    return Poly(ctx_.field(), std::move(v));
  }

  AhElement operator+(const AhElement& o) const {
    check_same(o);
    AhElement r = *this;
    for (const auto& [mono, c] : o.terms_) r.add_term(mono.first, mono.second, c);
    return r;
  }
  AhElement operator-() const {
    AhElement r(ctx_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
  }
  AhElement operator-(const AhElement& o) const { return *this + (-o); }
  AhElement operator*(const Scalar& s) const {
    AhElement r(ctx_);
    for (const auto& [mono, c] : terms_) r.add_term(mono.first, mono.second, c * s);
    return r;
  }
  AhElement operator*(const AhElement& o) const;
  AhElement& operator+=(const AhElement& o) { return *this = *this + o; }
  AhElement& operator-=(const AhElement& o) { return *this = *this - o; }
  AhElement& operator*=(const AhElement& o) { return *this = *this * o; }

  AhElement pow(unsigned e) const {
    AhElement r = one(ctx_);
    for (unsigned i = 0; i < e; ++i) r *= *this;
    return r;
  }

  friend bool operator==(const AhElement& a, const AhElement& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AhElement& a, const AhElement& b) { return !(a == b); }

  /// Terms by descending total degree, ties by descending y-degree: "x*y^2 + 2*x^2*y + 2*x^3".
  std::vector<std::pair<Monomial, Scalar>> ordered_terms() const {
    std::vector<std::pair<Monomial, Scalar>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      const unsigned da = a.first.first + a.first.second;
      const unsigned db = b.first.first + b.first.second;
      if (da != db) return da > db;
      return a.first.second > b.first.second;
    });
    return out;
  }

  std::string to_string() const {
    std::vector<std::pair<std::string, Scalar>> parts;
    for (const auto& [mono, c] : ordered_terms()) {
      std::string text = detail::power_text("x", mono.first);
      const std::string ytext = detail::power_text("y", mono.second);
      if (!text.empty() && !ytext.empty()) text += "*";
      parts.emplace_back(text + ytext, c);
    }
    return detail::format_terms(parts);
  }

 private:
  void check_same(const AhElement& o) const {
    if (ctx_ != o.ctx_) throw Error(ErrorCode::MixedContexts, "elements of different algebras");
  }

  AhContext ctx_;
  std::map<Monomial, Scalar> terms_;
};

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Normal-form product via y^b x^c = sum_j C(b, j) delta^j(x^c) y^(b-j).
inline AhElement multiply(const AhElement& a, const AhElement& b) {
  const AhContext& ctx = a.context();
  if (ctx != b.context()) throw Error(ErrorCode::MixedContexts, "elements of different algebras");
  const Field& f = ctx.field();
  std::map<Monomial, Poly> delta_powers;  // (c, j) -> delta^j(x^c)
  auto delta_power = [&](unsigned c, unsigned j) -> const Poly& {
    auto it = delta_powers.find({c, j});
    if (it != delta_powers.end()) return it->second;
    unsigned start = j;
    while (start > 0 && delta_powers.find({c, start}) == delta_powers.end()) --start;
    Poly cur = start == 0 ? Poly::monomial(f.one(), c) : delta_powers.at({c, start});
    if (start == 0) delta_powers.emplace(Monomial{c, 0}, cur);
    for (unsigned s = start + 1; s <= j; ++s) {
      cur = ctx.delta(cur);
      delta_powers.emplace(Monomial{c, s}, cur);
    }
    return delta_powers.at({c, j});
  };

  AhElement out(ctx);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const unsigned yb = ma.second;
      const unsigned xc = mb.first;
      const Scalar cab = ca * cb;
      for (unsigned j = 0; j <= yb; ++j) {
        const Poly& d = delta_power(xc, j);
        if (d.is_zero()) break;
        const Scalar binom = f.from_mpz(binomial(yb, j));
        if (binom.is_zero()) continue;
        const Scalar scale = cab * binom;
        const auto& dc = d.coeffs();
        for (std::size_t e = 0; e < dc.size(); ++e) {
          if (dc[e].is_zero()) continue;
          out.add_term(ma.first + static_cast<unsigned>(e), yb - j + mb.second, scale * dc[e]);
        }
      }
    }
  }
  return out;
}

inline AhElement AhElement::operator*(const AhElement& o) const { return multiply(*this, o); }

inline AhElement commutator(const AhElement& a, const AhElement& b) { return a * b - b * a; }

/// Coefficients r_n with a = sum_n y^n r_n(x) (the y-left basis).
inline std::map<unsigned, Poly> y_left_form(AhElement a) {
  std::map<unsigned, Poly> out;
  const AhContext ctx = a.context();
  while (!a.is_zero()) {
    const auto n = static_cast<unsigned>(a.y_degree());
    const Poly lead = a.x_coefficient(n);
    auto [it, inserted] = out.try_emplace(n, lead);
    if (!inserted) it->second += lead;
    a -= AhElement::monomial(ctx, 0, n, ctx.field().one()) * AhElement::from_poly(ctx, lead);
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// Rebuild an element from its y-left coefficients.
inline AhElement from_y_left_form(const AhContext& ctx, const std::map<unsigned, Poly>& form) {
  AhElement a(ctx);
  for (const auto& [n, r] : form) a += AhElement::monomial(ctx, 0, n, ctx.field().one()) * AhElement::from_poly(ctx, r);
  return a;
}

namespace detail {

// Weight of y in the filtration deg x = 1, deg y = w; the associated graded ring is a domain,
// so weighted degree is additive on products.
inline unsigned y_weight(const AhContext& ctx) {
  const int d = ctx.h().degree();
  return d >= 2 ? static_cast<unsigned>(d - 1) : 1U;
}

inline int weighted_degree(const AhElement& a) {
  const unsigned w = y_weight(a.context());
  int d = -1;
  for (const auto& [mono, c] : a.terms()) d = std::max(d, static_cast<int>(mono.first + w * mono.second));
  return d;
}

inline std::vector<Monomial> weighted_window(const AhContext& ctx, int bound) {
  std::vector<Monomial> out;
  if (bound < 0) return out;
  const unsigned w = y_weight(ctx);
  for (unsigned n = 0; n * w <= static_cast<unsigned>(bound); ++n)
    for (unsigned m = 0; m + n * w <= static_cast<unsigned>(bound); ++m) out.emplace_back(m, n);
  return out;
}

// Solve sum_k c_k * images[k] = target over the coefficient space spanned by all monomials.
inline std::optional<Vec> solve_in_span(const AhContext& ctx, const std::vector<AhElement>& images,
                                        const AhElement& target) {
  std::map<Monomial, std::size_t> row_of;
  auto index = [&](const Monomial& m) {
    auto [it, inserted] = row_of.try_emplace(m, row_of.size());
    return it->second;
  };
  for (const auto& img : images)
    for (const auto& [mono, c] : img.terms()) index(mono);
  for (const auto& [mono, c] : target.terms()) index(mono);
  Matrix m(ctx.field(), row_of.size(), images.size());
  for (std::size_t k = 0; k < images.size(); ++k)
    for (const auto& [mono, c] : images[k].terms()) m(row_of.at(mono), k) = c;
  Vec rhs = zero_vec(ctx.field(), row_of.size());
  for (const auto& [mono, c] : target.terms()) rhs[row_of.at(mono)] = c;
  return solve(m, rhs);
}

inline std::optional<AhElement> divide(const AhElement& b, const AhElement& target, bool b_on_left) {
  const AhContext& ctx = b.context();
  if (b.is_zero()) throw Error(ErrorCode::ZeroElement, "division by the zero element");
  if (target.is_zero()) return AhElement(ctx);
  const auto window = weighted_window(ctx, weighted_degree(target) - weighted_degree(b));
  if (window.empty()) return std::nullopt;
  std::vector<AhElement> images;
  images.reserve(window.size());
  for (const auto& [m, n] : window) {
    const AhElement mono = AhElement::monomial(ctx, m, n, ctx.field().one());
    images.push_back(b_on_left ? b * mono : mono * b);
  }
  const auto sol = solve_in_span(ctx, images, target);
  if (!sol) return std::nullopt;
  AhElement c(ctx);
  for (std::size_t k = 0; k < window.size(); ++k) c.add_term(window[k].first, window[k].second, (*sol)[k]);
  return c;
}

}  // namespace detail

/// c with b * c == target, if any. A_h is a domain, so the search window is exact.
inline std::optional<AhElement> left_divide(const AhElement& b, const AhElement& target) {
  return detail::divide(b, target, true);
}

/// c with c * b == target, if any.
inline std::optional<AhElement> right_divide(const AhElement& b, const AhElement& target) {
  return detail::divide(b, target, false);
}

/// z_p = y (y + h') (y + 2h') ... (y + (p-1)h'), checked against y^p - y * delta^p(x)/h.
inline AhElement make_z_p(const AhContext& ctx) {
  const auto p = ctx.field().characteristic();
  if (p == 0) throw Error(ErrorCode::CharacteristicZero, "z_p needs characteristic p");
  const Poly dh = ctx.h().derivative();
  const AhElement y = AhElement::y(ctx);
  AhElement product = y;
  for (std::uint64_t j = 1; j < p; ++j) {
    product *= y + AhElement::from_poly(ctx, dh * ctx.field().from_int(static_cast<long long>(j)));
  }
  const AhElement closed = y.pow(static_cast<unsigned>(p)) - y * AhElement::from_poly(ctx, ctx.delta_p_x_over_h());
  if (product != closed) throw Error(ErrorCode::CenterIdentityViolated, "product and closed forms of z_p differ");
  return product;
}

inline std::vector<Monomial> box_window(unsigned dx, unsigned dy) {
  std::vector<Monomial> out;
  for (unsigned n = 0; n <= dy; ++n)
    for (unsigned m = 0; m <= dx; ++m) out.emplace_back(m, n);
  return out;
}

/// Elements built from coefficient vectors over a monomial list.
inline std::vector<AhElement> elements_from_vectors(const AhContext& ctx, const std::vector<Monomial>& monos,
                                                    const std::vector<Vec>& vecs) {
  std::vector<AhElement> out;
  for (const auto& v : vecs) {
    AhElement e(ctx);
    for (std::size_t k = 0; k < monos.size(); ++k) e.add_term(monos[k].first, monos[k].second, v[k]);
    out.push_back(std::move(e));
  }
  return out;
}

/// Coefficient vector of a over a monomial list; throws when a has terms outside it.
inline Vec element_to_vector(const AhElement& a, const std::vector<Monomial>& monos) {
  Vec v = zero_vec(a.context().field(), monos.size());
  std::size_t found = 0;
  for (std::size_t k = 0; k < monos.size(); ++k) {
    auto it = a.terms().find(monos[k]);
    if (it != a.terms().end()) {
      v[k] = it->second;
      ++found;
    }
  }
  if (found != a.terms().size()) throw Error(ErrorCode::InvalidArgument, "element lies outside the window");
  return v;
}

/// Basis of the central elements with x-degree <= dx and y-degree <= dy.
inline std::vector<AhElement> centralizer_bounded(const AhContext& ctx, unsigned dx, unsigned dy) {
  const auto window = box_window(dx, dy);
  const AhElement x = AhElement::x(ctx);
  const AhElement y = AhElement::y(ctx);
  std::vector<AhElement> with_x, with_y;
  std::map<Monomial, std::size_t> rows_x, rows_y;
  for (const auto& [m, n] : window) {
    const AhElement u = AhElement::monomial(ctx, m, n, ctx.field().one());
    with_x.push_back(commutator(u, x));
    with_y.push_back(commutator(u, y));
    for (const auto& [mono, c] : with_x.back().terms()) rows_x.try_emplace(mono, rows_x.size());
    for (const auto& [mono, c] : with_y.back().terms()) rows_y.try_emplace(mono, rows_y.size());
  }
  Matrix eq(ctx.field(), rows_x.size() + rows_y.size(), window.size());
  for (std::size_t k = 0; k < window.size(); ++k) {
    for (const auto& [mono, c] : with_x[k].terms()) eq(rows_x.at(mono), k) = c;
    for (const auto& [mono, c] : with_y[k].terms()) eq(rows_x.size() + rows_y.at(mono), k) = c;
  }
  return elements_from_vectors(ctx, window, kernel(eq));
}

/// Image under A_h -> A_1, x -> x, y -> y h (the target must be the Weyl algebra over the same field).
inline AhElement embed_weyl(const AhElement& a, const AhContext& weyl) {
  const AhContext& src = a.context();
  if (weyl.field() != src.field() || weyl.h() != Poly::constant(src.field().one())) {
    throw Error(ErrorCode::MixedContexts, "target must be the Weyl algebra over the same field");
  }
  const AhElement y_hat = AhElement::y(weyl) * AhElement::from_poly(weyl, src.h());
  std::vector<AhElement> y_hat_powers{AhElement::one(weyl)};
  AhElement out(weyl);
  for (const auto& [mono, c] : a.terms()) {
    while (y_hat_powers.size() <= mono.second) y_hat_powers.push_back(y_hat_powers.back() * y_hat);
    out += AhElement::monomial(weyl, mono.first, 0, c) * y_hat_powers[mono.second];
  }
  return out;
}

/// Window check of normality: for every monomial g with x-degree <= dx and y-degree <= dy,
/// g b lies in b A_h and b g lies in A_h b.
inline bool is_normal_bounded(const AhElement& b, unsigned dx, unsigned dy) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroElement, "normality of the zero element");
  const AhContext& ctx = b.context();
  for (const auto& [m, n] : box_window(dx, dy)) {
    const AhElement g = AhElement::monomial(ctx, m, n, ctx.field().one());
    if (!left_divide(b, g * b)) return false;
    if (!right_divide(b, b * g)) return false;
  }
  return true;
}

}  // namespace ahlib

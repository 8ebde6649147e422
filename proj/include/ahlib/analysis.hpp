#pragma once

// Structural analysis of finite-dimensional modules (submodules, irreducibility, endomorphisms,
// annihilators, weight spaces), the degree-reduction procedure on induced modules, and the
// characteristic-p classification driver.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ahlib/repr.hpp"

namespace ahlib {

inline constexpr std::uint64_t kLatticeBudget = std::uint64_t{1} << 22U;
inline constexpr std::uint64_t kEndomorphismBudget = std::uint64_t{1} << 20U;
inline constexpr unsigned kRandomWitnesses = 64;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// A spanning vector of a proper submodule, an idempotent endomorphism, or a text certificate.
using Witness = std::variant<std::monostate, Vec, Matrix, std::string>;

struct Verdict {
  Tri value = Tri::Unknown;
  std::string method;  // exhaustive | theorem | dimension-one | endomorphism | witness-search | none
  Witness witness;
};

namespace detail {

/// q^n when it fits below the budget.
inline std::optional<std::uint64_t> bounded_power(const Field& f, std::size_t n, std::uint64_t budget) {
  const auto q = f.order();
  if (!q) return std::nullopt;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > budget / *q) return std::nullopt;
    total *= *q;
  }
  return total;
}

/// Vector number `index` in base |F| (little-endian digits).
inline Vec vector_at(const Field& f, std::size_t n, std::uint64_t index) {
  const std::uint64_t q = *f.order();
  Vec v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(f.element_at(index % q));
    index /= q;
  }
  return v;
}

/// Leading nonzero coordinate equals one; one representative per line.
inline bool is_normalised(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return c.is_one();
  return false;
}

inline Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

inline Matrix unflatten(const Field& f, std::size_t n, const Vec& v) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

}  // namespace detail

/// Smallest X- and Y-stable subspace containing v.
inline Subspace cyclic_submodule(const FinModule& m, const Vec& v) {
  const Field& f = m.field();
  std::vector<Vec> basis;
  Subspace span(f, m.dim());
  std::vector<Vec> queue{v};
  while (!queue.empty()) {
    Vec w = std::move(queue.back());
    queue.pop_back();
    if (span.contains(w)) continue;
    basis.push_back(w);
    span = Subspace::span(f, m.dim(), basis);
    queue.push_back(m.X() * w);
    queue.push_back(m.Y() * w);
  }
  return span;
}

struct SubmoduleLattice {
  std::vector<Subspace> members;  // sorted by dimension, then canonical key
  bool is_chain = false;

  /// Pairs (i, j) with members[i] strictly inside members[j].
  std::vector<std::pair<std::size_t, std::size_t>> containments() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        if (i != j && members[i].dim() < members[j].dim() && members[j].contains(members[i])) out.emplace_back(i, j);
    return out;
  }
};

namespace detail {

inline void require_enumerable(const FinModule& m) {
  if (!m.field().is_finite()) {
    throw Error(ErrorCode::CharacteristicZero, "exhaustive submodule search needs a finite field");
  }
  if (!bounded_power(m.field(), m.dim(), kLatticeBudget)) {
    throw Error(ErrorCode::FieldTooLarge, "|F|^dim exceeds 2^22");
  }
}

}  // namespace detail

/// Every submodule, as sums of the cyclic submodules of all nonzero vectors.
inline SubmoduleLattice submodule_lattice(const FinModule& m) {
  detail::require_enumerable(m);
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const std::uint64_t total = *detail::bounded_power(f, n, kLatticeBudget);

  std::map<std::string, Subspace> found;
  found.emplace(Subspace(f, n).key(), Subspace(f, n));
  std::vector<Subspace> cyclic;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    Vec v = detail::vector_at(f, n, idx);
    if (!detail::is_normalised(v)) continue;
    Subspace s = cyclic_submodule(m, v);
    if (found.emplace(s.key(), s).second) cyclic.push_back(s);
  }

  // Close under sums.
  std::vector<Subspace> frontier;
  for (const auto& [k, s] : found) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& a : frontier)
      for (const auto& c : cyclic) {
        Subspace s = a + c;
        if (found.emplace(s.key(), s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }

  SubmoduleLattice out;
  for (auto& [k, s] : found) out.members.push_back(s);
  std::stable_sort(out.members.begin(), out.members.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a.key() < b.key();
  });
  out.is_chain = true;
  for (std::size_t i = 0; i + 1 < out.members.size(); ++i) {
    const auto& a = out.members[i];
    const auto& b = out.members[i + 1];
    if (a.dim() == b.dim() || !b.contains(a)) {
      out.is_chain = false;
      break;
    }
  }
  return out;
}

namespace detail {

inline std::optional<Vec> proper_generator(const FinModule& m, const Vec& v) {
  if (is_zero_vec(v)) return std::nullopt;
  if (cyclic_submodule(m, v).dim() < m.dim()) return v;
  return std::nullopt;
}

}  // namespace detail

/// Irreducibility: dimension one, exhaustive search, theorem-backed provenance, then a witness
/// search on basis and seeded random vectors.
inline Verdict is_irreducible(const FinModule& m, std::uint64_t seed = kDefaultSeed) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  if (n == 1) return {Tri::Yes, "dimension-one", {}};

  if (f.is_finite()) {
    if (const auto total = detail::bounded_power(f, n, kLatticeBudget)) {
      for (std::uint64_t idx = 1; idx < *total; ++idx) {
        Vec v = detail::vector_at(f, n, idx);
        if (!detail::is_normalised(v)) continue;
        if (auto w = detail::proper_generator(m, v)) return {Tri::No, "exhaustive", *w};
      }
      return {Tri::Yes, "exhaustive", {}};
    }
  }

  if (const auto* lf = std::get_if<provenance::LFactor>(&m.provenance())) {
    if (lf->g_prime == Tri::Yes) {
      return {Tri::Yes, "theorem", std::string("g-bar prime over D/m, f = " + lf->f.to_string())};
    }
  }
  if (const auto* lz = std::get_if<provenance::LZBeta>(&m.provenance())) {
    if (!m.context().h().evaluate(lz->lambda).is_zero()) {
      return {Tri::Yes, "theorem", std::string("p-dimensional with h(lambda) != 0")};
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (auto w = detail::proper_generator(m, unit_vec(f, n, i))) return {Tri::No, "witness-search", *w};
  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < kRandomWitnesses; ++k) {
    Vec v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(f.random(rng));
    if (auto w = detail::proper_generator(m, v)) return {Tri::No, "witness-search", *w};
  }
  return {Tri::Unknown, "none", {}};
}

/// Basis of End(M) = {E : EX = XE, EY = YE}.
inline std::vector<Matrix> endomorphisms(const FinModule& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  Matrix eq(f, 2 * n * n, n * n);
  const Matrix* gens[] = {&m.X(), &m.Y()};
  for (std::size_t g = 0; g < 2; ++g) {
    const Matrix& a = *gens[g];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = g * n * n + i * n + j;
        // (EA - AE)_{ij} = sum_k E_{ik} A_{kj} - A_{ik} E_{kj}
        for (std::size_t k = 0; k < n; ++k) {
          eq(row, i * n + k) += a(k, j);
          eq(row, k * n + j) -= a(i, k);
        }
      }
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel(eq)) out.push_back(detail::unflatten(f, n, v));
  return out;
}

/// Monic minimal polynomial of a square matrix.
inline Poly minimal_polynomial(const Matrix& x) {
  const Field& f = x.field();
  std::vector<Vec> powers{detail::flatten(Matrix::identity(f, x.rows()))};
  Matrix p = x;
  for (std::size_t k = 1;; ++k) {
    const Vec target = detail::flatten(p);
    const Matrix cols = Matrix::from_columns(f, target.size(), powers);
    if (auto sol = solve(cols, target)) {
      std::vector<Scalar> c;
      for (const auto& s : *sol) c.push_back(-s);
      c.push_back(f.one());
      return Poly(f, std::move(c));
    }
    powers.push_back(target);
    p = p * x;
  }
}

namespace detail {

/// A nontrivial idempotent in F[E] when the minimal polynomial of E splits into coprime parts.
inline std::optional<Matrix> idempotent_from(const Matrix& e) {
  const Poly mp = minimal_polynomial(e);
  if (mp.degree() < 2) return std::nullopt;
  Factorization fac{mp.leading(), {}};
  try {
    fac = factor_into_primes(mp);
  } catch (const Error&) {
    return std::nullopt;
  }
  if (fac.factors.size() < 2) return std::nullopt;
  const Poly a = fac.factors.front().first.pow(static_cast<unsigned>(fac.factors.front().second));
  const Poly b = divrem(mp, a).first;
  // e = b * (b^{-1} mod a) is 1 mod a and 0 mod b.
  const Poly idem = (b * inverse_mod(b, a)) % mp;
  return evaluate(idem, e);
}

}  // namespace detail

/// Indecomposability via End(M): one-dimensional End, or no idempotent besides 0 and I.
inline Verdict is_indecomposable(const FinModule& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  const auto ends = endomorphisms(m);
  if (ends.size() == 1) return {Tri::Yes, "endomorphism", {}};

  const Matrix id = Matrix::identity(f, n);
  for (const auto& e : ends)
    if (auto idem = detail::idempotent_from(e)) return {Tri::No, "endomorphism", *idem};

  if (f.is_finite()) {
    if (const auto total = detail::bounded_power(f, ends.size(), kEndomorphismBudget)) {
      const Matrix zero(f, n, n);
      for (std::uint64_t idx = 1; idx < *total; ++idx) {
        const Vec c = detail::vector_at(f, ends.size(), idx);
        Matrix e(f, n, n);
        for (std::size_t k = 0; k < ends.size(); ++k)
          if (!c[k].is_zero()) e = e + ends[k] * c[k];
        if (e != id && e != zero && e * e == e) return {Tri::No, "exhaustive", e};
      }
      return {Tri::Yes, "exhaustive", {}};
    }
  }
  return {Tri::Unknown, "none", {}};
}

/// Yes iff the submodule lattice is a chain.
inline Verdict is_uniserial(const FinModule& m) {
  if (m.dim() == 1) return {Tri::Yes, "dimension-one", {}};
  const auto lattice = submodule_lattice(m);
  if (lattice.is_chain) return {Tri::Yes, "exhaustive", {}};
  for (std::size_t i = 0; i + 1 < lattice.members.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.members.size(); ++j) {
      const auto& a = lattice.members[i];
      const auto& b = lattice.members[j];
      if (!a.contains(b) && !b.contains(a)) {
        for (const auto& v : a.basis())
          if (!b.contains(v)) return {Tri::No, "exhaustive", v};
      }
    }
  return {Tri::No, "exhaustive", {}};
}

/// Generator of {r in F[x] : r(X) = 0}.
inline Poly d_annihilator(const FinModule& m) { return minimal_polynomial(m.X()); }

struct WeightSpace {
  Poly f;                   // monic prime
  unsigned multiplicity;    // exponent of f in the D-annihilator
  Subspace generalized;     // ker f(X)^multiplicity
  bool is_weight_space;     // f(X) already vanishes there
};

/// Generalized weight spaces, one per prime factor of the D-annihilator.
inline std::vector<WeightSpace> weight_decomposition(const FinModule& m) {
  const Poly mp = d_annihilator(m);
  const Factorization fac = factor_into_primes(mp);
  std::vector<WeightSpace> out;
  for (const auto& [f, e] : fac.factors) {
    const Subspace gen = Subspace::span(m.field(), m.dim(), kernel(evaluate(f.pow(static_cast<unsigned>(e)), m.X())));
    out.push_back({f, static_cast<unsigned>(e), gen, e == 1});
  }
  return out;
}

/// Annihilator in the window x-deg <= dx, y-deg <= dy, as a subspace of coefficient vectors
/// over box_window(dx, dy).
inline Subspace ann_subspace(const FinModule& m, unsigned dx, unsigned dy) {
  const auto window = box_window(dx, dy);
  const std::size_t n = m.dim();
  std::vector<Matrix> xp{Matrix::identity(m.field(), n)}, yp{Matrix::identity(m.field(), n)};
  for (unsigned i = 0; i < dx; ++i) xp.push_back(xp.back() * m.X());
  for (unsigned i = 0; i < dy; ++i) yp.push_back(yp.back() * m.Y());
  std::vector<Vec> cols;
  for (const auto& [a, b] : window) cols.push_back(detail::flatten(xp[a] * yp[b]));
  const auto ker = kernel(Matrix::from_columns(m.field(), n * n, cols));
  return Subspace::span(m.field(), window.size(), ker);
}

inline std::vector<AhElement> ann_bounded(const FinModule& m, unsigned dx, unsigned dy) {
  return elements_from_vectors(m.context(), box_window(dx, dy), ann_subspace(m, dx, dy).basis());
}

/// Window (dx, dy) large enough to hold the annihilator generators named by the provenance.
inline std::optional<std::pair<unsigned, unsigned>> generator_window(const FinModule& m) {
  const AhContext& ctx = m.context();
  return std::visit(
      [&](const auto& p) -> std::optional<std::pair<unsigned, unsigned>> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, provenance::OneDim>) {
          return std::pair{1U, 1U};
        } else if constexpr (std::is_same_v<T, provenance::LFactor>) {
          unsigned dx = static_cast<unsigned>(p.f.degree());
          for (const auto& g : p.g) dx = std::max(dx, static_cast<unsigned>(std::max(g.degree(), 0)));
          return std::pair{dx, static_cast<unsigned>(p.g.size())};
        } else if constexpr (std::is_same_v<T, provenance::LZBeta>) {
          const auto q = static_cast<unsigned>(ctx.field().characteristic());
          const unsigned dq = static_cast<unsigned>(std::max(ctx.delta_p_x_over_h().degree(), 0));
          return std::pair{std::max(q, dq), q};
        } else {
          return std::nullopt;
        }
      },
      m.provenance());
}

struct AnnComparison {
  bool equal;
  bool window_sufficient;  // the window holds the generators of both provenances
};

inline AnnComparison same_annihilator(const FinModule& a, const FinModule& b, unsigned dx, unsigned dy) {
  if (a.context() != b.context()) throw Error(ErrorCode::MixedContexts, "modules over different algebras");
  const bool equal = ann_subspace(a, dx, dy) == ann_subspace(b, dx, dy);
  bool sufficient = true;
  for (const FinModule* m : {&a, &b}) {
    const auto w = generator_window(*m);
    sufficient = sufficient && w && w->first <= dx && w->second <= dy;
  }
  return {equal, sufficient};
}

/// span{y^i x^j g : g in gens, i <= dy, j <= dx + dy * deg h} intersected with the box window,
/// as a subspace over box_window(dx, dy).
inline Subspace ideal_window_span(const AhContext& ctx, const std::vector<AhElement>& gens, unsigned dx, unsigned dy) {
  const unsigned dh = static_cast<unsigned>(std::max(ctx.h().degree(), 0));
  const unsigned jmax = dx + dy * dh;
  std::vector<AhElement> all;
  for (const auto& g : gens)
    for (unsigned i = 0; i <= dy; ++i)
      for (unsigned j = 0; j <= jmax; ++j)
        all.push_back(AhElement::monomial(ctx, 0, i, ctx.field().one()) * AhElement::monomial(ctx, j, 0, ctx.field().one()) * g);
  std::map<Monomial, std::size_t> index;
  for (const auto& [m, n] : box_window(dx, dy)) index.try_emplace({m, n}, index.size());
  const std::size_t inside = index.size();
  for (const auto& e : all)
    for (const auto& [mono, c] : e.terms()) index.try_emplace(mono, index.size());
  // Ambient = window coordinates first; intersect the span with the first `inside` coordinates.
  std::vector<Vec> vecs;
  for (const auto& e : all) {
    Vec v = zero_vec(ctx.field(), index.size());
    for (const auto& [mono, c] : e.terms()) v[index.at(mono)] = c;
    vecs.push_back(std::move(v));
  }
  const Subspace span = Subspace::span(ctx.field(), index.size(), vecs);
  std::vector<Vec> window_axes;
  for (std::size_t i = 0; i < inside; ++i) window_axes.push_back(unit_vec(ctx.field(), index.size(), i));
  const Subspace cut = span.intersect(Subspace::span(ctx.field(), index.size(), window_axes));
  std::vector<Vec> out;
  for (const auto& v : cut.basis()) out.emplace_back(v.begin(), v.begin() + static_cast<long>(inside));
  return Subspace::span(ctx.field(), inside, out);
}

/// Elements of the box window acting as zero on every y^k x^l u_m with k <= probe.
inline Subspace induced_ann_subspace(const AhContext& ctx, const Poly& f, unsigned dx, unsigned dy, unsigned probe) {
  const auto window = box_window(dx, dy);
  const unsigned d = static_cast<unsigned>(f.degree());
  const unsigned top = probe + dy;
  std::vector<Vec> cols;
  for (const auto& [m, n] : window) {
    const AhElement mono = AhElement::monomial(ctx, m, n, ctx.field().one());
    Vec col;
    for (unsigned k = 0; k <= probe; ++k)
      for (unsigned l = 0; l < d; ++l) {
        const Vec img = induced_act(mono, InducedElement::basis(ctx, f, k, l)).coordinates(top);
        col.insert(col.end(), img.begin(), img.end());
      }
    cols.push_back(std::move(col));
  }
  const std::size_t rows = cols.front().size();
  return Subspace::span(ctx.field(), window.size(), kernel(Matrix::from_columns(ctx.field(), rows, cols)));
}

// ---------------------------------------------------------------------------------------------
// Degree reduction on U(m)

/// f . v, which has smaller y-degree than v in characteristic 0 when f does not divide h.
inline InducedElement induced_reduce(const InducedElement& v) {
  const AhContext& ctx = v.context();
  if (ctx.field().characteristic() != 0) {
    throw Error(ErrorCode::CharacteristicPositive, "degree reduction needs characteristic 0");
  }
  if (divides(v.f(), ctx.h())) throw Error(ErrorCode::FDividesH, "f divides h");
  if (v.is_zero()) throw Error(ErrorCode::ZeroElement, "reduction of the zero element");
  return induced_act_poly(v.f(), v);
}

struct Recovery {
  bool recovered;
  unsigned steps;
  std::vector<InducedElement> trail;  // v, then each intermediate element
};

/// Reduce to y-degree 0, then multiply by the inverse residue; recovered iff the end is u_m.
inline Recovery recover_generator(const InducedElement& start, unsigned max_steps = 64) {
  Recovery out{false, 0, {start}};
  InducedElement v = start;
  while (v.y_degree() > 0 && out.steps < max_steps) {
    v = induced_reduce(v);
    ++out.steps;
    out.trail.push_back(v);
    if (v.is_zero()) return out;
  }
  if (v.y_degree() != 0 || out.steps >= max_steps) return out;
  const Poly s = inverse_mod(v.residue(0), v.f());
  v = induced_act_poly(s, v);
  ++out.steps;
  out.trail.push_back(v);
  out.recovered = v == InducedElement::generator(v.context(), v.f());
  return out;
}

// ---------------------------------------------------------------------------------------------
// Characteristic p

struct Classification {
  int case_id;                  // 1, 2 or 3
  std::vector<Scalar> roots;    // theta values in case 1
  std::vector<FinModule> modules;
};

/// Y^p - Y Q(X) - beta I == 0 with Q = delta^p(x)/h.
inline bool z_beta_annihilates(const FinModule& m, const Scalar& beta) {
  const auto p = m.field().characteristic();
  if (p == 0) throw Error(ErrorCode::CharacteristicZero, "z_beta needs characteristic p");
  const Matrix q = evaluate(m.context().delta_p_x_over_h(), m.X());
  const Matrix lhs = m.Y().pow(static_cast<unsigned>(p)) - m.Y() * q - Matrix::identity(m.field(), m.dim()) * beta;
  return lhs.is_zero();
}

inline Classification classify_char_p(const AhContext& ctx, const Scalar& lambda, const Scalar& beta) {
  const Field& f = ctx.field();
  const auto p = f.characteristic();
  if (p == 0) throw Error(ErrorCode::CharacteristicZero, "classification needs characteristic p");
  if (f.is_extension()) throw Error(ErrorCode::InvalidArgument, "lambda and beta must lie in the prime field");
  if (!ctx.h().evaluate(lambda).is_zero()) return {3, {}, {l_z_beta(ctx, lambda, beta)}};

  const Scalar alpha = ctx.h().derivative().evaluate(lambda).pow(static_cast<long long>(p - 1));
  Classification out{1, {}, {}};
  for (const auto& theta : f.elements()) {
    if ((theta - alpha * theta - beta).is_zero()) {
      out.roots.push_back(theta);
      out.modules.push_back(one_dim(ctx, lambda, theta));
    }
  }
  if (!out.roots.empty()) return out;
  std::vector<Poly> g(p, Poly(f));
  g[0] = Poly::constant(beta);
  g[1] = Poly::constant(alpha);
  out.case_id = 2;
  out.modules.push_back(l_module_factor(ctx, Poly(f, {-lambda, f.one()}), g));
  return out;
}

}  // namespace ahlib

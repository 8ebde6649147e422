#pragma once

#include <random>
#include <string>

#include "ahlib/ahlib.hpp"

namespace ahtest {

using namespace ahlib;

inline Field Q() { return Field::rationals(); }
inline Field Fp(std::uint64_t p) { return Field::prime(p); }

inline Poly P(const std::string& s, const Field& f) { return parse_poly(s, f); }
inline AhContext ctx(const std::string& h, const Field& f) { return AhContext(parse_poly(h, f)); }
inline AhElement E(const std::string& s, const AhContext& c) { return parse_element(s, c); }
inline Scalar S(const std::string& s, const Field& f) { return parse_scalar(s, f); }

inline Matrix Mat(const Field& f, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) {
    Vec v;
    for (const auto& s : r) v.push_back(parse_scalar(s, f));
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(f, out);
}

inline Matrix random_matrix(const Field& f, std::mt19937_64& rng, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
  return m;
}

template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected an ahlib::Error");
}

inline Poly random_poly(const Field& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  const int d = deg(rng);
  std::vector<Scalar> c;
  for (int i = 0; i <= d; ++i) c.push_back(f.random(rng));
  return Poly(f, c);
}

inline AhElement random_element(const AhContext& c, std::mt19937_64& rng, unsigned dx, unsigned dy,
                                unsigned terms = 4) {
  std::uniform_int_distribution<unsigned> mx(0, dx), my(0, dy);
  AhElement a(c);
  for (unsigned i = 0; i < terms; ++i) a.add_term(mx(rng), my(rng), c.field().random(rng));
  return a;
}

/// Single-step rewriting oracle: words in x, y reduced with yx -> xy + h until normal.
/// Elements are expanded word by word, so this is independent of the closed-form product.
inline AhElement rewrite_product(const AhElement& a, const AhElement& b) {
  const AhContext& c = a.context();
  // A word is x^m y^n; pending items are (coefficient, prefix-normal, suffix) expansions.
  std::map<std::vector<int>, Scalar> words;  // letters: 0 = x, 1 = y
  auto add_word = [&](std::vector<int> w, const Scalar& s) {
    auto it = words.find(w);
    if (it == words.end()) words.emplace(std::move(w), s);
    else it->second += s;
  };
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      std::vector<int> w(ma.first, 0);
      w.insert(w.end(), ma.second, 1);
      w.insert(w.end(), mb.first, 0);
      w.insert(w.end(), mb.second, 1);
      add_word(std::move(w), ca * cb);
    }
  const Poly& h = c.h();
  AhElement out(c);
  while (!words.empty()) {
    auto node = words.extract(words.begin());
    const std::vector<int> w = node.key();
    const Scalar coeff = node.mapped();
    if (coeff.is_zero()) continue;
    std::size_t i = 0;
    while (i + 1 < w.size() && !(w[i] == 1 && w[i + 1] == 0)) ++i;
    if (i + 1 >= w.size()) {
      unsigned m = 0, n = 0;
      for (int l : w) (l == 0 ? m : n)++;
      out.add_term(m, n, coeff);
      continue;
    }
    // ... y x ... -> ... x y ... + ... h ...
    std::vector<int> swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    add_word(swapped, coeff);
    for (std::size_t e = 0; e < h.coeffs().size(); ++e) {
      if (h.coeff(e).is_zero()) continue;
      std::vector<int> v(w.begin(), w.begin() + static_cast<long>(i));
      v.insert(v.end(), e, 0);
      v.insert(v.end(), w.begin() + static_cast<long>(i) + 2, w.end());
      add_word(std::move(v), coeff * h.coeff(e));
    }
  }
  return out;
}

}  // namespace ahtest

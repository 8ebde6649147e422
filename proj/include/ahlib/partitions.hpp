#pragma once

// Partition combinatorics of delta^k(x): with h^(mu) = prod_j (h^(j))^{mu_j},
//   delta^k(x) = sum_{mu |- k-1} c_mu^k h^(mu) h^(k - l(mu)),
// and the coefficients c_mu^k obey a two-rule recurrence in k.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ahlib/ahalg.hpp"

namespace ahlib {

inline constexpr unsigned kMaxPartitionWeight = 60;
inline constexpr unsigned kMaxTableRow = 40;

/// Partition stored by multiplicities: mult[j-1] is the number of parts equal to j.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> mult) : mult_(std::move(mult)) { trim(); }

  /// From a list of parts in any order.
  static Partition from_parts(const std::vector<unsigned>& parts) {
    std::vector<unsigned> mult;
    for (unsigned p : parts) {
      if (p == 0) continue;
      if (mult.size() < p) mult.resize(p, 0);
      ++mult[p - 1];
    }
    return Partition(std::move(mult));
  }

  const std::vector<unsigned>& multiplicities() const { return mult_; }
  /// Number of parts equal to j (j >= 1).
  unsigned count(unsigned j) const { return j >= 1 && j <= mult_.size() ? mult_[j - 1] : 0; }

  unsigned weight() const {
    unsigned w = 0;
    for (std::size_t j = 0; j < mult_.size(); ++j) w += static_cast<unsigned>(j + 1) * mult_[j];
    return w;
  }
  unsigned length() const {
    unsigned l = 0;
    for (unsigned m : mult_) l += m;
    return l;
  }

  /// Parts in descending order.
  std::vector<unsigned> parts() const {
    std::vector<unsigned> out;
    for (std::size_t j = mult_.size(); j-- > 0;)
      for (unsigned i = 0; i < mult_[j]; ++i) out.push_back(static_cast<unsigned>(j + 1));
    return out;
  }

  /// "(3,2^2,1)"; the empty partition prints as "(0)".
  std::string to_string() const {
    if (mult_.empty()) return "(0)";
    std::string s = "(";
    bool first = true;
    for (std::size_t j = mult_.size(); j-- > 0;) {
      if (mult_[j] == 0) continue;
      if (!first) s += ",";
      first = false;
      s += std::to_string(j + 1);
      if (mult_[j] > 1) s += "^" + std::to_string(mult_[j]);
    }
    return s + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) { return a.mult_ == b.mult_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  void trim() {
    while (!mult_.empty() && mult_.back() == 0) mult_.pop_back();
  }

  std::vector<unsigned> mult_;
};

/// Reverse lexicographic order on descending part lists: (3) < (2,1) < (1^3).
struct ReverseLex {
  bool operator()(const Partition& a, const Partition& b) const {
    const auto pa = a.parts();
    const auto pb = b.parts();
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
  }
};

namespace detail {

inline void partitions_into(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(prefix));
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in reverse lexicographic order.
inline std::vector<Partition> enumerate_partitions(unsigned n) {
  if (n > kMaxPartitionWeight) throw Error(ErrorCode::SizeGuard, "partitions of n > 60 are not enumerated");
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  detail::partitions_into(n, n, prefix, out);
  return out;
}

/// nu[j]: one part j becomes j + 1.
inline Partition raise_part(const Partition& nu, unsigned j) {
  if (nu.count(j) == 0) throw Error(ErrorCode::MissingPart, nu.to_string() + " has no part " + std::to_string(j));
  std::vector<unsigned> mult = nu.multiplicities();
  if (mult.size() < j + 1) mult.resize(j + 1, 0);
  --mult[j - 1];
  ++mult[j];
  return Partition(std::move(mult));
}

/// nu^+: one more part equal to 1.
inline Partition add_unit_part(const Partition& nu) {
  std::vector<unsigned> mult = nu.multiplicities();
  if (mult.empty()) mult.push_back(0);
  ++mult[0];
  return Partition(std::move(mult));
}

/// Row k of the coefficient table: c_mu^k for mu |- k-1, zero entries omitted.
class PartitionCoeffTable {
 public:
  PartitionCoeffTable(unsigned k, std::map<Partition, mpz_class, ReverseLex> coeffs)
      : k_(k), coeffs_(std::move(coeffs)) {}

  unsigned k() const { return k_; }
  const std::map<Partition, mpz_class, ReverseLex>& entries() const { return coeffs_; }

  mpz_class coeff(const Partition& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? mpz_class(0) : it->second;
  }

  mpz_class sum() const {
    mpz_class s = 0;
    for (const auto& [mu, c] : coeffs_) s += c;
    return s;
  }

  /// "(3)_1 (2,1)_4 (1^3)_1".
  std::string to_string() const {
    std::string s;
    for (const auto& [mu, c] : coeffs_) s += (s.empty() ? "" : " ") + mu.to_string() + "_" + c.get_str();
    return s;
  }

 private:
  unsigned k_;
  std::map<Partition, mpz_class, ReverseLex> coeffs_;
};

/// Rows 1..k, each obtained from the previous one:
///  (a) nu_j c_nu^{k-1} contributes to mu = nu[j],
///  (b) (k - 1 - l(nu)) c_nu^{k-1} contributes to mu = nu^+.
inline std::vector<PartitionCoeffTable> coeff_tables(unsigned k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (k > kMaxTableRow) throw Error(ErrorCode::SizeGuard, "coefficient tables stop at k = 40");
  std::vector<PartitionCoeffTable> rows;
  std::map<Partition, mpz_class, ReverseLex> row;
  row.emplace(Partition{}, 1);
  rows.emplace_back(1, row);
  for (unsigned r = 2; r <= k; ++r) {
    std::map<Partition, mpz_class, ReverseLex> next;
    for (const auto& [nu, c] : row) {
      const auto& mult = nu.multiplicities();
      for (unsigned j = 1; j <= mult.size(); ++j) {
        if (mult[j - 1] == 0) continue;
        next[raise_part(nu, j)] += c * mult[j - 1];
      }
      const long lift = static_cast<long>(r) - 1 - static_cast<long>(nu.length());
      if (lift > 0) next[add_unit_part(nu)] += c * lift;
    }
    for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
    row = std::move(next);
    rows.emplace_back(r, row);
  }
  return rows;
}

inline PartitionCoeffTable coeff_table(unsigned k) { return coeff_tables(k).back(); }

/// sum_mu c_mu^k h^(mu) h^(k - l(mu)).
inline Poly expand_delta_x(unsigned k, const AhContext& ctx) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  const PartitionCoeffTable table = coeff_table(k);
  const Poly& h = ctx.h();
  std::vector<Poly> derivs{h};
  for (unsigned j = 1; j < k; ++j) derivs.push_back(derivs.back().derivative());
  Poly total(ctx.field());
  for (const auto& [mu, c] : table.entries()) {
    Poly term = Poly::constant(ctx.field().from_mpz(c));
    const auto& mult = mu.multiplicities();
    for (std::size_t j = 0; j < mult.size(); ++j)
      if (mult[j] > 0) term *= derivs[j + 1].pow(mult[j]);
    term *= h.pow(k - mu.length());
    total += term;
  }
  return total;
}

inline mpz_class factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

/// (sum of row k, whether it equals (k-1)!).
inline std::pair<mpz_class, bool> factorial_sum_check(unsigned k) {
  const mpz_class s = coeff_table(k).sum();
  return {s, s == factorial(k - 1)};
}

}  // namespace ahlib

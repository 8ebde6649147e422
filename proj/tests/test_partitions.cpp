#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace ahtest;

namespace {

Partition parts(std::vector<unsigned> p) { return Partition::from_parts(p); }

// Independent partition count p(n) by the coin-change recursion.
std::uint64_t partition_count(unsigned n, unsigned max_part) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= std::min(n, max_part); ++k) total += partition_count(n - k, k);
  return total;
}

}  // namespace

TEST(Partitions, Enumerate) {
  ASSERT_EQ(enumerate_partitions(0).size(), 1U);
  EXPECT_EQ(enumerate_partitions(0)[0].weight(), 0U);
  EXPECT_EQ(enumerate_partitions(0)[0].length(), 0U);
  EXPECT_EQ(enumerate_partitions(4).size(), 5U);
  for (unsigned n = 0; n <= 18; ++n) {
    const auto all = enumerate_partitions(n);
    EXPECT_EQ(all.size(), partition_count(n, n)) << n;
    std::set<std::string> seen;
    for (const auto& p : all) {
      EXPECT_EQ(p.weight(), n);
      EXPECT_TRUE(seen.insert(p.to_string()).second);
    }
    for (std::size_t i = 0; i + 1 < all.size(); ++i) EXPECT_TRUE(ReverseLex{}(all[i], all[i + 1]));
  }
  bool found = false;
  for (const auto& p : enumerate_partitions(5))
    if (p == parts({2, 2, 1})) {
      found = true;
      EXPECT_EQ(p.length(), 3U);
    }
  EXPECT_TRUE(found);
  try {
    (void)enumerate_partitions(61);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeGuard);
  }
}

TEST(Partitions, Transforms) {
  EXPECT_EQ(raise_part(parts({2, 2}), 2), parts({3, 2}));
  EXPECT_EQ(raise_part(parts({1}), 1), parts({2}));
  EXPECT_EQ(raise_part(parts({2, 1, 1}), 1), parts({2, 2, 1}));
  EXPECT_EQ(add_unit_part(Partition{}), parts({1}));
  EXPECT_EQ(add_unit_part(parts({2, 2})), parts({2, 2, 1}));
  EXPECT_EQ(add_unit_part(parts({3, 1})), parts({3, 1, 1}));
  try {
    (void)raise_part(parts({3, 1}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingPart);
  }
  for (unsigned n = 0; n <= 9; ++n)
    for (const auto& nu : enumerate_partitions(n)) {
      const Partition plus = add_unit_part(nu);
      EXPECT_EQ(plus.weight(), n + 1);
      EXPECT_EQ(plus.length(), nu.length() + 1);
      for (unsigned j = 1; j <= n; ++j) {
        if (nu.count(j) == 0) continue;
        const Partition r = raise_part(nu, j);
        EXPECT_EQ(r.weight(), n + 1);
        EXPECT_EQ(r.length(), nu.length());
      }
    }
}

TEST(Partitions, Printing) {
  EXPECT_EQ(Partition{}.to_string(), "(0)");
  EXPECT_EQ(parts({2, 2, 1}).to_string(), "(2^2,1)");
  EXPECT_EQ(parts({1, 1, 1}).to_string(), "(1^3)");
  EXPECT_EQ(parts({3, 2, 1}).to_string(), "(3,2,1)");
}

TEST(Partitions, TableRowsOneToSeven) {
  const std::vector<std::string> rows{
      "(0)_1",
      "(1)_1",
      "(2)_1 (1^2)_1",
      "(3)_1 (2,1)_4 (1^3)_1",
      "(4)_1 (3,1)_7 (2^2)_4 (2,1^2)_11 (1^4)_1",
      "(5)_1 (4,1)_11 (3,2)_15 (3,1^2)_32 (2^2,1)_34 (2,1^3)_26 (1^5)_1",
      "(6)_1 (5,1)_16 (4,2)_26 (4,1^2)_76 (3^2)_15 (3,2,1)_192 (3,1^3)_122 (2^3)_34 (2^2,1^2)_180 (2,1^4)_57 "
      "(1^6)_1"};
  const auto tables = coeff_tables(7);
  ASSERT_EQ(tables.size(), 7U);
  for (unsigned k = 1; k <= 7; ++k) EXPECT_EQ(tables[k - 1].to_string(), rows[k - 1]) << "k=" << k;
  EXPECT_EQ(coeff_table(4).coeff(parts({2, 1})), 4);
  EXPECT_EQ(coeff_table(6).coeff(parts({2, 2, 1})), 34);
  EXPECT_EQ(coeff_table(7).coeff(parts({3, 2, 1})), 192);
}

TEST(Partitions, TableKeysHaveWeightKMinusOne) {
  for (const auto& t : coeff_tables(14))
    for (const auto& [mu, c] : t.entries()) {
      EXPECT_EQ(mu.weight(), t.k() - 1);
      EXPECT_GT(c, 0);
    }
}

TEST(Partitions, FactorialSums) {
  EXPECT_EQ(factorial_sum_check(5), std::make_pair(mpz_class(24), true));
  EXPECT_EQ(factorial_sum_check(1), std::make_pair(mpz_class(1), true));
  EXPECT_EQ(factorial_sum_check(7), std::make_pair(mpz_class(720), true));
  for (unsigned k = 1; k <= 20; ++k) EXPECT_TRUE(factorial_sum_check(k).second) << k;
  EXPECT_EQ(factorial_sum_check(12).first, mpz_class(39916800));
  try {
    (void)coeff_table(41);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeGuard);
  }
}

TEST(Partitions, ExpansionExamples) {
  for (const char* h : {"x", "x^2 + 1", "3*x^3 - x"}) {
    const AhContext c = ctx(h, Q());
    EXPECT_EQ(expand_delta_x(1, c), c.h());
  }
  EXPECT_EQ(expand_delta_x(3, ctx("x^2", Q())), P("6*x^4", Q()));
  EXPECT_EQ(expand_delta_x(2, ctx("x", Q())), P("x", Q()));
}

TEST(Partitions, ExpansionMatchesIteratedDelta) {
  for (const auto& f : {Q(), Fp(5), Fp(3)})
    for (const char* h : {"x", "x^2", "x^2 + 1", "x^3 - x", "2*x^2 + 3", "x^4 - 2*x + 1"}) {
      const AhContext c = ctx(h, f);
      for (unsigned k = 1; k <= 12; ++k) {
        EXPECT_EQ(expand_delta_x(k, c), c.delta_apply(Poly::x(f), k)) << h << " k=" << k << " " << f.to_string();
      }
    }
}

// Expansion of delta^k(f) for general f with coefficients b_nu^k indexed by all partitions of
// n < k, built from b^1 = {empty: 1} by
//   b_mu^{k+1} += b_mu^k                    (f gets one more derivative),
//   b_{nu[j]}^{k+1} += nu_j b_nu^k,
//   b_{nu^+}^{k+1} += (k - l(nu)) b_nu^k,
// and delta^k(f) = sum b_nu^k f^{(k-n)} h^(nu) h^{k-l(nu)}.
TEST(Partitions, GeneralFExpansion) {
  for (const char* hs : {"x^2", "x^3 + 2*x", "x^2 - x + 5"}) {
    const AhContext c = ctx(hs, Q());
    const Poly& h = c.h();
    for (const char* fs : {"x^2", "x^3 - x"}) {
      const Poly f = P(fs, Q());
      std::map<Partition, mpz_class, ReverseLex> b;
      b.emplace(Partition{}, 1);
      for (unsigned k = 1; k <= 6; ++k) {
        Poly total(Q());
        for (const auto& [nu, coef] : b) {
          Poly term = f.derivative(k - nu.weight()) * Q().from_mpz(coef);
          const auto& mult = nu.multiplicities();
          for (std::size_t j = 0; j < mult.size(); ++j) term *= h.derivative(static_cast<unsigned>(j + 1)).pow(mult[j]);
          term *= h.pow(k - nu.length());
          total += term;
        }
        EXPECT_EQ(total, c.delta_apply(f, k)) << "h=" << hs << " f=" << fs << " k=" << k;

        std::map<Partition, mpz_class, ReverseLex> next;
        for (const auto& [nu, coef] : b) {
          next[nu] += coef;
          for (unsigned j = 1; j <= nu.multiplicities().size(); ++j)
            if (nu.count(j) > 0) next[raise_part(nu, j)] += coef * nu.count(j);
          const long lift = static_cast<long>(k) - static_cast<long>(nu.length());
          if (lift > 0) next[add_unit_part(nu)] += coef * lift;
        }
        b = std::move(next);
      }
    }
  }
}

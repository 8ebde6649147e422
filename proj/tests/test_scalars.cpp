#include <gtest/gtest.h>

#include "support.hpp"

using namespace ahtest;

namespace {

Field F4() { return parse_field("fp:2[t^2+t+1]"); }

}  // namespace

TEST(Scalars, PrimeFieldProduct) {
  const Field f = Fp(5);
  EXPECT_EQ(f.from_int(3) * f.from_int(4), f.from_int(2));
  EXPECT_EQ(f.from_int(-1), f.from_int(4));
  EXPECT_EQ((f.from_int(3) / f.from_int(4)) * f.from_int(4), f.from_int(3));
}

TEST(Scalars, RationalSum) {
  const Field q = Q();
  EXPECT_EQ(S("2/3", q) + S("1/6", q), S("5/6", q));
  EXPECT_EQ(S("4/6", q).to_string(), "2/3");
  EXPECT_EQ(S("-3/6", q).rational(), mpq_class(-1, 2));
}

TEST(Scalars, ExtensionReduction) {
  const Field f = F4();
  const Scalar t = f.generator();
  EXPECT_EQ(t * t, t + f.one());
  EXPECT_EQ((t * t).to_string(), "t + 1");
  EXPECT_EQ(t * t * t, f.one());
  EXPECT_EQ(f.order(), std::optional<std::uint64_t>(4));
  EXPECT_EQ(f.characteristic(), 2U);
}

TEST(Scalars, Frobenius) {
  EXPECT_TRUE(frobenius_fixed(Fp(3).from_int(2)));
  EXPECT_FALSE(frobenius_fixed(F4().generator()));
  EXPECT_TRUE(frobenius_fixed(F4().one()));
  try {
    frobenius_fixed(Q().one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CharacteristicZero);
  }
}

TEST(Scalars, Errors) {
  try {
    (void)Fp(7).zero().inv();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  try {
    (void)(Fp(7).one() + Fp(5).one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedContexts);
  }
  EXPECT_EQ(error_of([] { (void)Field::prime(4294967311ULL); }), ErrorCode::InvalidArgument);
  for (std::uint64_t bad : {0ULL, 1ULL, 4ULL, 91ULL, 2147483645ULL}) {
    try {
      (void)Field::prime(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotPrime);
    }
  }
  EXPECT_NO_THROW((void)Field::prime(2147483647ULL));
  try {
    (void)parse_field("fp:2[t^2+1]");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotIrreducible);
  }
}

TEST(Scalars, LargePrimeArithmetic) {
  const Field f = Field::prime(2147483647ULL);
  const Scalar a = f.from_int(2147483646LL);
  EXPECT_EQ(a * a, f.one());
  EXPECT_EQ(f.from_int(2).pow(31), f.one());
}

TEST(Scalars, FermatExhaustive) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    const Field f = Fp(p);
    for (const auto& a : f.elements()) EXPECT_EQ(a.pow(static_cast<long long>(p)), a);
  }
}

TEST(Scalars, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  const std::vector<Field> fields{Q(), Fp(7), F4(), parse_field("q[t^2-2]"), parse_field("fp:3[t^2+1]")};
  for (const auto& f : fields) {
    for (int trial = 0; trial < 60; ++trial) {
      const Scalar a = f.random(rng), b = f.random(rng), c = f.random(rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, f.zero());
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inv(), f.one());
      }
    }
  }
}

TEST(Scalars, EnumerationRoundTrip) {
  for (const auto& f : {Fp(5), F4(), parse_field("fp:3[t^2+1]")}) {
    const auto all = f.elements();
    for (std::uint64_t i = 0; i < all.size(); ++i) EXPECT_EQ(f.index_of(all[i]), i);
  }
}

TEST(Scalars, PrintAndReparse) {
  std::mt19937_64 rng(11);
  for (const auto& f : {Q(), Fp(11), F4(), parse_field("q[t^2-2]")}) {
    for (int i = 0; i < 30; ++i) {
      const Scalar a = f.random(rng);
      EXPECT_EQ(parse_scalar(a.to_string(), f), a) << a.to_string();
    }
  }
}

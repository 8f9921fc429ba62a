#include "mwcut/rational.hpp"
#include "mwcut/random.hpp"

#include <gtest/gtest.h>

#include <limits>

namespace mwcut {
namespace {

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, -5).str(), "0");
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_TRUE(Rational(4, 2).is_integer());
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
  Rational half(1, 2);
  EXPECT_EQ(half + half, Rational(1));
  EXPECT_EQ(Rational(3, 2) - Rational(2), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(1, 3) / Rational(-2, 3), Rational(-1, 2));
  EXPECT_THROW(half / Rational(0), std::domain_error);
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("3/2"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, PromotesAndDemotes) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  Rational x(big);
  Rational y = x + x;
  EXPECT_FALSE(y.is_small());
  EXPECT_EQ(y.str(), "18446744073709551614");
  Rational back = y - x;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, x);
  Rational tiny = Rational(1) / (x * x);
  EXPECT_FALSE(tiny.is_small());
  EXPECT_EQ(tiny * x * x, Rational(1));
  EXPECT_EQ(Rational(std::numeric_limits<std::int64_t>::min()).str(), "-9223372036854775808");
}

TEST(Rational, FieldIdentitiesOnRandomValues) {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    // Large magnitudes force the arbitrary-precision path part of the time.
    auto draw = [&] {
      std::int64_t scale = rng.chance(1, 3) ? (std::int64_t{1} << 40) : 50;
      std::int64_t num = rng.between(-scale, scale);
      std::int64_t den = rng.between(1, scale);
      return Rational(num, den);
    };
    Rational a = draw() * draw();
    Rational b = draw() * draw();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * b, b * a);
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a < b, a.to_big() < b.to_big());
    EXPECT_EQ(a == b, a.to_big() == b.to_big());
  }
}

}  // namespace
}  // namespace mwcut

#include <gtest/gtest.h>

#include <random>

#include "gdifs/rational.hpp"
#include "gdifs/render.hpp"
#include "gdifs/similarity.hpp"
#include "support.hpp"

using namespace gdifs;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("-3/6").str(), "-1/2");
  EXPECT_EQ(Rational::parse("6/3").str(), "2");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
  EXPECT_EQ(Rational::parse("17").str(), "17");
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "a/b", "1/", "/2", "1.5", "1/2/3", " 1/2"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, ArithmeticAndOrder) {
  const Rational a(1, 4), b(1, 2);
  EXPECT_EQ(a + b, Rational(3, 4));
  EXPECT_EQ(a - b, Rational(-1, 4));
  EXPECT_EQ(a * b, Rational(1, 8));
  EXPECT_EQ(a / b, Rational(1, 2));
  EXPECT_LT(a, b);
  EXPECT_EQ(pow(b, 5), Rational(1, 32));
  EXPECT_EQ(min(a, b), a);
  EXPECT_EQ(max(a, b), b);
}

TEST(Rational, PerfectSquares) {
  EXPECT_TRUE(Rational(1, 100).is_perfect_square());
  EXPECT_EQ(Rational(1, 100).sqrt_exact(), Rational(1, 10));
  EXPECT_TRUE(Rational(9, 4).is_perfect_square());
  EXPECT_FALSE(Rational(2).is_perfect_square());
  EXPECT_FALSE(Rational(-4).is_perfect_square());
}

TEST(Rational, StrRoundTripProperty) {
  std::mt19937_64 rng(gen::kSeed);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    const Rational r(num(rng), den(rng));
    EXPECT_EQ(Rational::parse(r.str()), r);
  }
}

TEST(Similarity, ComposeAndInverse) {
  const Similarity s(Rational(1, 4), Rational(3, 4));
  const Similarity t(Rational(1, 2), Rational(1, 8), true);
  const Rational x(3, 7);
  EXPECT_EQ(s.compose(t)(x), s(t(x)));
  EXPECT_EQ(t.compose(s)(x), t(s(x)));
  EXPECT_EQ(s.inverse()(s(x)), x);
  EXPECT_EQ(t.inverse()(t(x)), x);
  EXPECT_EQ(Similarity::unit_reflection()(Rational(1, 4)), Rational(3, 4));
}

TEST(Similarity, ImageOfReflectionIsOrdered) {
  const Similarity t(Rational(1, 2), Rational(1), true);
  const Interval im = t.image(unit_interval());
  EXPECT_EQ(im.lo, Rational(1, 2));
  EXPECT_EQ(im.hi, Rational(1));
}

TEST(Fixed3, HalfEven) {
  EXPECT_EQ(fixed3(Rational(1, 4)), "0.250");
  EXPECT_EQ(fixed3(Rational(1, 2000)), "0.000");   // 0.0005 -> even 0
  EXPECT_EQ(fixed3(Rational(3, 2000)), "0.002");   // 0.0015 -> even 2
  EXPECT_EQ(fixed3(Rational(5, 2000)), "0.002");   // 0.0025 -> even 2
  EXPECT_EQ(fixed3(Rational(1, 3)), "0.333");
  EXPECT_EQ(fixed3(Rational(2, 3)), "0.667");
  EXPECT_EQ(fixed3(Rational(-1, 3)), "-0.333");
  EXPECT_EQ(fixed3(Rational(1000)), "1000.000");
  EXPECT_EQ(fixed3(Rational(15625, 1)), "15625.000");
}

#include <random>

#include "support.hpp"

using namespace mcg;
using mcg::testing::encloses;
using mcg::testing::q;

TEST(Rational, ParseForms) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(parse_rational("1.25"), make_rational(5, 4));
  EXPECT_EQ(parse_rational("1e-3"), make_rational(1, 1000));
  EXPECT_EQ(parse_rational("-2.5E2"), Rational(-250));
  EXPECT_THROW(parse_rational("1/0"), PreconditionError);
  EXPECT_THROW(parse_rational("abc"), PreconditionError);
  EXPECT_EQ(to_fraction_string(Rational(-62)), "-62/1");
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor(make_rational(-7, 2)), Integer(-4));
  EXPECT_EQ(ceil(make_rational(-7, 2)), Integer(-3));
  EXPECT_EQ(floor(Rational(5)), Integer(5));
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), Integer(-4));
}

TEST(QuadReal, ArithmeticExamples) {
  QuadReal x(1, 1, 64), one(1, 0, 64);
  QuadReal p = x * one;
  EXPECT_EQ(p.rational_part(), 9);
  EXPECT_EQ(p.radical_part(), 0);

  QuadReal r2 = QuadReal::sqrt_of(2);
  QuadReal sq = r2 * r2;
  EXPECT_EQ(sq.rational_part(), 2);
  EXPECT_EQ(sq.radical_part(), 0);

  QuadReal s = QuadReal(1, 1, 2) + QuadReal(1, -1, 2);
  EXPECT_EQ(s, QuadReal::from_rational(2, 2));
}

TEST(QuadReal, RadicandMismatchRejected) {
  EXPECT_THROW(QuadReal::sqrt_of(2) + QuadReal::sqrt_of(3), RadicandMismatch);
  EXPECT_THROW(QuadReal::sqrt_of(2) * QuadReal::sqrt_of(5), RadicandMismatch);
}

TEST(QuadReal, CompareExamples) {
  EXPECT_EQ(compare(QuadReal::sqrt_of(2), Rational(1)), std::strong_ordering::greater);
  EXPECT_EQ(compare(QuadReal(3, 0, 5), Rational(3)), std::strong_ordering::equal);
  EXPECT_EQ(compare(QuadReal(-62, 0, 64), Rational(-2)), std::strong_ordering::less);
  EXPECT_EQ(compare(QuadReal(0, -1, 2), q("-1.4142")), std::strong_ordering::less);
  EXPECT_EQ(compare(QuadReal(0, -1, 2), q("-1.4143")), std::strong_ordering::greater);
  EXPECT_EQ(compare(QuadReal(1, 1, 3), QuadReal(2, make_rational(1, 2), 3)), std::strong_ordering::less);
  EXPECT_EQ(compare(QuadReal(2, 2, 3), QuadReal(3, 1, 3)), std::strong_ordering::greater);
}

TEST(QuadReal, IntervalExamples) {
  Interval e = to_interval(QuadReal::sqrt_of(64), 20);
  EXPECT_EQ(e.lo, 8);
  EXPECT_EQ(e.hi, 8);

  Interval r2 = to_interval(QuadReal::sqrt_of(2), 30);
  EXPECT_TRUE(encloses(r2, "1.41421356237309504880"));
  EXPECT_LE(r2.width(), pow2(-30) * 2);

  Interval big = to_interval(QuadReal(31, 1, 960), 40);
  EXPECT_TRUE(encloses(big, "61.98386676965933508143"));
  EXPECT_LE(big.width(), pow2(-40) * 62);
}

TEST(QuadReal, PerfectSquareNormalization) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 50);
  for (std::uint64_t mu : {0, 1, 4, 9, 16, 64}) {
    for (int trial = 0; trial < 200; ++trial) {
      QuadReal x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), mu);
      QuadReal y(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), mu);
      for (const QuadReal& z : {x, y, x + y, x - y, x * y, -x, x.conjugate()}) EXPECT_EQ(z.radical_part(), 0);
    }
  }
}

TEST(QuadReal, RingAxioms) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-1'000'000, 1'000'000), den(1, 1000);
  auto random = [&](std::uint64_t mu) {
    return QuadReal(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), mu);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    std::uint64_t mu = trial % 2 ? 2 : 960;
    QuadReal a = random(mu), b = random(mu), c = random(mu);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(QuadReal, CompareAgreesWithIntervals) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 100);
  std::uniform_int_distribution<std::uint64_t> rad(2, 200);
  int decided = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    QuadReal x(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), rad(rng));
    Rational r = make_rational(num(rng) * 10, den(rng));
    Interval iv = to_interval(x, 64);
    auto c = compare(x, r);
    if (iv.hi < r) {
      EXPECT_EQ(c, std::strong_ordering::less);
      ++decided;
    } else if (iv.lo > r) {
      EXPECT_EQ(c, std::strong_ordering::greater);
      ++decided;
    }
    if (c == std::strong_ordering::equal) {
      EXPECT_TRUE(iv.contains(r));
    }
  }
  EXPECT_GT(decided, 9000);
}

TEST(QuadReal, StrFormat) {
  EXPECT_EQ(QuadReal(1, 2, 3).str(), "1 + 2*sqrt(3)");
  EXPECT_EQ(QuadReal(-62, 0, 64).str(), "-62");
}

TEST(Interval, CertifiedElementaryFunctions) {
  EXPECT_TRUE(encloses(log(Rational(2)), "0.69314718055994530941723"));
  EXPECT_TRUE(encloses(sqrt(Rational(2)), "1.41421356237309504880168"));
  EXPECT_TRUE(encloses(exp(Interval::point(1)), "2.71828182845904523536028"));
  EXPECT_TRUE(encloses(cbrt(Interval::point(2)), "1.25992104989487316476721"));
  EXPECT_LE(log(Rational(2)).width(), pow2(-100));
  EXPECT_THROW(log(Interval::point(0)), PreconditionError);
}

TEST(Interval, FormattingRoundsOutward) {
  Rational third = make_rational(1, 3);
  EXPECT_EQ(format_fixed(third, 4, Rounding::down), "0.3333");
  EXPECT_EQ(format_fixed(third, 4, Rounding::up), "0.3334");
  EXPECT_EQ(format_fixed(-third, 4, Rounding::down), "-0.3334");
  EXPECT_LE(to_double(third, Rounding::down), 1.0 / 3.0);
  EXPECT_GE(to_double(third, Rounding::up), 1.0 / 3.0);
}

#include <functional>

#include "support.hpp"

using namespace mcg;
using mcg::testing::encloses;
using mcg::testing::q;
using mcg::testing::w;

namespace {

QuadReal rational(long v, std::uint64_t mu) { return QuadReal::from_rational(v, mu); }

}  // namespace

TEST(GeneratorImages, Entries) {
  auto g64 = generator_images(64);
  EXPECT_EQ(g64.a(0, 1), rational(8, 64));
  EXPECT_EQ(g64.b(1, 0), rational(-8, 64));
  auto g16 = generator_images(16);
  EXPECT_EQ(g16.a(0, 1), rational(4, 16));
  EXPECT_EQ(g16.b(1, 0), rational(-4, 16));
  auto g2 = generator_images(2);
  EXPECT_EQ(g2.a(0, 1), QuadReal::sqrt_of(2));
  EXPECT_EQ(g2.b(1, 0), -QuadReal::sqrt_of(2));
  EXPECT_THROW(generator_images(0), PreconditionError);
}

TEST(Evaluate, Examples) {
  TwistMatrix m = evaluate(w("ab"), 64);
  EXPECT_EQ(m(0, 0), rational(-63, 64));
  EXPECT_EQ(m(0, 1), rational(8, 64));
  EXPECT_EQ(m(1, 0), rational(-8, 64));
  EXPECT_EQ(m(1, 1), rational(1, 64));
  EXPECT_EQ(m.trace(), rational(-62, 64));

  TwistMatrix id = evaluate(w(""), 5);
  EXPECT_TRUE(id == TwistMatrix::identity(5));
  EXPECT_EQ(id.trace(), rational(2, 5));

  EXPECT_EQ(evaluate(w("abAB"), 64).trace(), rational(4098, 64));
  EXPECT_EQ(mcg::verify::oracle::integer_trace("abAB", 8), 4098);
}

TEST(Evaluate, MatchesIntegerOracle) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& s : mcg::verify::oracle::all_cyclically_reduced(n)) {
      long long t = mcg::verify::oracle::integer_trace(s, 4);
      EXPECT_EQ(evaluate(w(s.c_str()), 16).trace(), rational(static_cast<long>(t), 16)) << s;
    }
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(evaluate(w("ab"), 64)), IsometryClass::hyperbolic);
  EXPECT_EQ(classify(evaluate(w("a"), 64)), IsometryClass::parabolic);
  EXPECT_EQ(classify(evaluate(w(""), 64)), IsometryClass::identity);
  // tr(ab) = 2 - mu: elliptic for mu in 1..3, parabolic at 4.
  EXPECT_EQ(classify(evaluate(w("ab"), 1)), IsometryClass::elliptic);
  EXPECT_EQ(classify(evaluate(w("ab"), 2)), IsometryClass::elliptic);
  EXPECT_EQ(classify(evaluate(w("ab"), 4)), IsometryClass::parabolic);
  EXPECT_EQ(classify(evaluate(w("ab"), 5)), IsometryClass::hyperbolic);
  // ab has order 6 in PSL_2 at mu = 1; its cube is -Id.
  EXPECT_EQ(classify(evaluate(w("ababab"), 1)), IsometryClass::identity);
}

TEST(Dilatation, TorelliWord) {
  auto r = dilatation(w("ab"), 64);
  ASSERT_TRUE(r.has_dilatation());
  EXPECT_TRUE(encloses(*r.dilatation, "61.98386676965933508143"));
  EXPECT_TRUE(encloses(*r.log_dilatation, "4.12687413779112109345"));
  EXPECT_TRUE(r.log_dilatation->inside_open(q("4.1268"), q("4.1269")));
  EXPECT_LT(r.log_dilatation->hi, q("4.127"));
  ASSERT_TRUE(r.char_poly);
  EXPECT_EQ((*r.char_poly)[0], 1);
  EXPECT_EQ((*r.char_poly)[1], -62);
  EXPECT_EQ((*r.char_poly)[2], 1);
  EXPECT_TRUE(r.dilatation->relative_width_within(60));
}

TEST(Dilatation, BraidWord) {
  auto r = dilatation(w("ab"), 16);
  EXPECT_EQ(r.trace, rational(-14, 16));
  EXPECT_TRUE(encloses(*r.dilatation, "13.92820323027550917410978"));
  EXPECT_TRUE(encloses(*r.log_dilatation, "2.63391579384963341725"));
  EXPECT_LT(r.log_dilatation->hi, q("2.634"));
}

TEST(Dilatation, NonHyperbolicHasNoInterval) {
  for (const char* s : {"b", "", "a"}) {
    auto r = dilatation(w(s), 64);
    EXPECT_FALSE(r.has_dilatation());
    EXPECT_FALSE(r.log_dilatation);
    // Traces are polynomials in mu, so the polynomial is always reported.
    ASSERT_TRUE(r.char_poly);
    EXPECT_EQ((*r.char_poly)[1], -2);
  }
}

TEST(Dilatation, IrrationalTrace) {
  // mu = 2: tr(abb) = 2 - 2 mu + ... evaluated exactly; abAB has trace 2 + mu^2 = 6.
  auto r = dilatation(w("abAB"), 2);
  EXPECT_EQ(r.trace, rational(6, 2));
  EXPECT_TRUE(encloses(*r.dilatation, "5.82842712474619009760"));  // 3 + 2 sqrt 2
  auto s = dilatation(w("aab"), 3);
  EXPECT_EQ(s.trace, rational(-4, 3));
  EXPECT_TRUE(encloses(*s.dilatation, "3.73205080756887729352"));  // 2 + sqrt 3
}

TEST(Dilatation, ReciprocalAndTraceConsistency) {
  for (const char* s : {"ab", "aab", "abAB", "aBBa", "abbbA"}) {
    auto r = dilatation(w(s), 64, 80);
    if (!r.has_dilatation()) continue;
    Interval lam = *r.dilatation;
    Interval product = lam * (Interval::point(1) / lam);
    EXPECT_TRUE(product.contains(Rational(1))) << s;
    Interval sum = lam + Interval::point(1) / lam;
    EXPECT_TRUE(sum.overlaps(to_interval(abs(r.trace), 80))) << s;
  }
}

TEST(Dilatation, PowerLaw) {
  for (const char* s : {"ab", "aB", "aab", "abAB"}) {
    auto base = dilatation(w(s), 16, 80);
    ASSERT_TRUE(base.log_dilatation) << s;
    for (int n = 1; n <= 4; ++n) {
      auto r = dilatation(power(w(s), n), 16, 80);
      Interval scaled = *base.log_dilatation * Rational(n);
      EXPECT_TRUE(r.log_dilatation->overlaps(scaled)) << s << "^" << n;
    }
  }
}

TEST(Thurston, DeterminantOneExhaustive) {
  for (std::uint64_t mu : {2, 16, 64}) EXPECT_TRUE(mcg::verify::detail::determinants_are_one(10, mu)) << mu;
}

TEST(Thurston, TraceSymmetries) {
  for (std::uint64_t mu : {2, 64}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      mcg::for_each_cyclically_reduced(n, [&](const Word& x) {
        QuadReal t = evaluate(x, mu).trace();
        EXPECT_EQ(evaluate(x.inverse(), mu).trace(), t) << x;
        EXPECT_EQ(evaluate(x.swapped(), mu).trace(), t) << x;
        for (std::size_t k = 1; k < n; ++k) ASSERT_EQ(evaluate(x.rotated(k), mu).trace(), t) << x;
      });
    }
  }
}

TEST(DilatationFromTrace, RejectsNonHyperbolic) {
  EXPECT_THROW(dilatation_from_trace(rational(2, 64), 60), PreconditionError);
  EXPECT_THROW(dilatation_from_trace(QuadReal::sqrt_of(2), 60), PreconditionError);
}

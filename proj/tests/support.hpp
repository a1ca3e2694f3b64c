#pragma once

#include <gtest/gtest.h>

#include <string>

#include "mcg/mcg.hpp"

namespace mcg::testing {

inline Rational q(const char* s) { return parse_rational(s); }

inline Word w(const char* s) { return Word::parse(s); }

/// x meets the reference decimal widened by one unit in its last printed digit.
inline ::testing::AssertionResult encloses(const Interval& x, const char* reference) {
  std::string text(reference);
  auto dot = text.find('.');
  long digits = dot == std::string::npos ? 0 : static_cast<long>(text.size() - dot - 1);
  Rational r = parse_rational(text);
  Rational ulp = 1;
  for (long i = 0; i < digits; ++i) ulp /= 10;
  if (x.overlaps(Interval(r - ulp, r + ulp))) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << x << " does not contain " << reference;
}

template <class F>
::testing::AssertionResult throws_precondition(F&& f) {
  try {
    f();
  } catch (const PreconditionError&) {
    return ::testing::AssertionSuccess();
  } catch (const std::exception& e) {
    return ::testing::AssertionFailure() << "wrong exception: " << e.what();
  }
  return ::testing::AssertionFailure() << "no exception";
}

}  // namespace mcg::testing

#pragma once

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <utility>

#include "mcg/errors.hpp"
#include "mcg/rational.hpp"

namespace mcg {

/// Working precision (bits) used for transcendental functions unless a caller asks for more.
inline constexpr mpfr_prec_t kDefaultWorkingPrecision = 128;

enum class Rounding { down, up };

namespace detail {

/// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision) { mpfr_init2(value_, precision); }
  BigFloat(const BigFloat& other) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  BigFloat& operator=(const BigFloat& other) {
    if (this != &other) {
      mpfr_set_prec(value_, mpfr_get_prec(other.value_));
      mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
  }
  ~BigFloat() { mpfr_clear(value_); }

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  void assign(const Rational& q, mpfr_rnd_t rnd) { mpfr_set_q(value_, q.get_mpq_t(), rnd); }

  /// Exact: every finite binary float is a dyadic rational.
  Rational to_rational() const {
    if (!mpfr_number_p(value_)) throw ComputationError("non-finite value in certified arithmetic");
    Rational q;
    mpfr_get_q(q.get_mpq_t(), value_);
    return q;
  }

 private:
  mpfr_t value_;
};

inline mpfr_rnd_t to_mpfr(Rounding r) { return r == Rounding::down ? MPFR_RNDD : MPFR_RNDU; }

}  // namespace detail

/// Closed interval [lo, hi] with exact rational endpoints. Every operation
/// below returns an interval guaranteed to contain the true image.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational lower, Rational upper) : lo(std::move(lower)), hi(std::move(upper)) {
    if (lo > hi) throw PreconditionError("interval with lo > hi");
  }
  static Interval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational magnitude() const { return std::max(abs(lo), abs(hi)); }

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool overlaps(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
  /// lower < lo and hi < upper: the interval sits strictly inside (lower, upper).
  bool inside_open(const Rational& lower, const Rational& upper) const {
    return lower < lo && hi < upper;
  }
  /// width <= 2^-bits * max(1, |value|), measured against the smallest magnitude in the interval.
  bool relative_width_within(long bits) const {
    Rational scale = 1;
    if (lo > 1) scale = lo;
    if (hi < -1) scale = -hi;
    return width() <= pow2(-bits) * scale;
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

inline Interval operator-(const Interval& x) { return {-x.hi, -x.lo}; }
inline Interval operator+(const Interval& x, const Interval& y) { return {x.lo + y.lo, x.hi + y.hi}; }
inline Interval operator-(const Interval& x, const Interval& y) { return {x.lo - y.hi, x.hi - y.lo}; }

inline Interval operator*(const Interval& x, const Interval& y) {
  Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return {*mn, *mx};
}

inline Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains(Rational(0))) throw ComputationError("interval division by an interval containing 0");
  return x * Interval(1 / y.hi, 1 / y.lo);
}

inline Interval operator*(const Interval& x, const Rational& s) { return x * Interval::point(s); }
inline Interval operator/(const Interval& x, const Rational& s) { return x / Interval::point(s); }
inline Interval operator+(const Interval& x, const Rational& s) { return x + Interval::point(s); }

/// Hull of the pointwise minimum.
inline Interval min(const Interval& x, const Interval& y) {
  return {std::min(x.lo, y.lo), std::min(x.hi, y.hi)};
}

inline Interval hull(const Interval& x, const Interval& y) {
  return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
}

inline Interval intersect(const Interval& x, const Interval& y) {
  if (!x.overlaps(y)) throw ComputationError("disjoint intervals cannot be intersected");
  return {std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
}

namespace detail {

template <class MpfrFn>
Interval apply_increasing(const Interval& x, MpfrFn fn, mpfr_prec_t precision) {
  BigFloat lo(precision), hi(precision);
  lo.assign(x.lo, MPFR_RNDD);
  fn(lo.get(), lo.get(), MPFR_RNDD);
  hi.assign(x.hi, MPFR_RNDU);
  fn(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_rational(), hi.to_rational()};
}

}  // namespace detail

inline Interval log(const Interval& x, mpfr_prec_t precision = kDefaultWorkingPrecision) {
  if (x.lo <= 0) throw PreconditionError("log of an interval that is not strictly positive");
  return detail::apply_increasing(x, mpfr_log, precision);
}

inline Interval exp(const Interval& x, mpfr_prec_t precision = kDefaultWorkingPrecision) {
  return detail::apply_increasing(x, mpfr_exp, precision);
}

inline Interval sqrt(const Interval& x, mpfr_prec_t precision = kDefaultWorkingPrecision) {
  if (x.lo < 0) throw PreconditionError("sqrt of an interval with negative part");
  return detail::apply_increasing(x, mpfr_sqrt, precision);
}

inline Interval cbrt(const Interval& x, mpfr_prec_t precision = kDefaultWorkingPrecision) {
  return detail::apply_increasing(x, mpfr_cbrt, precision);
}

inline Interval log(const Rational& x, mpfr_prec_t precision = kDefaultWorkingPrecision) {
  return log(Interval::point(x), precision);
}

inline Interval sqrt(const Rational& x, mpfr_prec_t precision = kDefaultWorkingPrecision) {
  return sqrt(Interval::point(x), precision);
}

/// Nearest double in the given direction, so that to_double(x, down) <= x <= to_double(x, up).
inline double to_double(const Rational& x, Rounding direction) {
  detail::BigFloat f(53);
  f.assign(x, detail::to_mpfr(direction));
  return mpfr_get_d(f.get(), detail::to_mpfr(direction));
}

/// Fixed-point decimal with `digits` fractional digits, rounded in the given direction.
inline std::string format_fixed(const Rational& x, int digits, Rounding direction) {
  mpfr_prec_t precision = static_cast<mpfr_prec_t>(
      std::max<std::size_t>(bit_length(x.get_num()) + bit_length(x.get_den()), 64) + 4 * digits + 64);
  detail::BigFloat f(precision);
  f.assign(x, detail::to_mpfr(direction));
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*R*f", digits, detail::to_mpfr(direction), f.get()) < 0) {
    throw ComputationError("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

/// Scientific notation with `digits` significant fractional digits, rounded in the given direction.
inline std::string format_scientific(const Rational& x, int digits, Rounding direction) {
  mpfr_prec_t precision = static_cast<mpfr_prec_t>(4 * digits + 128);
  detail::BigFloat f(precision);
  f.assign(x, detail::to_mpfr(direction));
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*R*e", digits, detail::to_mpfr(direction), f.get()) < 0) {
    throw ComputationError("mpfr_asprintf failed");
  }
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Interval& x) {
  return os << '[' << format_scientific(x.lo, 15, Rounding::down) << ", "
            << format_scientific(x.hi, 15, Rounding::up) << ']';
}

}  // namespace mcg

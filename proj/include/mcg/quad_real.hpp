#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "mcg/errors.hpp"
#include "mcg/interval.hpp"
#include "mcg/rational.hpp"

namespace mcg {

/// Exact element a + b*sqrt(mu) of Q[sqrt(mu)], mu a nonnegative integer.
/// When mu is a perfect square the radical part is folded into the rational
/// part, so radical_part() == 0 for mu in {0, 1, 4, 9, ...}.
class QuadReal {
 public:
  QuadReal() = default;
  QuadReal(Rational rational_part, Rational radical_part, std::uint64_t radicand)
      : rational_(std::move(rational_part)), radical_(std::move(radical_part)), mu_(radicand), root_(-1) {
    Integer m(static_cast<unsigned long>(mu_));
    if (mpz_perfect_square_p(m.get_mpz_t()) != 0) {
      Integer r;
      mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
      root_ = static_cast<std::int64_t>(r.get_ui());
    }
    normalize();
  }

  static QuadReal from_rational(Rational r, std::uint64_t radicand) {
    return QuadReal(std::move(r), 0, radicand);
  }
  /// 0 + 1*sqrt(mu).
  static QuadReal sqrt_of(std::uint64_t radicand) { return QuadReal(0, 1, radicand); }

  const Rational& rational_part() const { return rational_; }
  const Rational& radical_part() const { return radical_; }
  std::uint64_t radicand() const { return mu_; }
  bool is_rational() const { return radical_ == 0; }
  /// True when sqrt(mu) is itself an integer.
  bool radicand_is_square() const { return root_ >= 0; }

  QuadReal conjugate() const { return with(rational_, -radical_); }

  QuadReal operator-() const { return with(-rational_, -radical_); }

  QuadReal& operator+=(const QuadReal& y) {
    check_radicand(y);
    rational_ += y.rational_;
    radical_ += y.radical_;
    return *this;
  }
  QuadReal& operator-=(const QuadReal& y) {
    check_radicand(y);
    rational_ -= y.rational_;
    radical_ -= y.radical_;
    return *this;
  }
  /// (a + b r)(c + d r) = (ac + bd mu) + (ad + bc) r, r = sqrt(mu).
  QuadReal& operator*=(const QuadReal& y) {
    check_radicand(y);
    if (radical_ == 0 && y.radical_ == 0) {
      rational_ *= y.rational_;
      return *this;
    }
    Rational a = rational_ * y.rational_ + radical_ * y.radical_ * Rational(Integer(static_cast<unsigned long>(mu_)));
    Rational b = rational_ * y.radical_ + radical_ * y.rational_;
    rational_ = std::move(a);
    radical_ = std::move(b);
    normalize();
    return *this;
  }
  QuadReal& operator*=(const Rational& s) {
    rational_ *= s;
    radical_ *= s;
    return *this;
  }

  friend QuadReal operator+(QuadReal x, const QuadReal& y) { return x += y; }
  friend QuadReal operator-(QuadReal x, const QuadReal& y) { return x -= y; }
  friend QuadReal operator*(QuadReal x, const QuadReal& y) { return x *= y; }
  friend QuadReal operator*(QuadReal x, const Rational& s) { return x *= s; }

  friend bool operator==(const QuadReal& x, const QuadReal& y) {
    return x.mu_ == y.mu_ && x.rational_ == y.rational_ && x.radical_ == y.radical_;
  }

  /// "a", "b*sqrt(mu)" or "a + b*sqrt(mu)" with integer-or-fraction coefficients.
  std::string str() const {
    if (radical_ == 0) return rational_.get_str();
    std::string rad = radical_ == 1    ? ""
                      : radical_ == -1 ? "-"
                                       : radical_.get_str() + "*";
    std::string tail = rad + "sqrt(" + std::to_string(mu_) + ")";
    if (rational_ == 0) return tail;
    if (radical_ < 0) {
      Rational mag = -radical_;
      std::string m = mag == 1 ? "" : mag.get_str() + "*";
      return rational_.get_str() + " - " + m + "sqrt(" + std::to_string(mu_) + ")";
    }
    return rational_.get_str() + " + " + tail;
  }

 private:
  QuadReal with(Rational a, Rational b) const {
    QuadReal out = *this;
    out.rational_ = std::move(a);
    out.radical_ = std::move(b);
    return out;
  }

  void check_radicand(const QuadReal& y) const {
    if (y.mu_ != mu_) {
      throw RadicandMismatch("radicand mismatch: sqrt(" + std::to_string(mu_) + ") vs sqrt(" +
                             std::to_string(y.mu_) + ")");
    }
  }

  void normalize() {
    if (root_ >= 0 && radical_ != 0) {
      rational_ += radical_ * Rational(Integer(static_cast<long>(root_)));
      radical_ = 0;
    }
  }

  Rational rational_;
  Rational radical_;
  std::uint64_t mu_ = 0;
  std::int64_t root_ = 0;  // sqrt(mu) when integral, else -1
};

namespace detail {
inline std::strong_ordering sign_ordering(int s) {
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}
}  // namespace detail

/// Exact sign of x - r. Uses rational arithmetic and a single squaring.
inline std::strong_ordering compare(const QuadReal& x, const Rational& r) {
  Rational d = x.rational_part() - r;
  const Rational& b = x.radical_part();
  int sd = sgn(d);
  int sb = sgn(b);
  if (sb == 0 || x.radicand() == 0) return detail::sign_ordering(sd);
  if (sd == 0) return detail::sign_ordering(sb);
  if (sd == sb) return detail::sign_ordering(sd);
  // Opposite signs: the term with the larger square wins.
  Rational d2 = d * d;
  Rational b2 = b * b * Rational(Integer(static_cast<unsigned long>(x.radicand())));
  int c = cmp(d2, b2);
  if (c == 0) return std::strong_ordering::equal;
  return detail::sign_ordering(c > 0 ? sd : sb);
}

inline std::strong_ordering compare(const QuadReal& x, const QuadReal& y) {
  return compare(x - y, Rational(0));
}

inline int sign(const QuadReal& x) {
  auto c = compare(x, Rational(0));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

inline QuadReal abs(const QuadReal& x) { return sign(x) < 0 ? -x : x; }

/// Certified enclosure with width <= 2^-precision_bits * max(1, |x|).
/// sqrt(mu) is bracketed by integer square roots of mu * 4^n.
inline Interval to_interval(const QuadReal& x, unsigned precision_bits) {
  if (precision_bits < 1) throw PreconditionError("precision_bits must be >= 1");
  const Rational& b = x.radical_part();
  if (b == 0 || x.radicand() == 0) return Interval::point(x.rational_part());

  long slack = static_cast<long>(bit_length(b.get_num())) - static_cast<long>(bit_length(b.get_den())) + 2;
  unsigned long n = precision_bits + static_cast<unsigned long>(std::max(0L, slack));

  Integer scaled(static_cast<unsigned long>(x.radicand()));
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * n);
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rational denom = pow2(static_cast<long>(n));
  Interval sqrt_mu(Rational(root) / denom, Rational(root + 1) / denom);
  return Interval::point(x.rational_part()) + sqrt_mu * b;
}

inline std::ostream& operator<<(std::ostream& os, const QuadReal& x) { return os << x.str(); }

}  // namespace mcg

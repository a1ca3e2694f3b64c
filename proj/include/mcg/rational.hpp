#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "mcg/errors.hpp"

namespace mcg {

using Integer = mpz_class;
using Rational = mpq_class;

/// n/d in canonical form.
inline Rational make_rational(const Integer& n, const Integer& d) {
  if (d == 0) throw PreconditionError("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Number of bits in |x|; 0 for x == 0.
inline std::size_t bit_length(const Integer& x) {
  if (x == 0) return 0;
  return mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Integer floor(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

inline Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

/// 2^e as an exact rational; e may be negative.
inline Rational pow2(long e) {
  Integer p = 1;
  if (e >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    return Rational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  return Rational(Integer(1), p);
}

inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// "p/q" with q >= 1 always written, e.g. "-62/1".
inline std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Parses "p", "p/q", or a decimal literal such as "-0.6931" or "1.5e-3".
/// Decimal input is converted exactly (0.1 is 1/10, not a binary approximation).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return PreconditionError("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num, den;
    if (num.set_str(std::string(text.substr(0, slash)), 10) != 0 ||
        den.set_str(std::string(text.substr(slash + 1)), 10) != 0 || den == 0) {
      throw fail();
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') throw fail();
    std::string exponent(text.substr(pos + 1));
    if (exponent.empty()) throw fail();
    try {
      std::size_t used = 0;
      scale += std::stol(exponent, &used);
      if (used != exponent.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational r = scale < 0 ? Rational(mantissa, ten_power) : Rational(mantissa * ten_power);
  r.canonicalize();
  return r;
}

}  // namespace mcg

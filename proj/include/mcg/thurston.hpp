#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "mcg/errors.hpp"
#include "mcg/interval.hpp"
#include "mcg/quad_real.hpp"
#include "mcg/word.hpp"

namespace mcg {

/// 2x2 matrix over Q[sqrt(mu)], stored row-major as [[p, q], [r, s]].
class TwistMatrix {
 public:
  TwistMatrix(QuadReal p, QuadReal q, QuadReal r, QuadReal s)
      : entries_{std::move(p), std::move(q), std::move(r), std::move(s)} {
    for (const auto& e : entries_) {
      if (e.radicand() != entries_[0].radicand()) throw RadicandMismatch("TwistMatrix entries disagree on mu");
    }
  }

  static TwistMatrix identity(std::uint64_t mu) {
    return {QuadReal::from_rational(1, mu), QuadReal::from_rational(0, mu), QuadReal::from_rational(0, mu),
            QuadReal::from_rational(1, mu)};
  }

  const QuadReal& operator()(int row, int col) const { return entries_[static_cast<std::size_t>(2 * row + col)]; }
  std::uint64_t radicand() const { return entries_[0].radicand(); }

  QuadReal trace() const { return entries_[0] + entries_[3]; }
  QuadReal determinant() const { return entries_[0] * entries_[3] - entries_[1] * entries_[2]; }

  bool is_scalar(int value) const {
    auto mu = radicand();
    return entries_[0] == QuadReal::from_rational(value, mu) && entries_[3] == entries_[0] &&
           entries_[1] == QuadReal::from_rational(0, mu) && entries_[2] == entries_[1];
  }
  /// +-Id, the identity of PSL_2.
  bool is_projective_identity() const { return is_scalar(1) || is_scalar(-1); }

  friend TwistMatrix operator*(const TwistMatrix& x, const TwistMatrix& y) {
    return {x(0, 0) * y(0, 0) + x(0, 1) * y(1, 0), x(0, 0) * y(0, 1) + x(0, 1) * y(1, 1),
            x(1, 0) * y(0, 0) + x(1, 1) * y(1, 0), x(1, 0) * y(0, 1) + x(1, 1) * y(1, 1)};
  }
  friend bool operator==(const TwistMatrix&, const TwistMatrix&) = default;

  /// In-place right multiplication by the image of a single letter.
  void apply(Letter l, const QuadReal& root_mu) {
    QuadReal t = sign(l) > 0 ? root_mu : -root_mu;
    if (generator(l) == Generator::A) {
      // [[1, t], [0, 1]]
      entries_[1] += entries_[0] * t;
      entries_[3] += entries_[2] * t;
    } else {
      // [[1, 0], [-t, 1]]
      entries_[0] -= entries_[1] * t;
      entries_[2] -= entries_[3] * t;
    }
  }

 private:
  std::array<QuadReal, 4> entries_;
};

struct GeneratorImages {
  TwistMatrix a;
  TwistMatrix b;
};

/// T_A -> [[1, sqrt(mu)], [0, 1]], T_B -> [[1, 0], [-sqrt(mu), 1]].
inline GeneratorImages generator_images(std::uint64_t mu) {
  if (mu == 0) throw PreconditionError("mu must be >= 1");
  QuadReal zero = QuadReal::from_rational(0, mu);
  QuadReal one = QuadReal::from_rational(1, mu);
  QuadReal root = QuadReal::sqrt_of(mu);
  return {TwistMatrix(one, root, zero, one), TwistMatrix(one, zero, -root, one)};
}

/// Product of generator images, left to right.
inline TwistMatrix evaluate(const Word& w, std::uint64_t mu) {
  if (mu == 0) throw PreconditionError("mu must be >= 1");
  TwistMatrix m = TwistMatrix::identity(mu);
  QuadReal root = QuadReal::sqrt_of(mu);
  for (Letter l : w.letters()) m.apply(l, root);
  return m;
}

enum class IsometryClass { identity, elliptic, parabolic, hyperbolic };

constexpr std::string_view to_string(IsometryClass c) {
  switch (c) {
    case IsometryClass::identity: return "identity";
    case IsometryClass::elliptic: return "elliptic";
    case IsometryClass::parabolic: return "parabolic";
    case IsometryClass::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

/// Compares |trace| with 2 exactly.
inline IsometryClass classify_trace(const QuadReal& trace) {
  auto upper = compare(trace, Rational(2));
  auto lower = compare(trace, Rational(-2));
  if (upper > 0 || lower < 0) return IsometryClass::hyperbolic;
  if (upper == 0 || lower == 0) return IsometryClass::parabolic;
  return IsometryClass::elliptic;
}

inline IsometryClass classify(const TwistMatrix& m) {
  if (m.is_projective_identity()) return IsometryClass::identity;
  return classify_trace(m.trace());
}

struct CertifiedDilatation {
  Interval lambda;
  Interval log_lambda;
};

/// lambda = (|t| + sqrt(t^2 - 4)) / 2 for |t| > 2, both lambda (relative) and
/// log lambda enclosed to width <= 2^-precision_bits * max(1, |value|).
inline CertifiedDilatation dilatation_from_trace(const QuadReal& trace, unsigned precision_bits) {
  if (precision_bits < 1) throw PreconditionError("precision_bits must be >= 1");
  if (classify_trace(trace) != IsometryClass::hyperbolic) {
    throw PreconditionError("dilatation requires |trace| > 2");
  }
  const QuadReal t = abs(trace);
  const QuadReal disc = t * t - QuadReal::from_rational(4, t.radicand());
  const long bits = static_cast<long>(precision_bits);

  for (unsigned long work = precision_bits + 32UL; work <= (1UL << 20); work *= 2) {
    auto prec = static_cast<mpfr_prec_t>(work + 32);
    Interval t_enc = to_interval(t, static_cast<unsigned>(work));
    Interval d_enc = to_interval(disc, static_cast<unsigned>(work));
    if (d_enc.lo < 0) d_enc.lo = 0;
    Interval lambda = (t_enc + sqrt(d_enc, prec)) / Rational(2);
    if (lambda.lo <= 1) continue;
    Interval log_lambda = log(lambda, prec);
    if (!lambda.relative_width_within(bits) || !log_lambda.relative_width_within(bits)) continue;

    // lambda + 1/lambda is increasing on (1, inf) and must reproduce |t|.
    Interval image(lambda.lo + 1 / lambda.lo, lambda.hi + 1 / lambda.hi);
    if (!image.overlaps(t_enc)) throw std::logic_error("certified dilatation fails lambda + 1/lambda = |t|");
    return {std::move(lambda), std::move(log_lambda)};
  }
  throw ComputationError("dilatation certification did not converge");
}

struct DilatationReport {
  Word word;
  std::uint64_t mu = 0;
  QuadReal trace;
  IsometryClass isometry_class = IsometryClass::identity;
  std::optional<Interval> dilatation;
  std::optional<Interval> log_dilatation;
  /// (1, -|trace|, 1): coefficients of lambda^2 - |t| lambda + 1 in PSL_2, present for rational traces.
  std::optional<std::array<Rational, 3>> char_poly;

  bool has_dilatation() const { return dilatation.has_value(); }
};

inline DilatationReport dilatation(const Word& w, std::uint64_t mu, unsigned precision_bits = 60) {
  if (precision_bits < 1) throw PreconditionError("precision_bits must be >= 1");
  TwistMatrix m = evaluate(w, mu);
  DilatationReport report;
  report.word = w;
  report.mu = mu;
  report.trace = m.trace();
  report.isometry_class = classify(m);
  if (report.trace.is_rational()) {
    report.char_poly = std::array<Rational, 3>{1, -abs(report.trace.rational_part()), 1};
  }
  if (report.isometry_class == IsometryClass::hyperbolic) {
    auto certified = dilatation_from_trace(report.trace, precision_bits);
    report.dilatation = std::move(certified.lambda);
    report.log_dilatation = std::move(certified.log_lambda);
  }
  return report;
}

}  // namespace mcg

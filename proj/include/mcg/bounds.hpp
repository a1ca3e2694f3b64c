#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcg/errors.hpp"
#include "mcg/interval.hpp"
#include "mcg/rational.hpp"

namespace mcg {

enum class BoundDirection {
  lower_bound_on_log_dilatation,
  upper_bound_on_log_dilatation,
  upper_bound_on_tau_c,
  lower_bound_on_intersection,
};

constexpr std::string_view to_string(BoundDirection d) {
  switch (d) {
    case BoundDirection::lower_bound_on_log_dilatation: return "lower_bound_on_log_dilatation";
    case BoundDirection::upper_bound_on_log_dilatation: return "upper_bound_on_log_dilatation";
    case BoundDirection::upper_bound_on_tau_c: return "upper_bound_on_tau_C";
    case BoundDirection::lower_bound_on_intersection: return "lower_bound_on_intersection";
  }
  return "unknown";
}

struct BoundResult {
  Interval value;
  BoundDirection direction = BoundDirection::lower_bound_on_log_dilatation;
  std::string validity_note;
  std::string binding_case;  // empty unless the bound is a minimum over cases
};

namespace detail {

inline constexpr mpfr_prec_t kBoundPrecision = 160;

inline const Rational& bound_tolerance() {
  static const Rational tol = make_rational(1, Integer("1000000000000"));
  return tol;
}

inline BoundResult certified(Interval value, BoundDirection direction, std::string note,
                             std::string binding_case = {}) {
  Rational scale = std::max(Rational(1), value.magnitude());
  if (value.width() > bound_tolerance() * scale) throw std::logic_error("bound interval wider than 1e-12 relative");
  return {std::move(value), direction, std::move(note), std::move(binding_case)};
}

inline Interval log_ratio(long numerator, long denominator) {
  return log(make_rational(numerator, denominator), kBoundPrecision);
}

/// log(2 + sqrt 3).
inline Interval log_two_plus_root_three() {
  return log(sqrt(Rational(3), kBoundPrecision) + Rational(2), kBoundPrecision);
}

}  // namespace detail

/// log(n/2)/j: lower bound on log lambda(f) when i(c, f^j(c)) >= n >= 3 for all c.
inline BoundResult surgery_lower(int n, int j) {
  if (n < 3) throw PreconditionError("surgery bound requires n >= 3");
  if (j != 1 && j != 2) throw PreconditionError("surgery bound is stated for j in {1, 2}");
  Interval v = detail::log_ratio(n, 2) / Rational(j);
  std::string power = j == 1 ? "f(c)" : "f^2(c)";
  return detail::certified(std::move(v), BoundDirection::lower_bound_on_log_dilatation,
                           "pseudo-Anosov f on a closed surface with i(c, " + power + ") >= " + std::to_string(n) +
                               " for every simple closed curve c");
}

/// log(n/4) for punctured surfaces, n >= 5.
inline BoundResult punctured_surgery_lower(int n) {
  if (n < 5) throw PreconditionError("punctured surgery bound requires n >= 5");
  return detail::certified(detail::log_ratio(n, 4), BoundDirection::lower_bound_on_log_dilatation,
                           "pseudo-Anosov f on a punctured surface with i(c, f(c)) >= " + std::to_string(n) +
                               " for every simple closed curve c");
}

/// x^3 + 2x^2 + x - 6, increasing for x > 0.
inline Rational torelli_cubic(const Rational& x) { return ((x + 2) * x + 1) * x - 6; }

inline Interval torelli_cubic(const Interval& x) {
  if (x.lo < 0) throw PreconditionError("cubic enclosure assumes x >= 0");
  return {torelli_cubic(x.lo), torelli_cubic(x.hi)};
}

/// The single real root of x^3 + 2x^2 + x - 6, enclosed twice: once through
/// the closed form -2/3 + (cbrt(82 - 9 sqrt 83) + cbrt(82 + 9 sqrt 83))/3,
/// once by exact rational bisection on [1, 2].
struct CubicRoot {
  Interval cardano;
  Interval bisection;

  Interval combined() const { return intersect(cardano, bisection); }
};

inline Interval cubic_root_cardano(unsigned precision_bits) {
  for (mpfr_prec_t prec = static_cast<mpfr_prec_t>(precision_bits) + 64;; prec *= 2) {
    Interval root83 = sqrt(Rational(83), prec);
    Interval minus = Interval::point(82) - root83 * Rational(9);
    Interval plus = Interval::point(82) + root83 * Rational(9);
    Interval root = (cbrt(minus, prec) + cbrt(plus, prec)) / Rational(3) + make_rational(-2, 3);
    if (root.width() <= pow2(-static_cast<long>(precision_bits))) return root;
    if (prec > (1 << 20)) throw ComputationError("Cardano enclosure did not converge");
  }
}

inline Interval cubic_root_bisection(unsigned precision_bits) {
  Rational lo = 1;
  Rational hi = 2;
  const Rational target = pow2(-static_cast<long>(precision_bits));
  while (hi - lo > target) {
    Rational mid = (lo + hi) / 2;
    int s = sgn(torelli_cubic(mid));
    if (s == 0) return Interval::point(mid);
    (s < 0 ? lo : hi) = mid;
  }
  return {lo, hi};
}

inline CubicRoot torelli_cubic_root(unsigned precision_bits) {
  if (precision_bits < 1) throw PreconditionError("precision_bits must be >= 1");
  CubicRoot out{cubic_root_cardano(precision_bits), cubic_root_bisection(precision_bits)};
  if (!out.cardano.overlaps(out.bisection)) throw std::logic_error("Cardano and bisection enclosures disagree");
  return out;
}

/// Case 1 of the Torelli lower bound: lambda(f) > sqrt 2.
inline BoundResult torelli_case1() {
  return detail::certified(log(sqrt(Rational(2), detail::kBoundPrecision), detail::kBoundPrecision),
                           BoundDirection::lower_bound_on_log_dilatation,
                           "Torelli case 1: i(c, f^2(c)) >= 4 for the shortest curve c, so lambda(f) > sqrt 2",
                           "case1_sqrt2");
}

/// Case 2: lambda(f) exceeds the real root of x^3 + 2x^2 + x - 6.
inline BoundResult torelli_case2() {
  Interval root = torelli_cubic_root(128).combined();
  return detail::certified(log(root, detail::kBoundPrecision), BoundDirection::lower_bound_on_log_dilatation,
                           "Torelli case 2: lambda(f)^3 + 2 lambda(f)^2 + lambda(f) - 6 > 0", "case2_cubic");
}

namespace detail {

inline BoundResult min_of_cases(std::initializer_list<BoundResult> cases, std::string note) {
  const BoundResult* best = nullptr;
  Interval value;
  for (const auto& c : cases) {
    value = best ? min(value, c.value) : c.value;
    if (!best || c.value.hi < best->value.lo) best = &c;
  }
  // The binding case must be certified strictly below every other case.
  for (const auto& c : cases) {
    if (&c != best && !(best->value.hi < c.value.lo)) {
      throw std::logic_error("cannot certify which case binds the minimum");
    }
  }
  return certified(std::move(value), BoundDirection::lower_bound_on_log_dilatation, std::move(note),
                   best->binding_case);
}

}  // namespace detail

/// min(log sqrt 2, log of the cubic root), i.e. the cubic case.
inline BoundResult torelli_lower() {
  return detail::min_of_cases({torelli_case1(), torelli_case2()},
                              "every pseudo-Anosov f in the Torelli group I(S_g), g >= 2");
}

/// Principal congruence subgroup Mod(S_g)[r], r >= 3. For r = 3 the case
/// i(c, f^2(c)) = 3 adds log(3/2)/2 to the candidates; the cubic case still binds.
inline BoundResult congruence_lower(int r) {
  if (r < 3) throw PreconditionError("congruence bound requires level r >= 3");
  std::string note = "every pseudo-Anosov f in Mod(S_g)[" + std::to_string(r) + "], g >= 2";
  if (r >= 4) return detail::min_of_cases({torelli_case1(), torelli_case2()}, std::move(note));
  BoundResult level3 = surgery_lower(3, 2);
  level3.binding_case = "case1_level3";
  return detail::min_of_cases({torelli_case1(), level3, torelli_case2()}, std::move(note));
}

inline BoundResult brunnian_lower(int p) {
  if (p < 5) throw PreconditionError("Brunnian bound requires p >= 5 punctures");
  BoundResult out = punctured_surgery_lower(p);
  out.validity_note = "every pseudo-Anosov f in Brun(S_{g,p}), g >= 0, p = " + std::to_string(p);
  return out;
}

/// Filling curves a, b on S_g meet at least 2g - 1 times.
inline int filling_intersection_lower(int g) {
  if (g < 2) throw PreconditionError("filling intersection bound requires genus >= 2");
  return 2 * g - 1;
}

/// 4 log(lambda) / log(g - 1/2), valid when lambda(f) <= g - 1/2.
inline BoundResult tau_cc_upper(int g, const Interval& log_lambda) {
  if (g < 2) throw PreconditionError("curve-complex bound requires genus >= 2");
  if (log_lambda.lo <= 0) throw PreconditionError("log dilatation of a pseudo-Anosov must be positive");
  Interval log_limit = log(make_rational(2 * g - 1, 2), detail::kBoundPrecision);
  if (!(log_lambda.hi <= log_limit.lo)) {
    throw HypothesisViolation("hypothesis lambda(f) <= g - 1/2 fails (or cannot be certified) for g = " +
                              std::to_string(g));
  }
  return detail::certified(log_lambda * Rational(4) / log_limit, BoundDirection::upper_bound_on_tau_c,
                           "pseudo-Anosov f in Mod(S_" + std::to_string(g) + ") with lambda(f) <= g - 1/2");
}

/// 4 log(2 + sqrt 3) / (g log(g - 1/2)).
inline BoundResult tau_cc_infs_upper(int g) {
  if (g < 3) throw PreconditionError("infimum curve-complex bound is implemented for genus >= 3");
  Interval log_limit = log(make_rational(2 * g - 1, 2), detail::kBoundPrecision);
  Interval v = detail::log_two_plus_root_three() * Rational(4) / (log_limit * Rational(g));
  return detail::certified(std::move(v), BoundDirection::upper_bound_on_tau_c,
                           "smallest asymptotic translation length on the curve complex of S_" + std::to_string(g));
}

/// log(2 + sqrt 3)/g.
inline BoundResult hk_upper(int g) {
  if (g < 2) throw PreconditionError("Hironaka-Kin bound requires genus >= 2");
  return detail::certified(detail::log_two_plus_root_three() / Rational(g), BoundDirection::upper_bound_on_log_dilatation,
                           "smallest log dilatation in Mod(S_" + std::to_string(g) + ")");
}

/// m(k) = log(B(k)/2) for a user-supplied B(k) >= 3.
inline BoundResult m_of_k(long b_value) {
  if (b_value < 3) throw PreconditionError("m(k) requires B(k) >= 3");
  return detail::certified(detail::log_ratio(b_value, 2), BoundDirection::lower_bound_on_log_dilatation,
                           "pseudo-Anosov f in N_k(S) when every curve c has i(c, f(c)) >= B(k) = " +
                               std::to_string(b_value));
}

enum class BoundKind {
  surgery,
  punctured_surgery,
  torelli,
  congruence,
  brunnian,
  filling_intersection,
  tau_cc,
  tau_cc_infs,
  hironaka_kin,
  m_of_k,
};

/// A single bound evaluation request. Exactly the parameters used by `kind` may be set.
struct BoundQuery {
  BoundKind kind = BoundKind::torelli;
  std::optional<int> genus;
  std::optional<int> intersections;  // n
  std::optional<int> power;          // j
  std::optional<int> level;          // r
  std::optional<int> punctures;      // p
  std::optional<int> depth;          // k, informational for m_of_k
  std::optional<long> b_value;       // B(k)
  std::optional<Interval> log_dilatation;
};

inline BoundResult evaluate(const BoundQuery& q) {
  struct Need {
    bool genus, intersections, power, level, punctures, depth, b_value, log_dilatation;
  };
  Need need{};
  switch (q.kind) {
    case BoundKind::surgery: need.intersections = need.power = true; break;
    case BoundKind::punctured_surgery: need.intersections = true; break;
    case BoundKind::torelli: break;
    case BoundKind::congruence: need.level = true; break;
    case BoundKind::brunnian: need.punctures = true; break;
    case BoundKind::filling_intersection:
    case BoundKind::tau_cc_infs:
    case BoundKind::hironaka_kin: need.genus = true; break;
    case BoundKind::tau_cc: need.genus = need.log_dilatation = true; break;
    case BoundKind::m_of_k: need.b_value = true; need.depth = q.depth.has_value(); break;
  }
  auto check = [](bool needed, bool present, const char* name) {
    if (needed != present) {
      throw PreconditionError(std::string(needed ? "missing" : "unexpected") + " parameter '" + name + "'");
    }
  };
  check(need.genus, q.genus.has_value(), "genus");
  check(need.intersections, q.intersections.has_value(), "n");
  check(need.power, q.power.has_value(), "j");
  check(need.level, q.level.has_value(), "r");
  check(need.punctures, q.punctures.has_value(), "p");
  check(need.depth, q.depth.has_value(), "k");
  check(need.b_value, q.b_value.has_value(), "B");
  check(need.log_dilatation, q.log_dilatation.has_value(), "log_lambda");

  switch (q.kind) {
    case BoundKind::surgery: return surgery_lower(*q.intersections, *q.power);
    case BoundKind::punctured_surgery: return punctured_surgery_lower(*q.intersections);
    case BoundKind::torelli: return torelli_lower();
    case BoundKind::congruence: return congruence_lower(*q.level);
    case BoundKind::brunnian: return brunnian_lower(*q.punctures);
    case BoundKind::filling_intersection:
      return {Interval::point(filling_intersection_lower(*q.genus)), BoundDirection::lower_bound_on_intersection,
              "filling simple closed curves a, b on S_" + std::to_string(*q.genus), ""};
    case BoundKind::tau_cc: return tau_cc_upper(*q.genus, *q.log_dilatation);
    case BoundKind::tau_cc_infs: return tau_cc_infs_upper(*q.genus);
    case BoundKind::hironaka_kin: return hk_upper(*q.genus);
    case BoundKind::m_of_k: return m_of_k(*q.b_value);
  }
  throw std::logic_error("unhandled bound kind");
}

}  // namespace mcg

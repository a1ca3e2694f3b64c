#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mcg/bounds.hpp"
#include "mcg/curve_families.hpp"
#include "mcg/johnson.hpp"
#include "mcg/json_io.hpp"
#include "mcg/search.hpp"
#include "mcg/thurston.hpp"
#include "mcg/word.hpp"

namespace mcg::verify {

/// Checks that do not share code paths with the library routines they audit.
namespace oracle {

struct IntMat2 {
  long long p, q, r, s;
};

/// Image of the word under plain 64-bit integer products of [[1, root], [0, 1]]
/// and [[1, 0], [-root, 1]] and their inverses. Throws on overflow.
inline IntMat2 integer_image(std::string_view word, long long root) {
  auto mul_add = [](long long x1, long long y1, long long x2, long long y2) {
    long long u, v, out;
    if (__builtin_mul_overflow(x1, y1, &u) || __builtin_mul_overflow(x2, y2, &v) || __builtin_add_overflow(u, v, &out)) {
      throw ComputationError("oracle: integer overflow");
    }
    return out;
  };
  IntMat2 m{1, 0, 0, 1};
  for (char c : word) {
    IntMat2 g{1, 0, 0, 1};
    switch (c) {
      case 'a': g = {1, root, 0, 1}; break;
      case 'A': g = {1, -root, 0, 1}; break;
      case 'b': g = {1, 0, -root, 1}; break;
      case 'B': g = {1, 0, root, 1}; break;
      default: throw PreconditionError("oracle: bad letter");
    }
    m = {mul_add(m.p, g.p, m.q, g.r), mul_add(m.p, g.q, m.q, g.s), mul_add(m.r, g.p, m.s, g.r),
         mul_add(m.r, g.q, m.s, g.s)};
  }
  return m;
}

inline long long integer_trace(std::string_view word, long long root) {
  IntMat2 m = integer_image(word, root);
  return m.p + m.s;
}

inline bool is_inverse_pair(char x, char y) { return x != y && (x ^ 0x20) == y; }

/// Free reduction by repeated scanning for adjacent x x^-1 pairs.
inline std::string free_reduce(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (is_inverse_pair(w[i], w[i + 1])) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

/// Every cyclically reduced string of the given length, by filtering all 4^n strings.
inline std::vector<std::string> all_cyclically_reduced(std::size_t length) {
  std::vector<std::string> out;
  std::string w(length, 'a');
  const char letters[4] = {'a', 'b', 'A', 'B'};
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = 0; i < length; ++i, c /= 4) w[i] = letters[c % 4];
    if (free_reduce(w).size() != length) continue;
    if (length > 1 && is_inverse_pair(w.front(), w.back())) continue;
    out.push_back(w);
  }
  return out;
}

struct BruteMinimum {
  long long abs_trace = 0;
  std::set<std::string> words;
  std::size_t words_examined = 0;
};

/// Minimum |trace| > 2 over all cyclically reduced words up to max_length, no symmetry reduction.
inline BruteMinimum brute_force_minimum(std::size_t max_length, long long root) {
  BruteMinimum best;
  best.abs_trace = -1;
  for (std::size_t n = 1; n <= max_length; ++n) {
    for (const auto& w : all_cyclically_reduced(n)) {
      ++best.words_examined;
      long long t = integer_trace(w, root);
      long long a = t < 0 ? -t : t;
      if (a <= 2) continue;
      if (best.abs_trace < 0 || a < best.abs_trace) {
        best.abs_trace = a;
        best.words.clear();
      }
      if (a == best.abs_trace) best.words.insert(w);
    }
  }
  return best;
}

}  // namespace oracle

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double elapsed_ms = 0;
  double budget_ms = 0;
};

namespace detail {

inline Rational dec(const char* s) { return parse_rational(s); }

inline std::string show(const Interval& x) {
  std::ostringstream os;
  os << '[' << format_fixed(x.lo, 10, Rounding::down) << ", " << format_fixed(x.hi, 10, Rounding::up) << ']';
  return os.str();
}

struct Checker {
  bool ok = true;
  std::ostringstream notes;
  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      notes << "FAILED: " << what << "; ";
    }
  }
  void note(const std::string& what) { notes << what << "; "; }
};

inline CriterionResult timed(int id, std::string title, double budget_ms, const std::function<void(Checker&)>& body) {
  Checker c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_ms) c.require(false, "time budget exceeded");
  return {id, std::move(title), c.ok, c.notes.str(), elapsed, budget_ms};
}

}  // namespace detail

inline CriterionResult criterion_trace_identity() {
  return detail::timed(1, "Trace identity: evaluate(ab, 64) has trace -62 and det 1", 1.0, [](detail::Checker& c) {
    TwistMatrix m = evaluate(Word::parse("ab"), 64);
    c.require(m.trace() == QuadReal::from_rational(-62, 64), "trace == -62");
    c.require(m.determinant() == QuadReal::from_rational(1, 64), "det == 1");
    c.note("trace " + m.trace().str());
  });
}

inline CriterionResult criterion_torelli_upper() {
  return detail::timed(2, "Torelli upper bound: log lambda(ab, 64) in (4.1268, 4.1269), < 4.127", 10.0,
                       [](detail::Checker& c) {
                         auto r = dilatation(Word::parse("ab"), 64);
                         c.require(r.log_dilatation.has_value(), "hyperbolic");
                         const Interval& l = *r.log_dilatation;
                         c.require(l.inside_open(detail::dec("4.1268"), detail::dec("4.1269")), "log lambda in (4.1268, 4.1269)");
                         c.require(l.hi < detail::dec("4.127"), "log lambda < 4.127");
                         c.require(l.width() <= detail::dec("1e-9"), "width <= 1e-9");
                         c.require(r.char_poly && (*r.char_poly)[0] == 1 && (*r.char_poly)[1] == -62 && (*r.char_poly)[2] == 1,
                                   "char poly lambda^2 - 62 lambda + 1");
                         c.note("log lambda " + detail::show(l));
                       });
}

inline CriterionResult criterion_braid_upper() {
  return detail::timed(3, "Braid upper bound: trace -14 at mu 16, log lambda in (2.6339, 2.6340) < 2.634", 10.0,
                       [](detail::Checker& c) {
                         auto r = dilatation(Word::parse("ab"), 16);
                         c.require(r.trace == QuadReal::from_rational(-14, 16), "trace == -14");
                         c.require(r.log_dilatation.has_value(), "hyperbolic");
                         const Interval& l = *r.log_dilatation;
                         c.require(l.inside_open(detail::dec("2.6339"), detail::dec("2.6340")), "log lambda in (2.6339, 2.6340)");
                         c.require(l.hi < detail::dec("2.634"), "log lambda < 2.634");
                         c.require(l.width() <= detail::dec("1e-9"), "width <= 1e-9");
                         c.note("log lambda " + detail::show(l));
                       });
}

inline CriterionResult criterion_pf_certificate() {
  return detail::timed(4, "PF certificate: NN^t has PF eigenvalue 64 (torelli, g=2..64) and 16 (braid)", 1000.0,
                       [](detail::Checker& c) {
                         auto check = [&](const IntersectionFamily& f, long expected) {
                           PFResult pf = pf_eigenvalue(nnt(f), detail::dec("1e-9"));
                           bool ones = std::all_of(pf.eigenvector.begin(), pf.eigenvector.end(),
                                                   [](const Rational& x) { return x == 1; });
                           c.require(pf.exact && pf.value_lower == expected && pf.value_upper == expected && ones,
                                     std::string(to_string(f.kind)) + " g=" + std::to_string(f.genus));
                         };
                         for (int g = 2; g <= 64; ++g) check(torelli_family(g), 64);
                         for (int g = 1; g <= 64; ++g) check(braid_family(g), 16);
                       });
}

inline CriterionResult criterion_torelli_lower() {
  return detail::timed(5, "Torelli lower bound: cubic root in (1.21878, 1.21879), log root in (0.19785, 0.19786) > .197",
                       10.0, [](detail::Checker& c) {
                         CubicRoot root = torelli_cubic_root(64);
                         const Rational lo = detail::dec("1.21878"), hi = detail::dec("1.21879");
                         c.require(root.cardano.inside_open(lo, hi), "Cardano root in (1.21878, 1.21879)");
                         c.require(root.bisection.inside_open(lo, hi), "bisection root in (1.21878, 1.21879)");
                         c.require(root.cardano.width() <= detail::dec("1e-9") && root.bisection.width() <= detail::dec("1e-9"),
                                   "width <= 1e-9");
                         c.require(root.cardano.hi > detail::dec("1.218"), "root exceeds 1.218");
                         Interval l = log(root.combined());
                         c.require(l.inside_open(detail::dec("0.19785"), detail::dec("0.19786")), "log root in (0.19785, 0.19786)");
                         c.require(l.lo > detail::dec("0.197"), "log root > .197");
                         c.note("Cardano " + detail::show(root.cardano) + ", bisection " + detail::show(root.bisection) +
                                ", log " + detail::show(l));
                       });
}

inline CriterionResult criterion_johnson_congruence() {
  return detail::timed(6, "Johnson/congruence: surgery(4,1) = log 2 > .693, surgery(3,2) in (0.20273, 0.20274), congruence(3) > .197",
                       10.0, [](detail::Checker& c) {
                         BoundResult s41 = surgery_lower(4, 1);
                         Interval log2 = log(Rational(2));
                         c.require(s41.value.overlaps(log2) && s41.value.width() <= detail::dec("1e-12"), "surgery(4,1) = log 2");
                         c.require(s41.value.lo > detail::dec("0.693"), "log 2 > .693");
                         BoundResult s32 = surgery_lower(3, 2);
                         c.require(s32.value.inside_open(detail::dec("0.20273"), detail::dec("0.20274")),
                                   "surgery(3,2) in (0.20273, 0.20274)");
                         BoundResult cong = congruence_lower(3);
                         c.require(cong.value.lo > detail::dec("0.197"), "congruence(3) > .197");
                         c.note("surgery(3,2) " + detail::show(s32.value) + ", congruence(3) " + detail::show(cong.value) +
                                " via " + cong.binding_case);
                       });
}

inline CriterionResult criterion_brunnian() {
  return detail::timed(7, "Brunnian/punctured: brunnian(p) = punctured(p) = log(p/4) for p = 5..100", 10.0,
                       [](detail::Checker& c) {
                         for (int p = 5; p <= 100; ++p) {
                           BoundResult b = brunnian_lower(p);
                           BoundResult q = punctured_surgery_lower(p);
                           Interval direct = log(Rational(p)) - log(Rational(4));
                           c.require(b.value == q.value && b.value.overlaps(direct), "p=" + std::to_string(p));
                         }
                         c.require(brunnian_lower(5).value.inside_open(detail::dec("0.22314"), detail::dec("0.22315")),
                                   "p=5 in (0.22314, 0.22315)");
                       });
}

inline CriterionResult criterion_curve_complex() {
  return detail::timed(8, "Curve complex: tau_cc_infs_upper(3) in (1.91624, 1.91625); hypothesis enforced", 10.0,
                       [](detail::Checker& c) {
                         BoundResult infs = tau_cc_infs_upper(3);
                         c.require(infs.value.inside_open(detail::dec("1.91624"), detail::dec("1.91625")),
                                   "tau_cc_infs_upper(3) in (1.91624, 1.91625)");
                         c.note("tau_cc_infs_upper(3) = " + detail::show(infs.value));
                         bool rejected = false;
                         try {
                           tau_cc_upper(2, Interval::point(1));
                         } catch (const HypothesisViolation&) {
                           rejected = true;
                         }
                         c.require(rejected, "g=2, log lambda = 1 rejected as hypothesis violation");
                       });
}

inline CriterionResult criterion_minimality() {
  return detail::timed(9, "Minimality: search(8, 64) finds the ab class as unique minimum (brute-force audited)", 60000.0,
                       [](detail::Checker& c) {
                         SearchReport single = min_dilatation_search(8, 64, 1);
                         c.require(single.all_minima.size() == 1 && single.all_minima.front() == Word::parse("ab"),
                                   "unique minimum class ab");
                         auto brute = oracle::brute_force_minimum(8, 8);
                         std::set<std::string> ab_orbit{"ab", "ba", "AB", "BA"};
                         c.require(brute.words == ab_orbit, "brute-force minimizers are exactly the ab orbit");
                         c.require(abs(single.minimum.trace) == QuadReal::from_rational(static_cast<long>(brute.abs_trace), 64),
                                   "search |trace| equals brute-force minimum");
                         SearchReport parallel = min_dilatation_search(8, 64, 4);
                         c.require(to_json(parallel).dump() == to_json(single).dump(), "identical report under 4 jobs");
                         c.note("|trace| " + std::to_string(brute.abs_trace) + ", " + std::to_string(single.classes_examined) +
                                " classes vs " + std::to_string(brute.words_examined) + " words");
                       });
}

inline CriterionResult criterion_lcs_table() {
  return detail::timed(10, "LCS table: lcs_table(8, 64) lengths 2^k, row 2 trace 4098, all hyperbolic", 1000.0,
                       [](detail::Checker& c) {
                         auto rows = lcs_table(8, 64);
                         c.require(rows.size() == 8, "8 rows");
                         for (const auto& r : rows) {
                           std::string k = "k=" + std::to_string(r.depth);
                           c.require(r.word_length == (std::size_t{1} << r.depth), k + " length 2^k");
                           c.require(r.isometry_class == IsometryClass::hyperbolic, k + " hyperbolic");
                           c.require(r.log_dilatation && r.log_dilatation->lo > 0, k + " positive finite log lambda");
                         }
                         c.require(rows.size() >= 2 && rows[1].trace == QuadReal::from_rational(4098, 64), "row 2 trace 4098");
                         c.require(oracle::integer_trace("abAB", 8) == 4098, "oracle trace of abAB is 4098");
                         for (int g = 2; g <= 64; ++g) {
                           c.require(thurston_mu(torelli_family(g)) == std::uint64_t{64}, "mu = 64 at g=" + std::to_string(g));
                         }
                       });
}

/// Basis independence at genus 3: two symplectic bases of the same quotient give the same tau.
inline bool tau_basis_independent_genus3() {
  const int g = 3;
  auto x = [](int i) { return HomologyClass::x(g, i); };
  auto y = [](int i) { return HomologyClass::y(g, i); };
  Wedge3Coset base = tau_bounding_pair(g, {{x(2), y(2)}}, x(1));
  Wedge3Coset shifted = tau_bounding_pair(g, {{x(2) + x(1), y(2) - 3 * x(1)}}, x(1));
  Wedge3Coset sheared = tau_bounding_pair(g, {{x(2) + y(2), y(2)}}, x(1));
  Wedge3Coset swapped = tau_bounding_pair(g, {{y(2), -x(2)}}, x(1));
  return coset_equal(base, shifted) && coset_equal(base, sheared) && coset_equal(base, swapped);
}

inline CriterionResult criterion_johnson_tau() {
  return detail::timed(11, "Johnson tau: lantern_check(3), lantern_check(4); quotient ranks; basis independence", 5000.0,
                       [](detail::Checker& c) {
                         c.require(lantern_check(3), "lantern_check(3)");
                         c.require(lantern_check(4), "lantern_check(4)");
                         for (int g = 2; g <= 4; ++g) {
                           std::size_t n = static_cast<std::size_t>(2 * g);
                           c.require(quotient_rank(g) == n * (n - 1) * (n - 2) / 6 - n, "quotient rank at g=" + std::to_string(g));
                         }
                         c.require(tau_basis_independent_genus3(), "basis independence at g=3");
                       });
}

namespace detail {

/// det == 1 for every cyclically reduced word up to max_length, by depth-first prefix products.
inline bool determinants_are_one(std::size_t max_length, std::uint64_t mu) {
  const QuadReal one = QuadReal::from_rational(1, mu);
  const QuadReal root = QuadReal::sqrt_of(mu);
  std::vector<Letter> prefix;
  bool ok = true;
  std::function<void(const TwistMatrix&)> visit = [&](const TwistMatrix& m) {
    if (!ok) return;
    if (!prefix.empty() && prefix.front() != inverse(prefix.back()) && !(m.determinant() == one)) ok = false;
    if (prefix.size() == max_length) return;
    for (Letter l : kAllLetters) {
      if (!prefix.empty() && l == inverse(prefix.back())) continue;
      TwistMatrix next = m;
      next.apply(l, root);
      prefix.push_back(l);
      visit(next);
      prefix.pop_back();
    }
  };
  visit(TwistMatrix::identity(mu));
  return ok;
}

}  // namespace detail

inline CriterionResult criterion_properties() {
  return detail::timed(12, "Property suites: free reduction, det = 1, trace symmetries, Collatz-Wielandt, wedge alternation",
                       120000.0, [](detail::Checker& c) {
                         // Free-reduction idempotence and agreement with the scanning oracle, all sequences of length <= 12.
                         bool idempotent = true;
                         std::vector<Letter> seq;
                         for (std::size_t n = 0; n <= 12 && idempotent; ++n) {
                           std::size_t total = std::size_t{1} << (2 * n);
                           seq.assign(n, Letter::a);
                           for (std::size_t code = 0; code < total; ++code) {
                             std::size_t x = code;
                             for (std::size_t i = 0; i < n; ++i, x >>= 2) seq[i] = kAllLetters[x & 3U];
                             Word w = reduce(seq);
                             if (!(reduce(w.letters()) == w)) {
                               idempotent = false;
                               break;
                             }
                           }
                         }
                         c.require(idempotent, "reduce idempotent on all sequences of length <= 12");

                         for (std::uint64_t mu : {2, 16, 64}) {
                           c.require(detail::determinants_are_one(10, mu), "det = 1, length <= 10, mu=" + std::to_string(mu));
                         }

                         bool symmetric = true;
                         for (std::size_t n = 1; n <= 8 && symmetric; ++n) {
                           for_each_cyclically_reduced(n, [&](const Word& w) {
                             if (!symmetric) return;
                             QuadReal t = evaluate(w, 2).trace();
                             if (!(evaluate(w.inverse(), 2).trace() == t) || !(evaluate(w.swapped(), 2).trace() == t)) {
                               symmetric = false;
                             }
                             for (std::size_t k = 1; k < n && symmetric; ++k)
                               if (!(evaluate(w.rotated(k), 2).trace() == t)) symmetric = false;
                           });
                         }
                         c.require(symmetric, "trace invariant under rotation, inversion and swap (length <= 8, mu=2)");

                         std::mt19937_64 rng(20240601);
                         std::uniform_int_distribution<int> entry(1, 50);
                         bool sound = true;
                         for (int trial = 0; trial < 100 && sound; ++trial) {
                           IntMatrix m(5, 5);
                           double dm[5][5];
                           for (std::size_t i = 0; i < 5; ++i)
                             for (std::size_t j = 0; j < 5; ++j) {
                               int e = entry(rng);
                               m(i, j) = e;
                               dm[i][j] = e;
                             }
                           // Reference: plain double power iteration.
                           double v[5] = {1, 1, 1, 1, 1}, rho = 0;
                           for (int it = 0; it < 2000; ++it) {
                             double w[5] = {0, 0, 0, 0, 0}, norm = 0;
                             for (int i = 0; i < 5; ++i)
                               for (int j = 0; j < 5; ++j) w[i] += dm[i][j] * v[j];
                             for (double x : w) norm = std::max(norm, x);
                             rho = norm;
                             for (int i = 0; i < 5; ++i) v[i] = w[i] / norm;
                           }
                           CollatzWielandtIteration iter(m);
                           Rational prev_lo = iter.lower(), prev_hi = iter.upper();
                           for (int step = 0; step < 40; ++step) {
                             iter.step();
                             if (iter.lower() < prev_lo || iter.upper() > prev_hi) sound = false;
                             prev_lo = iter.lower();
                             prev_hi = iter.upper();
                           }
                           Rational slack = detail::dec("1e-9") * 1000;
                           if (!(iter.lower() - slack <= Rational(rho) && Rational(rho) <= iter.upper() + slack)) sound = false;
                         }
                         c.require(sound, "Collatz-Wielandt brackets monotone and contain the power-iteration limit");

                         std::uniform_int_distribution<int> coeff(-5, 5);
                         bool alternating = true;
                         for (int trial = 0; trial < 200 && alternating; ++trial) {
                           auto random_class = [&] {
                             std::vector<long> v(6);
                             for (auto& x : v) x = coeff(rng);
                             return HomologyClass(3, v);
                           };
                           HomologyClass h1 = random_class(), h2 = random_class(), h3 = random_class();
                           Wedge3Coset base = wedge3(h1, h2, h3);
                           Wedge3Coset neg = -base;
                           alternating = wedge3(h2, h1, h3).representative() == neg.representative() &&
                                         wedge3(h1, h3, h2).representative() == neg.representative() &&
                                         wedge3(h3, h2, h1).representative() == neg.representative() &&
                                         wedge3(h2, h3, h1).representative() == base.representative() &&
                                         wedge3(h3, h1, h2).representative() == base.representative();
                         }
                         c.require(alternating, "wedge3 alternating under all permutations");
                       });
}

inline std::vector<std::function<CriterionResult()>> criteria() {
  return {criterion_trace_identity, criterion_torelli_upper,     criterion_braid_upper,  criterion_pf_certificate,
          criterion_torelli_lower,  criterion_johnson_congruence, criterion_brunnian,     criterion_curve_complex,
          criterion_minimality,     criterion_lcs_table,          criterion_johnson_tau,  criterion_properties};
}

inline std::string format_row(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << " (" << std::fixed;
  os.precision(2);
  os << r.elapsed_ms << " ms / budget " << r.budget_ms << " ms)";
  if (!r.detail.empty()) os << "\n       " << r.detail;
  return os.str();
}

}  // namespace mcg::verify

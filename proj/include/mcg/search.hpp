#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mcg/errors.hpp"
#include "mcg/thurston.hpp"
#include "mcg/word.hpp"

namespace mcg {

/// Lexicographically least word in the orbit of a cyclically reduced word
/// under cyclic rotation, inversion and the swap a <-> b. The orbit is
/// generated explicitly; no normal form is assumed.
inline Word canonical_representative(const Word& w) {
  if (!w.is_cyclically_reduced()) throw PreconditionError("orbit representatives need a cyclically reduced word");
  Word best = w;
  const Word inv = w.inverse();
  for (const Word* base : {&w, &inv}) {
    for (const Word& variant : {*base, base->swapped()}) {
      for (std::size_t k = 0; k < variant.length(); ++k) {
        Word r = variant.rotated(k);
        if (r < best) best = std::move(r);
      }
    }
  }
  return best;
}

/// Calls fn on every cyclically reduced word of exactly the given length, in lexicographic order.
template <class Fn>
void for_each_cyclically_reduced(std::size_t length, Fn&& fn) {
  if (length == 0) return;
  std::vector<Letter> buffer(length);
  std::vector<std::uint8_t> choice(length, 0);
  std::size_t depth = 0;
  while (true) {
    if (choice[depth] == 4) {
      if (depth == 0) return;
      choice[depth] = 0;
      --depth;
      ++choice[depth];
      continue;
    }
    Letter l = kAllLetters[choice[depth]];
    bool ok = depth == 0 || l != inverse(buffer[depth - 1]);
    if (ok && depth + 1 == length && length > 1) ok = l != inverse(buffer[0]);
    if (!ok) {
      ++choice[depth];
      continue;
    }
    buffer[depth] = l;
    if (depth + 1 == length) {
      fn(reduce(buffer));
      ++choice[depth];
    } else {
      ++depth;
    }
  }
}

/// One representative per symmetry orbit of cyclically reduced words of
/// length 1..max_length, ordered by length then lexicographically.
inline std::vector<Word> enumerate_classes(std::size_t max_length) {
  if (max_length < 1) throw PreconditionError("max_length must be >= 1");
  std::vector<Word> out;
  for (std::size_t n = 1; n <= max_length; ++n) {
    for_each_cyclically_reduced(n, [&](Word w) {
      if (canonical_representative(w) == w) out.push_back(std::move(w));
    });
  }
  return out;
}

struct SearchReport {
  std::uint64_t mu = 0;
  std::size_t max_length = 0;
  std::size_t classes_examined = 0;
  DilatationReport minimum;
  std::vector<Word> all_minima;
};

namespace detail {

struct PartialMinimum {
  std::optional<QuadReal> best;  // smallest |trace| seen among hyperbolic classes
  std::vector<Word> words;
  std::size_t examined = 0;

  void offer(const QuadReal& abs_trace, const Word& w) {
    if (!best || compare(abs_trace, *best) < 0) {
      best = abs_trace;
      words.assign(1, w);
    } else if (compare(abs_trace, *best) == 0) {
      words.push_back(w);
    }
  }

  /// Associative and commutative; ties keep every word.
  void merge(const PartialMinimum& other) {
    examined += other.examined;
    if (!other.best) return;
    if (!best || compare(*other.best, *best) < 0) {
      best = other.best;
      words = other.words;
    } else if (compare(*other.best, *best) == 0) {
      words.insert(words.end(), other.words.begin(), other.words.end());
    }
  }
};

}  // namespace detail

/// Minimizes |trace| (equivalently lambda) over hyperbolic classes of length
/// <= max_length. Work is strided over `jobs` threads; the reduction is
/// order-independent, so the report does not depend on scheduling.
inline SearchReport min_dilatation_search(std::size_t max_length, std::uint64_t mu, unsigned jobs = 1,
                                          unsigned precision_bits = 60) {
  if (max_length < 2) throw PreconditionError("search needs max_length >= 2");
  if (mu < 1) throw PreconditionError("mu must be >= 1");
  if (jobs < 1) throw PreconditionError("jobs must be >= 1");

  const std::vector<Word> classes = enumerate_classes(max_length);
  std::vector<detail::PartialMinimum> partials(jobs);
  auto work = [&](unsigned worker) {
    auto& partial = partials[worker];
    for (std::size_t i = worker; i < classes.size(); i += jobs) {
      ++partial.examined;
      TwistMatrix m = evaluate(classes[i], mu);
      if (classify(m) != IsometryClass::hyperbolic) continue;
      partial.offer(abs(m.trace()), classes[i]);
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, t);
  }

  detail::PartialMinimum total;
  for (const auto& p : partials) total.merge(p);
  if (!total.best) {
    throw ComputationError("no hyperbolic class of length <= " + std::to_string(max_length) +
                           " for mu = " + std::to_string(mu));
  }
  std::sort(total.words.begin(), total.words.end());

  SearchReport report;
  report.mu = mu;
  report.max_length = max_length;
  report.classes_examined = total.examined;
  report.all_minima = std::move(total.words);
  report.minimum = dilatation(report.all_minima.front(), mu, precision_bits);
  return report;
}

/// One row of the lower-central-series table: w(k) lies in the (k-1)st
/// term of the LCS, and its log dilatation is an upper bound M(k) valid
/// for every genus carrying the multicurve family with this mu.
struct LcsRow {
  int depth = 0;
  Word word;
  std::size_t word_length = 0;
  QuadReal trace;
  IsometryClass isometry_class = IsometryClass::identity;
  std::optional<Interval> log_dilatation;
};

inline std::vector<LcsRow> lcs_table(int k_max, std::uint64_t mu, unsigned precision_bits = 60) {
  if (k_max < 1) throw PreconditionError("k_max must be >= 1");
  if (mu < 1) throw PreconditionError("mu must be >= 1");
  std::vector<LcsRow> rows;
  Word w;
  for (int k = 1; k <= k_max; ++k) {
    w = k == 1 ? nested_commutator(1) : commutator(w, Word::parse("b"));
    DilatationReport r = dilatation(w, mu, precision_bits);
    rows.push_back({k, w, w.length(), r.trace, r.isometry_class, r.log_dilatation});
  }
  return rows;
}

}  // namespace mcg

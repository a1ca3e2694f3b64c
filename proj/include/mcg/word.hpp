#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcg/errors.hpp"

namespace mcg {

enum class Generator : std::uint8_t { A = 0, B = 1 };

/// One of the four letters T_A, T_B, T_A^-1, T_B^-1. The enumerator order
/// (a < b < A < B) is the lexicographic order used for canonical representatives.
enum class Letter : std::uint8_t { a = 0, b = 1, A = 2, B = 3 };

inline constexpr std::array<Letter, 4> kAllLetters{Letter::a, Letter::b, Letter::A, Letter::B};

constexpr Generator generator(Letter l) {
  return (static_cast<std::uint8_t>(l) & 1U) != 0 ? Generator::B : Generator::A;
}
constexpr int sign(Letter l) { return (static_cast<std::uint8_t>(l) & 2U) != 0 ? -1 : 1; }
constexpr Letter make_letter(Generator g, int s) {
  return static_cast<Letter>(static_cast<std::uint8_t>(g) | (s < 0 ? 2U : 0U));
}
constexpr Letter inverse(Letter l) { return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 2U); }
/// a <-> b, A <-> B.
constexpr Letter swap_generators(Letter l) {
  return static_cast<Letter>(static_cast<std::uint8_t>(l) ^ 1U);
}

constexpr char to_char(Letter l) { return "abAB"[static_cast<std::uint8_t>(l)]; }

constexpr std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'A': return Letter::A;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

/// A freely reduced word in F<A, B>, read left to right as a group product.
/// The empty word is the identity.
class Word {
 public:
  Word() = default;

  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool is_cyclically_reduced() const {
    return letters_.size() < 2 || letters_.front() != mcg::inverse(letters_.back());
  }

  Word inverse() const;
  Word swapped() const;
  /// Cyclic rotation moving the first k letters to the end, then reduced.
  Word rotated(std::size_t k) const;

  std::string str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter l : letters_) out.push_back(to_char(l));
    return out;
  }

  friend Word operator*(const Word& u, const Word& v);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
    return u.letters_ <=> v.letters_;
  }

  friend Word reduce(std::span<const Letter> raw);

 private:
  explicit Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

  std::vector<Letter> letters_;
};

/// Free reduction by a single left-to-right stack pass.
inline Word reduce(std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

inline Word Word::parse(std::string_view text) {
  std::vector<Letter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    auto l = letter_from_char(c);
    if (!l) {
      throw PreconditionError("invalid word character '" + std::string(1, c) +
                              "' (expected one of a, b, A, B)");
    }
    raw.push_back(*l);
  }
  return reduce(raw);
}

inline Word operator*(const Word& u, const Word& v) {
  std::vector<Letter> raw;
  raw.reserve(u.length() + v.length());
  raw.insert(raw.end(), u.letters_.begin(), u.letters_.end());
  raw.insert(raw.end(), v.letters_.begin(), v.letters_.end());
  return reduce(raw);
}

inline Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (Letter& l : out) l = mcg::inverse(l);
  return Word(std::move(out));
}

inline Word Word::swapped() const {
  std::vector<Letter> out = letters_;
  for (Letter& l : out) l = swap_generators(l);
  return Word(std::move(out));
}

inline Word Word::rotated(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  std::vector<Letter> raw;
  raw.reserve(letters_.size());
  raw.insert(raw.end(), letters_.begin() + static_cast<std::ptrdiff_t>(k), letters_.end());
  raw.insert(raw.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(k));
  return reduce(raw);
}

/// Strips matching inverse letters from both ends; the result is conjugate to w.
inline Word cyclic_reduce(const Word& w) {
  const auto& l = w.letters();
  std::size_t first = 0;
  std::size_t last = l.size();
  while (last - first >= 2 && l[first] == inverse(l[last - 1])) {
    ++first;
    --last;
  }
  return reduce(std::span<const Letter>(l.data() + first, last - first));
}

/// u v u^-1 v^-1, reduced.
inline Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

/// w(1) = ab, w(k) = [w(k-1), b]. w(k) lies in the (k-1)st term of the
/// lower central series and has length 2^k.
inline Word nested_commutator(int k) {
  if (k < 1) throw PreconditionError("nested_commutator requires k >= 1");
  static const Word kB = Word::parse("b");
  Word w = Word::parse("ab");
  for (int depth = 2; depth <= k; ++depth) w = commutator(w, kB);
  return w;
}

inline Word power(const Word& w, int n) {
  Word base = n < 0 ? w.inverse() : w;
  Word out;
  for (int i = 0; i < (n < 0 ? -n : n); ++i) out = out * base;
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << '"' << w.str() << '"'; }

}  // namespace mcg

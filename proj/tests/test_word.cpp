#include <random>

#include "support.hpp"

using namespace mcg;
using mcg::testing::w;

namespace {

std::vector<Letter> letters_of(const char* s) {
  std::vector<Letter> out;
  for (const char* c = s; *c; ++c) out.push_back(*letter_from_char(*c));
  return out;
}

// Reference free reduction: rescan until no adjacent x x^-1 remains.
std::string scan_reduce(std::string s) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] != s[i + 1] && (s[i] ^ 0x20) == s[i + 1]) {
        s.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

}  // namespace

TEST(Letter, FourValuesWithInvolutions) {
  EXPECT_EQ(kAllLetters.size(), 4U);
  for (Letter l : kAllLetters) {
    EXPECT_EQ(inverse(inverse(l)), l);
    EXPECT_NE(inverse(l), l);
    EXPECT_EQ(swap_generators(swap_generators(l)), l);
    EXPECT_EQ(*letter_from_char(to_char(l)), l);
  }
  EXPECT_EQ(to_char(inverse(Letter::a)), 'A');
  EXPECT_EQ(to_char(swap_generators(Letter::B)), 'A');
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce(letters_of("")).is_identity());
  EXPECT_TRUE(reduce(letters_of("aA")).is_identity());
  EXPECT_EQ(reduce(letters_of("abBb")), w("ab"));
  EXPECT_EQ(reduce(letters_of("abBA")), w(""));
  EXPECT_EQ(reduce(letters_of("aabBAb")), w("ab"));
}

TEST(Reduce, IdempotentAndMatchesScanExhaustive) {
  const char chars[] = {'a', 'b', 'A', 'B'};
  for (std::size_t n = 0; n <= 12; ++n) {
    std::size_t total = std::size_t{1} << (2 * n);
    // Scanning reference is slow; compare it on a stride, check idempotence everywhere.
    std::size_t stride = n <= 8 ? 1 : 97;
    std::vector<Letter> seq(n);
    std::string text(n, 'a');
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t x = code;
      for (std::size_t i = 0; i < n; ++i, x >>= 2) {
        seq[i] = kAllLetters[x & 3U];
        text[i] = chars[x & 3U];
      }
      Word r = reduce(seq);
      ASSERT_EQ(reduce(r.letters()), r);
      if (code % stride == 0) {
        ASSERT_EQ(r.str(), scan_reduce(text)) << text;
      }
    }
  }
}

TEST(Word, ParseRejectsForeignCharacters) {
  EXPECT_THROW(Word::parse("abc"), PreconditionError);
  EXPECT_THROW(Word::parse("a b"), PreconditionError);
  EXPECT_THROW(Word::parse("x"), PreconditionError);
}

TEST(Word, ParseReducesAndPrintsBack) {
  EXPECT_EQ(w("abBA").str(), "");
  EXPECT_EQ(w("abAB").str(), "abAB");
  EXPECT_EQ(w("aaBBa").length(), 5U);
}

TEST(Word, InverseCancels) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3), length(0, 50);
  const char chars[] = "abAB";
  for (int trial = 0; trial < 500; ++trial) {
    std::string s;
    int n = length(rng);
    for (int i = 0; i < n; ++i) s.push_back(chars[letter(rng)]);
    Word x = w(s.c_str());
    EXPECT_TRUE((x * x.inverse()).is_identity());
    EXPECT_TRUE((x.inverse() * x).is_identity());
  }
}

TEST(CyclicReduce, Examples) {
  EXPECT_EQ(cyclic_reduce(w("baB")), w("a"));
  EXPECT_EQ(cyclic_reduce(w("ab")), w("ab"));
  EXPECT_EQ(cyclic_reduce(w("abAB")), w("abAB"));
  EXPECT_EQ(cyclic_reduce(w("abaaA")), w("aba"));
  EXPECT_TRUE(cyclic_reduce(w("abA")).length() == 1);
  EXPECT_TRUE(cyclic_reduce(w("")).is_identity());
}

TEST(CyclicReduce, FixedPointAndShorter) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> letter(0, 3), length(0, 30);
  const char chars[] = "abAB";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    int n = length(rng);
    for (int i = 0; i < n; ++i) s.push_back(chars[letter(rng)]);
    Word x = w(s.c_str());
    Word c = cyclic_reduce(x);
    EXPECT_LE(c.length(), x.length());
    EXPECT_TRUE(c.is_cyclically_reduced());
    EXPECT_EQ(cyclic_reduce(c), c);
  }
}

TEST(Commutator, Examples) {
  EXPECT_EQ(commutator(w("a"), w("b")), w("abAB"));
  EXPECT_TRUE(commutator(w("a"), w("a")).is_identity());
  Word c = commutator(w("abAB"), w("b"));
  EXPECT_EQ(c, w("abAbaBAB"));
  EXPECT_EQ(c.length(), 8U);
}

TEST(NestedCommutator, BaseCases) {
  EXPECT_EQ(nested_commutator(1), w("ab"));
  EXPECT_EQ(nested_commutator(2), w("abAB"));
  EXPECT_EQ(nested_commutator(3), w("abAbaBAB"));
  EXPECT_THROW(nested_commutator(0), PreconditionError);
}

TEST(NestedCommutator, LengthIsPowerOfTwo) {
  for (int k = 1; k <= 16; ++k) EXPECT_EQ(nested_commutator(k).length(), std::size_t{1} << k) << "k=" << k;
}

TEST(Word, RotationSwapPower) {
  EXPECT_EQ(w("abAB").rotated(1), w("bABa"));
  EXPECT_EQ(w("abAB").rotated(4), w("abAB"));
  EXPECT_EQ(w("aB").swapped(), w("bA"));
  EXPECT_EQ(power(w("ab"), 3), w("ababab"));
  EXPECT_EQ(power(w("ab"), -1), w("BA"));
  EXPECT_TRUE(power(w("ab"), 0).is_identity());
}

TEST(Word, OrderIsLetterwise) {
  EXPECT_LT(w("a"), w("b"));
  EXPECT_LT(w("b"), w("A"));
  EXPECT_LT(w("A"), w("B"));
  EXPECT_LT(w("ab"), w("aB"));
}

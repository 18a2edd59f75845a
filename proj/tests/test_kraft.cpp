#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "udcodes/decipher.hpp"
#include "udcodes/kraft.hpp"

using namespace udcodes;

namespace {
const Alphabet kBinary("01");
}

TEST(KraftSum, Examples) {
  EXPECT_EQ(kraft_sum(make_code({"0", "10", "11"}, kBinary)), KraftValue(1, 1));
  EXPECT_EQ(kraft_sum(Code(kBinary)), KraftValue(0, 1));
  EXPECT_EQ(kraft_sum(make_code({"0", "01", "10"}, kBinary)), KraftValue(1, 1));
}

TEST(KraftSum, SquareOfZeroTen) {
  // {0,10}^2 expanded by hand-independent tuple expansion
  const auto square = oracle::power({"0", "10"}, 2);
  const oracle::Strings words(square.begin(), square.end());
  EXPECT_EQ(words, (oracle::Strings{"00", "010", "100", "1010"}));
  EXPECT_EQ(oracle::kraft(words, 2), oracle::Rational(9, 16));
  EXPECT_EQ(kraft_sum(oracle::to_code(words, kBinary)), KraftValue(9, 16));
}

TEST(KraftSum, AgreesWithTermByTermSum) {
  const Alphabet ternary("abc");
  for (const auto& words : oracle::all_codes("abc", 3, 3)) {
    EXPECT_EQ(kraft_sum(oracle::to_code(words, ternary)), oracle::to_kraft(oracle::kraft(words, 3)));
  }
}

TEST(KraftSum, DenominatorDividesPowerOfRadix) {
  for (const auto& words : oracle::all_codes("01", 3, 4)) {
    const auto code = oracle::to_code(words, kBinary);
    const BigInt bound = BigInt(1) << code.max_length();
    EXPECT_EQ(bound % kraft_sum(code).denominator(), 0);
  }
}

TEST(KraftSum, TwoArgumentFormChecksAlphabet) {
  const auto code = make_code({"0"}, kBinary);
  EXPECT_EQ(kraft_sum(code, kBinary), KraftValue(1, 2));
  EXPECT_THROW(kraft_sum(code, Alphabet("012")), Error);
}

TEST(KraftPower, Examples) {
  EXPECT_EQ(kraft_power(KraftValue(3, 4), 2), KraftValue(9, 16));
  EXPECT_EQ(kraft_power(KraftValue(3, 4), 4), KraftValue(81, 256));
  for (unsigned k = 1; k <= 20; ++k) EXPECT_EQ(kraft_power(KraftValue(1, 1), k), KraftValue(1, 1));
  // (3/4)^8 already needs 16-bit denominators; 2^-200 needs far more
  EXPECT_EQ(kraft_power(KraftValue(1, 2), 200).denominator(), BigInt(1) << 200);
}

TEST(KraftSum, AdditiveOverDisjointUnionSubadditiveOverUnion) {
  std::mt19937 rng(3);
  const auto words = oracle::all_words("01", 5);
  for (int trial = 0; trial < 300; ++trial) {
    oracle::Strings a, b;
    for (int i = 0; i < 4; ++i) a.push_back(words[rng() % words.size()]);
    for (int i = 0; i < 4; ++i) b.push_back(words[rng() % words.size()]);
    const auto ca = oracle::to_code(a, kBinary);
    const auto cb = oracle::to_code(b, kBinary);
    oracle::Strings both = a;
    both.insert(both.end(), b.begin(), b.end());
    const auto u = oracle::to_code(both, kBinary);
    EXPECT_LE(kraft_sum(u), kraft_sum(ca) + kraft_sum(cb));

    oracle::Strings b_only;
    for (const auto& w : oracle::to_strings(cb)) {
      if (!ca.contains(parse_word(w, kBinary))) b_only.push_back(w);
    }
    EXPECT_EQ(kraft_sum(u), kraft_sum(ca) + kraft_sum(oracle::to_code(b_only, kBinary)));
  }
}

TEST(KraftSum, StrictlyMonotoneUnderProperInclusion) {
  for (const auto& words : oracle::all_codes("01", 3, 3)) {
    if (words.empty()) continue;
    const auto code = oracle::to_code(words, kBinary);
    for (const auto& w : code) EXPECT_LT(kraft_sum(code.without(w)), kraft_sum(code));
  }
}

TEST(KraftSum, McMillanOnSmallUdCodes) {
  for (const auto& words : oracle::all_codes("01", 3, 4)) {
    const auto code = oracle::to_code(words, kBinary);
    if (is_ud(code).is_ud) EXPECT_LE(kraft_sum(code), KraftValue(1, 1)) << render(code);
  }
}

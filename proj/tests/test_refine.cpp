#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "udcodes/decipher.hpp"
#include "udcodes/refine.hpp"

using namespace udcodes;

namespace {

const Alphabet kBinary("01");

Word w(std::string_view text) { return parse_word(text, kBinary); }

std::vector<oracle::Strings> as_strings(const std::vector<Factorization>& fs) {
  std::vector<oracle::Strings> out;
  for (const auto& f : fs) {
    oracle::Strings parts;
    for (const auto& x : f.factors()) parts.push_back(render(x, kBinary));
    out.push_back(parts);
  }
  return out;
}

}  // namespace

TEST(Factorizations, Examples) {
  const auto code = make_code({"0", "01", "10"}, kBinary);
  EXPECT_EQ(as_strings(factorizations(w("010"), code)),
            (std::vector<oracle::Strings>{{"0", "10"}, {"01", "0"}}));
  EXPECT_EQ(as_strings(factorizations(w("0"), make_code({"0"}, kBinary))),
            (std::vector<oracle::Strings>{{"0"}}));
  EXPECT_TRUE(factorizations(w("1"), make_code({"0"}, kBinary)).empty());
}

TEST(Factorizations, MatchRecursiveSplitter) {
  const auto words = oracle::all_words("01", 8);
  for (const auto& code_words : oracle::all_codes("01", 3, 2)) {
    const auto code = oracle::to_code(code_words, kBinary);
    for (std::size_t i = 0; i < words.size(); i += 3) {
      const auto got = factorizations(w(words[i]), code);
      auto expected = oracle::split_all(words[i], oracle::to_strings(code));
      auto got_strings = as_strings(got);
      for (const auto& f : got) EXPECT_EQ(render(f.concatenation(), kBinary), words[i]);
      std::ranges::sort(expected);
      std::ranges::sort(got_strings);
      EXPECT_EQ(got_strings, expected) << words[i] << " over " << render(code);
    }
  }
}

TEST(Factorizations, CanonicalOrderIsShortlexOnCompositions) {
  const auto code = make_code({"0", "00", "000"}, kBinary);
  const auto fs = factorizations(w("0000"), code);
  ASSERT_EQ(fs.size(), 7u);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    const auto a = fs[i - 1].composition(), b = fs[i].composition();
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
  EXPECT_EQ(fs.front().composition(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(fs.back().composition(), (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(Factorizations, CapRaisesResourceLimit) {
  Limits limits;
  limits.max_factorizations = 10;
  const auto code = make_code({"0", "00"}, kBinary);
  // fibonacci(13) = 233 factorizations of 0^12
  EXPECT_EQ(factorizations(w("000000000000"), code).size(), 233u);
  try {
    factorizations(w("000000000000"), code, limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
}

TEST(Factorizations, AtMostOneUnderUd) {
  const auto words = oracle::all_words("01", 8);
  for (const auto& code_words : oracle::all_codes("01", 3, 3)) {
    const auto code = oracle::to_code(code_words, kBinary);
    if (!is_ud(code).is_ud) continue;
    for (const auto& text : words) EXPECT_LE(factorizations(w(text), code).size(), 1u);
  }
}

TEST(FirstFactorization, IsFirstOfFullEnumeration) {
  const auto words = oracle::all_words("01", 7);
  for (const auto& code_words : oracle::all_codes("01", 3, 3)) {
    const auto code = oracle::to_code(code_words, kBinary);
    for (std::size_t i = 0; i < words.size(); i += 5) {
      const auto all = factorizations(w(words[i]), code);
      const auto first = first_factorization(w(words[i]), code);
      ASSERT_EQ(first.has_value(), !all.empty());
      if (first) EXPECT_EQ(*first, all.front());
    }
  }
}

TEST(IsRefinement, Examples) {
  EXPECT_TRUE(is_refinement(make_code({"010", "11"}, kBinary), make_code({"0", "1"}, kBinary)).holds);

  const auto v = is_refinement(make_code({"0011"}, kBinary), make_code({"0", "011"}, kBinary));
  ASSERT_TRUE(v.holds);
  EXPECT_EQ(render(v.witnesses.at(w("0011")), kBinary), "0·011");

  const auto fails = is_refinement(make_code({"0011"}, kBinary), make_code({"01", "1"}, kBinary));
  EXPECT_FALSE(fails.holds);
  EXPECT_TRUE(fails.witnesses.empty());
  ASSERT_EQ(fails.unfactorable.size(), 1u);
  EXPECT_TRUE(oracle::split_all("0011", {"01", "1"}).empty());
}

TEST(IsRefinement, MixedAlphabetsRejected) {
  try {
    is_refinement(make_code({"0"}, kBinary), make_code({"a"}, Alphabet("ab")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MixedAlphabets);
  }
}

TEST(IsRefinement, ReflexiveTransitiveAndAntisymmetricOnUd) {
  std::vector<Code> corpus;
  for (const auto& words : oracle::all_codes("01", 2, 3)) corpus.push_back(oracle::to_code(words, kBinary));
  for (const auto& a : corpus) {
    EXPECT_TRUE(refines(a, a));
    for (const auto& b : corpus) {
      if (!refines(a, b)) continue;
      if (refines(b, a) && is_ud(a).is_ud && is_ud(b).is_ud) EXPECT_EQ(a, b);
      for (const auto& c : corpus) {
        if (refines(b, c)) EXPECT_TRUE(refines(a, c)) << render(a) << render(b) << render(c);
      }
    }
  }
}

TEST(IsIrredundantRefinement, Examples) {
  const auto coarse = make_code({"0011"}, kBinary);
  EXPECT_TRUE(is_irredundant_refinement(coarse, make_code({"00", "11"}, kBinary)));
  EXPECT_FALSE(is_irredundant_refinement(coarse, make_code({"0", "01", "1"}, kBinary)));
  EXPECT_TRUE(refines(coarse, make_code({"0", "1"}, kBinary)));
}

TEST(IsIrredundantRefinement, CodeIsIrredundantOverItselfWhenUd) {
  for (const auto& words : oracle::all_codes("01", 3, 3)) {
    const auto code = oracle::to_code(words, kBinary);
    const bool self_irredundant = is_irredundant_refinement(code, code);
    if (is_ud(code).is_ud) EXPECT_TRUE(self_irredundant) << render(code);
    EXPECT_EQ(self_irredundant, oracle::irredundant_by_subsets(words, words)) << render(code);
  }
}

TEST(IsIrredundantRefinement, SingleRemovalMatchesFullSubsetSearch) {
  const auto coarse_pool = oracle::all_codes("01", 2, 4);
  const auto fine_pool = oracle::all_codes("01", 4, 2);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& coarse = coarse_pool[rng() % coarse_pool.size()];
    const auto& fine = fine_pool[rng() % fine_pool.size()];
    EXPECT_EQ(is_irredundant_refinement(oracle::to_code(coarse, kBinary), oracle::to_code(fine, kBinary)),
              oracle::irredundant_by_subsets(coarse, fine));
  }
}

TEST(IrredundantRefinements, OfZeroZeroOneOne) {
  const auto got = irredundant_refinements(make_code({"0011"}, kBinary));
  std::set<std::set<std::string>> got_sets;
  for (const auto& d : got) {
    const auto s = oracle::to_strings(d);
    got_sets.emplace(s.begin(), s.end());
  }
  const std::set<std::set<std::string>> expected{{"0", "1"},   {"0", "11"},  {"00", "1"},
                                                 {"0", "011"}, {"00", "11"}, {"001", "1"},
                                                 {"0011"}};
  EXPECT_EQ(got_sets, expected);
  EXPECT_EQ(oracle::irredundant_brute({"0011"}), expected);
  EXPECT_TRUE(std::ranges::is_sorted(got));
}

TEST(IrredundantRefinements, SmallCases) {
  EXPECT_EQ(irredundant_refinements(make_code({"0"}, kBinary)),
            std::vector<Code>{make_code({"0"}, kBinary)});
  EXPECT_EQ(irredundant_refinements(make_code({"0", "1"}, kBinary)),
            std::vector<Code>{make_code({"0", "1"}, kBinary)});
  EXPECT_EQ(irredundant_refinements(Code(kBinary)), std::vector<Code>{Code(kBinary)});
}

TEST(IrredundantRefinements, CompleteAgainstSubstringSubsetSearch) {
  for (const auto& words : oracle::all_codes("01", 3, 3)) {
    std::size_t total = 0;
    for (const auto& x : words) total += x.size();
    if (total > 6) continue;
    const auto code = oracle::to_code(words, kBinary);
    std::set<std::set<std::string>> got;
    for (const auto& d : irredundant_refinements(code)) {
      EXPECT_TRUE(is_irredundant_refinement(code, d));
      const auto s = oracle::to_strings(d);
      got.emplace(s.begin(), s.end());
    }
    EXPECT_EQ(got, oracle::irredundant_brute(words)) << render(code);
  }
}

TEST(IrredundantRefinements, TupleCapRaisesResourceLimit) {
  Limits limits;
  limits.max_tuples = 100;
  try {
    irredundant_refinements(make_code({"0000000000"}, kBinary), limits);  // 512 compositions
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
    EXPECT_NE(std::string(e.what()).find("512"), std::string::npos);
  }
}

TEST(CoverExponentBound, Examples) {
  const auto coarse = make_code({"0011"}, kBinary);
  EXPECT_EQ(cover_exponent_bound(coarse, make_code({"0", "011"}, kBinary)), 4u);
  EXPECT_EQ(cover_exponent_bound(coarse, make_code({"00", "11"}, kBinary)), 2u);
  const auto c = make_code({"0", "10", "110"}, kBinary);
  EXPECT_EQ(cover_exponent_bound(c, c), 3u);
  EXPECT_THROW(cover_exponent_bound(Code(kBinary), c), Error);
}

TEST(CoverExponentBound, NoCoarseWordUsesMoreFineWords) {
  for (const auto& fine_words : oracle::all_codes("01", 2, 2)) {
    if (fine_words.empty()) continue;
    const auto fine = oracle::to_code(fine_words, kBinary);
    for (const auto& coarse_words : oracle::all_codes("01", 2, 4)) {
      if (coarse_words.empty() || !oracle::refines(coarse_words, fine_words)) continue;
      const auto coarse = oracle::to_code(coarse_words, kBinary);
      const auto m = cover_exponent_bound(coarse, fine);
      ASSERT_GE(m, 1u);
      for (const auto& word : coarse_words) {
        for (unsigned n = 1; n <= m + 2; ++n) {
          if (n > m) EXPECT_EQ(oracle::power(fine_words, n).count(word), 0u);
        }
        bool some = false;
        for (unsigned j = 1; j <= m; ++j) some = some || oracle::power(fine_words, j).count(word) > 0;
        EXPECT_TRUE(some);
      }
    }
  }
}

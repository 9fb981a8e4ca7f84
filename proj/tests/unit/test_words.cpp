#include <gtest/gtest.h>

#include "bouquet/error.hpp"
#include "bouquet/homology.hpp"
#include "bouquet/words.hpp"
#include "support/oracles.hpp"

using namespace bouquet;

namespace {

Word w(const char* text) { return Word::from_string(text); }

MapAction action(std::vector<const char*> images, BranchClass branch = BranchClass::free()) {
  std::vector<Word> words;
  for (const char* t : images) words.push_back(w(t));
  const std::size_t n = words.size();
  return MapAction(n, std::move(words), branch);
}

}  // namespace

TEST(Words, ParsesAndPrintsLetters) {
  const Word word = w("a1' a3' ");
  ASSERT_EQ(word.size(), 2u);
  EXPECT_EQ(word.to_string(), "a1' a3'");
  EXPECT_EQ(w("a12").front().generator, 12u);
}

TEST(Words, RejectsMixedSignsAndEmptyWords) {
  EXPECT_THROW(w("a1 a2'"), InputError);
  EXPECT_THROW(w(""), InputError);
  EXPECT_THROW(Word(std::vector<Letter>{}), InputError);
}

TEST(Words, ChiCountsSignedOccurrences) {
  EXPECT_EQ(chi(w("a2 a3 a2"), 2), 2);
  EXPECT_EQ(chi(w("a2 a3"), 1), 0);
  EXPECT_EQ(chi(w("a1' a1'"), 1), -2);
}

TEST(Words, GammaCountsInteriorOccurrences) {
  EXPECT_EQ(gamma(w("a2 a3 a2"), 2), 0);
  EXPECT_EQ(gamma(w("a4"), 4), 0);
  EXPECT_EQ(gamma(w("a2 a1 a1 a3"), 1), 2);
  EXPECT_EQ(gamma(w("a1' a1' a1'"), 1), -1);
}

TEST(Words, IndexOutOfRange) {
  EXPECT_THROW(chi(w("a1"), 0), InputError);
  const MapAction f = action({"a1 a2", "a1"});
  EXPECT_THROW(chi_of_iterate(f, 1, 3), InputError);
  EXPECT_THROW(apply_endo(f, w("a3")), InputError);
}

TEST(Words, ApplyEndoSubstitutes) {
  const MapAction f = action({"a1 a2", "a1"});
  EXPECT_EQ(apply_endo(f, w("a2")), w("a1"));
  EXPECT_EQ(apply_endo(f, w("a1 a2")), w("a1 a2 a1"));
  const MapAction g = action({"a1' a1'"});
  EXPECT_EQ(apply_endo(g, w("a1'")), w("a1 a1"));
}

TEST(Words, ApplyEndoInvertsReversedImages) {
  const MapAction f = action({"a1 a2", "a2 a2 a1"});
  EXPECT_EQ(apply_endo(f, w("a2'")), w("a1' a2' a2'"));
}

TEST(Words, IterateAction) {
  const MapAction f = action({"a1 a2", "a1"});
  EXPECT_EQ(iterate_action(f, 1), f);
  EXPECT_EQ(iterate_action(f, 3).image(1), w("a1 a2 a1 a1 a2"));
  const MapAction g = action({"a1' a1'"});
  EXPECT_EQ(iterate_action(g, 2).image(1), w("a1 a1 a1 a1"));
}

TEST(Words, IterateActionBudgetNamesFirstOffendingPower) {
  const MapAction f = action({"a1 a1"});
  try {
    iterate_action(f, 20, 1000);
    FAIL() << "expected budget error";
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.offending_power(), 10u);  // 2^10 = 1024 > 1000
  }
  EXPECT_NO_THROW(iterate_action(f, 9, 1000));
}

TEST(Words, ChiAndGammaOfIterate) {
  const MapAction g = action({"a1' a1'"});
  EXPECT_EQ(chi_of_iterate(g, 2, 1), 4);
  const MapAction t = action({"a1 a1 a1"});
  EXPECT_EQ(gamma_of_iterate(t, 1, 1), 1);
  const MapAction f = action({"a1 a3", "a1", "a1 a3"});
  for (std::size_t j = 1; j <= 3; ++j)
    EXPECT_EQ(chi_of_iterate(f, 1, j), chi(f.image(j), j));
}

TEST(Words, EndLettersOfIterateMatchExpansion) {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    const MapAction f = gen.action(3, 3, false);
    const auto images = oracle::raw_images(f);
    for (std::uint64_t m = 1; m <= 5; ++m)
      for (std::size_t j = 1; j <= f.n(); ++j) {
        const auto expanded = oracle::expand(images, m, static_cast<int>(j));
        const Letter first = first_letter_of_iterate(f, m, j);
        const Letter last = last_letter_of_iterate(f, m, j);
        EXPECT_EQ(static_cast<int>(first.generator) * to_int(first.sign), expanded.front());
        EXPECT_EQ(static_cast<int>(last.generator) * to_int(last.sign), expanded.back());
        EXPECT_EQ(gamma_of_iterate(f, m, j), oracle::gamma(expanded, static_cast<int>(j)));
      }
  }
}

TEST(Words, Orientation) {
  EXPECT_EQ(orientation(action({"a1 a2", "a1"})), Orientation::Preserving);
  const MapAction g = action({"a1' a1'"});
  EXPECT_EQ(orientation(g), Orientation::Reversing);
  EXPECT_EQ(orientation_of_iterate(g, 2), Orientation::Preserving);
  EXPECT_EQ(orientation_of_iterate(g, 3), Orientation::Reversing);
}

TEST(Words, MapActionValidation) {
  EXPECT_THROW(action({"a1", "a2'"}), InputError);
  EXPECT_THROW(MapAction(2, {w("a1")}, BranchClass::free()), InputError);
  EXPECT_THROW(MapAction(1, {w("a2")}, BranchClass::free()), InputError);
  EXPECT_THROW(BranchClass::period(0), InputError);
}

TEST(Words, BranchClass) {
  const BranchClass k3 = BranchClass::period(3);
  EXPECT_TRUE(k3.fixes_branch_at(6));
  EXPECT_FALSE(k3.fixes_branch_at(4));
  EXPECT_FALSE(BranchClass::free().fixes_branch_at(1));
}

TEST(WordsProperty, HomomorphismInverseAndClosure) {
  oracle::Generator gen(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const MapAction f = gen.action(3, 4, false);
    const Sign sign = gen.uniform(0, 1) ? Sign::Positive : Sign::Negative;
    const Word u = gen.word(f.n(), 5, sign);
    const Word v = gen.word(f.n(), 5, sign);
    const Word uv = u + v;
    EXPECT_EQ(apply_endo(f, uv), apply_endo(f, u) + apply_endo(f, v));
    EXPECT_EQ(apply_endo(f, u.inverse()), apply_endo(f, u).inverse());
    EXPECT_EQ(apply_endo(f, u).sign(), u.sign() * f.sign());
    for (std::size_t j = 1; j <= f.n(); ++j) {
      EXPECT_EQ(chi(uv, j), chi(u, j) + chi(v, j));
      EXPECT_GE(std::abs(gamma(uv, j)), std::abs(chi(uv, j)) - 2);
    }
  }
}

TEST(WordsProperty, ChiOfIterateMatchesLiteralExpansion) {
  oracle::Generator gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const MapAction f = gen.action(3, 3, false);
    const auto images = oracle::raw_images(f);
    for (std::uint64_t m = 1; m <= 4; ++m) {
      const MapAction fm = iterate_action(f, m);
      for (std::size_t j = 1; j <= f.n(); ++j) {
        EXPECT_EQ(oracle::raw(fm.image(j)), oracle::expand(images, m, static_cast<int>(j)));
        EXPECT_EQ(chi_of_iterate(f, m, j), chi(fm.image(j), j));
      }
    }
  }
}

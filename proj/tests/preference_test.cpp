#include "gsv/preference.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gsv/errors.hpp"
#include "oracle.hpp"

namespace gsv {
namespace {

const Alternative a(0), b(1), c(2);

TEST(Preference, TopIsFirstRanked) {
  EXPECT_EQ(Preference({0, 1, 2}).top(), a);
  EXPECT_EQ(Preference({2, 0, 1}).top(), c);
}

TEST(Preference, EachAlternativeTopsTwoOfSixAtThree) {
  std::map<int, int> tops;
  for (const auto& p : enumerate_preferences(3)) ++tops[p.top().index()];
  for (int x = 0; x < 3; ++x) EXPECT_EQ(tops[x], 2);
}

TEST(Preference, StrictAndWeakComparison) {
  const Preference p{0, 1, 2};
  EXPECT_TRUE(p.prefers(b, c));
  EXPECT_FALSE(p.prefers(c, b));
  EXPECT_FALSE(p.prefers(a, a));
  EXPECT_TRUE(p.weakly_prefers(a, a));
  EXPECT_TRUE(p.weakly_prefers(a, c));
  EXPECT_FALSE(p.weakly_prefers(c, a));
  EXPECT_THROW(p.prefers(a, Alternative(3)), std::out_of_range);
  EXPECT_THROW(p.weakly_prefers(Alternative(-1), Alternative(-1)), std::out_of_range);
}

TEST(Preference, RejectsNonPermutations) {
  EXPECT_THROW(Preference({0, 0, 2}), std::invalid_argument);
  EXPECT_THROW(Preference({0, 1, 3}), std::invalid_argument);
}

TEST(Preference, EnumerationCountsAndOrder) {
  const auto two = enumerate_preferences(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].to_string(), "a,b");
  EXPECT_EQ(two[1].to_string(), "b,a");
  EXPECT_EQ(enumerate_preferences(3).size(), 6u);

  const auto four = enumerate_preferences(4);
  ASSERT_EQ(four.size(), 24u);
  std::set<std::string> distinct;
  for (std::size_t k = 0; k < four.size(); ++k) {
    EXPECT_EQ(four[k].code(), k);
    distinct.insert(four[k].to_string());
  }
  EXPECT_EQ(distinct.size(), 24u);
}

TEST(Preference, EnumerationMatchesLexicographicPermutations) {
  for (int m = 2; m <= 5; ++m) {
    const auto ours = enumerate_preferences(m);
    const auto reference = oracle::prefs(m);
    ASSERT_EQ(ours.size(), reference.size());
    for (std::size_t k = 0; k < ours.size(); ++k)
      for (int r = 0; r < m; ++r) ASSERT_EQ(ours[k].at_rank(r).index(), reference[k][r]);
  }
}

TEST(Preference, EnumerationCap) {
  Limits limits;
  limits.max_alternatives = 4;
  EXPECT_THROW(enumerate_preferences(5, limits), CapExceeded);
  EXPECT_THROW(enumerate_preferences(1, limits), std::invalid_argument);
  EXPECT_THROW(enumerate_preferences(7), CapExceeded);
}

TEST(PreferenceCodec, KnownCodes) {
  EXPECT_EQ(encode_preference(Preference{0, 1, 2}), 0u);
  EXPECT_EQ(encode_preference(Preference{2, 1, 0}), 5u);
  EXPECT_EQ(decode_preference(5, 3), (Preference{2, 1, 0}));
  EXPECT_THROW(decode_preference(6, 3), std::out_of_range);
}

TEST(PreferenceCodec, BijectionUpToFive) {
  for (int m = 2; m <= 5; ++m) {
    std::set<std::string> seen;
    for (std::uint64_t code = 0; code < factorial(m); ++code) {
      const Preference p = decode_preference(code, m);
      ASSERT_EQ(encode_preference(p), code);
      seen.insert(p.to_string());
    }
    EXPECT_EQ(seen.size(), factorial(m));
  }
}

TEST(PreferenceText, RoundTripAndErrors) {
  for (const auto& p : enumerate_preferences(4)) EXPECT_EQ(Preference::parse(p.to_string()), p);
  EXPECT_EQ(Preference::parse("c,a,b"), (Preference{2, 0, 1}));

  const auto position_of = [](std::string_view text) -> std::size_t {
    try {
      Preference::parse(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position_of("a,b,"), 4u);
  EXPECT_EQ(position_of("a;b"), 1u);
  EXPECT_EQ(position_of("a,B"), 2u);
  EXPECT_EQ(position_of("a,a,c"), 2u);
  EXPECT_EQ(position_of("a,d,c"), 2u);
  EXPECT_EQ(position_of(""), 0u);
}

}  // namespace
}  // namespace gsv

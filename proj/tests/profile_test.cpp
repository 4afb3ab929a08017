#include "gsv/profile.hpp"

#include <gtest/gtest.h>

#include "gsv/errors.hpp"
#include "oracle.hpp"

namespace gsv {
namespace {

const Alternative a(0), b(1), c(2);

TEST(Profile, WithReplacedIsValueSemantic) {
  const Profile p = Profile::parse("a,b,c|c,a,b");
  const Preference q{1, 2, 0};
  const Profile r = p.with_replaced(0, q);
  EXPECT_EQ(p.to_string(), "a,b,c|c,a,b");
  EXPECT_EQ(r[0], q);
  EXPECT_EQ(r[1], p[1]);
  EXPECT_EQ(p.with_replaced(1, p[1]), p);
  EXPECT_EQ(r.with_replaced(0, p[0]), p);
  EXPECT_THROW(p.with_replaced(2, q), std::out_of_range);
  EXPECT_THROW(p.with_replaced(0, Preference{0, 1}), DimensionMismatch);
}

TEST(Profile, Tops) {
  EXPECT_EQ(Profile::parse("a,b,c|c,a,b").tops(), TopsProfile({a, c}, 3));
  EXPECT_EQ(Profile::parse("b,a,c|b,c,a").tops(), TopsProfile({b, b}, 3));
}

TEST(Profile, TopsChangeOnlyAtReplacedAgent) {
  const ProfileSpace space({3, 3});
  for (std::uint64_t code = 0; code < space.size(); code += 7) {
    const Profile p = space.at(code);
    for (int i = 0; i < 3; ++i)
      for (const auto& q : space.preferences()) {
        const auto before = p.tops();
        const auto after = p.with_replaced(i, q).tops();
        for (int j = 0; j < 3; ++j)
          if (j != i) ASSERT_EQ(before[j], after[j]);
        ASSERT_EQ(after[i], q.top());
      }
  }
}

TEST(Profile, Supporters) {
  const Profile p = Profile::parse("a,b,c|c,a,b");
  EXPECT_EQ(p.supporters(a), (std::vector<int>{0}));
  EXPECT_TRUE(p.supporters(b).empty());
  EXPECT_EQ(supporters(p, c), (std::vector<int>{1}));
}

TEST(Profile, SupportersPartitionAgents) {
  for (int n = 2; n <= 3; ++n) {
    const ProfileSpace space({n, 3});
    for (std::uint64_t code = 0; code < space.size(); ++code) {
      const Profile p = space.at(code);
      std::vector<int> owner(n, -1);
      for (int x = 0; x < 3; ++x)
        for (int i : p.supporters(Alternative(x))) {
          ASSERT_EQ(owner[i], -1);
          owner[i] = x;
        }
      for (int i = 0; i < n; ++i) ASSERT_EQ(owner[i], p[i].top().index());
    }
  }
}

TEST(ProfileSpace, SizesAndCodes) {
  const ProfileSpace space({2, 3});
  EXPECT_EQ(space.size(), 36u);
  EXPECT_EQ(space.cell_size(), 4u);
  EXPECT_EQ(space.tops_count(), 9u);
  const auto reference = oracle::profiles(2, 3);
  ASSERT_EQ(reference.size(), 36u);
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    ASSERT_EQ(p.code(), code);
    for (int i = 0; i < 2; ++i)
      for (int r = 0; r < 3; ++r) ASSERT_EQ(p[i].at_rank(r).index(), reference[code][i][r]);
    ASSERT_EQ(space.tops_code_of(code), p.tops().code());
  }
  EXPECT_EQ(ProfileSpace({3, 3}).size(), 216u);
  EXPECT_EQ(ProfileSpace({2, 4}).size(), 576u);
}

TEST(ProfileSpace, Budget) {
  Limits limits;
  limits.profile_budget = 100;
  EXPECT_THROW(ProfileSpace({3, 3}, limits), CapExceeded);
  EXPECT_THROW(ProfileSpace({6, 3}), CapExceeded);
  EXPECT_THROW(ProfileSpace({1, 3}), std::invalid_argument);
}

TEST(ProfileText, RoundTripAndErrors) {
  const ProfileSpace space({3, 3});
  for (std::uint64_t code = 0; code < space.size(); code += 5)
    EXPECT_EQ(Profile::parse(space.at(code).to_string()), space.at(code));
  try {
    Profile::parse("a,b,c|c,x,b");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(Profile::parse("a,b,c"), ParseError);
  EXPECT_THROW(Profile::parse("a,b,c|a,b"), ParseError);
}

TEST(TopsProfile, CodeRoundTrip) {
  for (std::uint64_t code = 0; code < 27; ++code)
    EXPECT_EQ(TopsProfile::decode(code, {3, 3}).code(), code);
  EXPECT_THROW(TopsProfile::decode(27, {3, 3}), std::out_of_range);
}

}  // namespace
}  // namespace gsv

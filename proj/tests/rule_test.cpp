#include "gsv/rule.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gsv/constructions.hpp"
#include "gsv/errors.hpp"
#include "oracle.hpp"

namespace gsv {
namespace {

const Dimensions k23{2, 3};
const Alternative a(0), b(1), c(2);

TEST(Rule, ClosedFormEvaluation) {
  const Profile p = Profile::parse("b,a,c|c,a,b");
  EXPECT_EQ(Rule::dictator(k23, 0).evaluate(p), b);
  EXPECT_EQ(Rule::dictator(k23, 1).evaluate(p), c);
  EXPECT_EQ(Rule::constant(k23, a).evaluate(p), a);
}

TEST(Rule, BordaTieGoesToLowestIndex) {
  // Scores a:3, b:3, c:0.
  EXPECT_EQ(Rule::borda_lex(k23).evaluate(Profile::parse("a,b,c|b,a,c")), a);
}

TEST(Rule, BordaMatchesBruteForceScorer) {
  for (const Dimensions dims : {Dimensions{2, 3}, Dimensions{3, 3}, Dimensions{2, 4}}) {
    const Rule borda = Rule::borda_lex(dims);
    const auto reference = oracle::profiles(dims.agents, dims.alternatives);
    const ProfileSpace space(dims);
    for (std::uint64_t code = 0; code < space.size(); ++code)
      ASSERT_EQ(borda.evaluate(space.at(code)).index(),
                oracle::borda(reference[code], dims.alternatives));
  }
}

TEST(Rule, MajorityLex) {
  const Rule maj = Rule::majority_lex({3, 2});
  EXPECT_EQ(maj.evaluate(Profile::parse("b,a|b,a|a,b")), b);
  EXPECT_EQ(maj.evaluate(Profile::parse("b,a|a,b|a,b")), a);
  const Rule tie = Rule::majority_lex({2, 2});
  EXPECT_EQ(tie.evaluate(Profile::parse("b,a|a,b")), a);
  EXPECT_EQ(tie.evaluate(Profile::parse("b,a|b,a")), b);
  EXPECT_THROW(Rule::majority_lex(k23), std::invalid_argument);
}

TEST(Rule, TopsTableDependsOnTopsOnly) {
  const Rule f = Rule::parse("TOPS:n=2,m=3:012120201");
  const ProfileSpace space(k23);
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    const auto tops = p.tops();
    const int expected = "012120201"[tops.code()] - '0';
    ASSERT_EQ(f.evaluate(p).index(), expected);
    ASSERT_EQ(f.evaluate_tops(tops).index(), expected);
  }
}

TEST(Rule, DimensionMismatch) {
  EXPECT_THROW(Rule::dictator(k23, 0).evaluate(Profile::parse("a,b|b,a")), DimensionMismatch);
  EXPECT_THROW(Rule::tops_table(k23, {0, 1, 2}), DimensionMismatch);
  EXPECT_THROW(Rule::dictator(k23, 2), std::out_of_range);
}

TEST(Rule, EvaluateTopsRejectsNonTopsRepresentations) {
  EXPECT_THROW(Rule::borda_lex(k23).evaluate_tops(TopsProfile({a, b}, 3)), NotTopsOnly);
  EXPECT_FALSE(Rule::borda_lex(k23).tops_only_by_construction());
  EXPECT_TRUE(Rule::majority_lex({3, 2}).tops_only_by_construction());
}

TEST(RuleString, CanonicalForms) {
  EXPECT_EQ(Rule::dictator(k23, 1).to_string(), "DICT:1");
  EXPECT_EQ(Rule::constant(k23, c).to_string(), "CONST:c");
  EXPECT_EQ(Rule::borda_lex(k23).to_string(), "BORDALEX");
  EXPECT_EQ(Rule::majority_lex({3, 2}).to_string(), "MAJLEX");
  EXPECT_EQ(Rule::tops_table(k23, tops_table_of(Rule::dictator(k23, 0)).outcomes).to_string(),
            "TOPS:n=2,m=3:000111222");
  EXPECT_EQ(Rule::tops_table(k23, tops_table_of(Rule::dictator(k23, 1)).outcomes).to_string(),
            "TOPS:n=2,m=3:012012012");
}

TEST(RuleString, RoundTripOnRandomRules) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const Rule f = sample_tops_only_rule({3, 3}, SampleSpace::All, rng);
    EXPECT_EQ(Rule::parse(f.to_string()), f);
  }
  const Rule full = to_full_table(Rule::borda_lex(k23));
  EXPECT_EQ(full.to_string().size(), std::string("FULL:n=2,m=3:").size() + 36);
  EXPECT_EQ(Rule::parse(full.to_string()), full);
  EXPECT_TRUE(same_function(full, Rule::borda_lex(k23)));
  for (const auto& f : {Rule::dictator(k23, 1), Rule::constant(k23, b), Rule::borda_lex(k23)})
    EXPECT_EQ(Rule::parse(f.to_string(), k23), f);
}

std::size_t parse_error_position(std::string_view text, std::optional<Dimensions> ctx = k23) {
  try {
    Rule::parse(text, ctx);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

TEST(RuleString, StrictParsingWithPositions) {
  EXPECT_EQ(parse_error_position("TOPS:n=2,m=3:00011122"), 21u);    // too few digits
  EXPECT_EQ(parse_error_position("TOPS:n=2,m=3:0001112223"), 22u);  // too many
  EXPECT_EQ(parse_error_position("TOPS:n=2,m=3:000111232"), 20u);   // digit >= m
  EXPECT_EQ(parse_error_position("TOPS:n=2;m=3:000111222"), 8u);
  EXPECT_EQ(parse_error_position("TOPS:n=x,m=3:000111222"), 7u);
  EXPECT_EQ(parse_error_position("TOPS:n=3,m=3:000111222"), 5u);    // disagrees with context
  EXPECT_EQ(parse_error_position("DICT:2"), 5u);
  EXPECT_EQ(parse_error_position("DICT:"), 5u);
  EXPECT_EQ(parse_error_position("DICT:0x"), 6u);
  EXPECT_EQ(parse_error_position("CONST:d"), 6u);
  EXPECT_EQ(parse_error_position("BORDALEXX"), 8u);
  EXPECT_EQ(parse_error_position("VETO"), 0u);
  EXPECT_EQ(parse_error_position("MAJLEX"), 0u);  // needs m = 2
  EXPECT_EQ(parse_error_position("DICT:0", std::nullopt), 0u);
  EXPECT_EQ(parse_error_position("TOPS:n=2,m=3:000111222", std::nullopt), std::string::npos);
}

}  // namespace
}  // namespace gsv

#include "gsv/axioms.hpp"

#include <gtest/gtest.h>

#include <random>

#include "gsv/constructions.hpp"
#include "gsv/errors.hpp"
#include "oracle.hpp"

namespace gsv {
namespace {

const Dimensions k23{2, 3};
const Alternative a(0), b(1), c(2);

TEST(Unanimity, Examples) {
  EXPECT_TRUE(is_unanimous(Rule::dictator(k23, 1)));
  const auto check = check_unanimity(Rule::constant(k23, a));
  ASSERT_FALSE(check.holds);
  EXPECT_EQ(check.counterexample->tops(), TopsProfile({b, b}, 3));
  EXPECT_EQ(check.counterexample->to_string(), "b,a,c|b,a,c");
  EXPECT_TRUE(is_unanimous(Rule::majority_lex({3, 2})));
}

TEST(TopsOnly, Examples) {
  EXPECT_TRUE(is_tops_only(Rule::parse("TOPS:n=2,m=3:012120201")));
  EXPECT_TRUE(is_tops_only(Rule::dictator(k23, 0)));
  const auto check = check_tops_only(Rule::borda_lex(k23));
  ASSERT_FALSE(check.holds);
  const auto& [p, q] = *check.counterexample;
  EXPECT_EQ(p.tops(), q.tops());
  EXPECT_NE(Rule::borda_lex(k23).evaluate(p), Rule::borda_lex(k23).evaluate(q));
}

TEST(Efficiency, Examples) {
  EXPECT_TRUE(is_efficient(Rule::dictator(k23, 0)));
  EXPECT_TRUE(is_efficient(Rule::borda_lex(k23)));
  const Rule constant = Rule::constant(k23, a);
  const auto check = check_efficiency(constant);
  ASSERT_FALSE(check.holds);
  EXPECT_TRUE(check.counterexample->validates(constant));
  EXPECT_EQ(check.counterexample->profile.to_string(), "b,a,c|b,a,c");
  EXPECT_EQ(check.counterexample->dominating, b);
  // The hand-picked witness is also a valid domination.
  EXPECT_TRUE((ParetoViolation{Profile::parse("b,c,a|b,c,a"), b}.validates(constant)));
}

TEST(EfficiencyViaTops, Examples) {
  const Rule dict = Rule::tops_table(k23, tops_table_of(Rule::dictator(k23, 0)).outcomes);
  EXPECT_TRUE(efficient_via_tops(dict));
  // (a,b) -> c, every other cell picks agent 0's top.
  EXPECT_FALSE(efficient_via_tops(Rule::parse("TOPS:n=2,m=3:020111222")));
  EXPECT_THROW(efficient_via_tops(Rule::borda_lex(k23)), NotTopsOnly);
}

TEST(EfficiencyViaTops, AgreesWithDefinitionOnEveryTwoAgentRule) {
  std::uint64_t efficient = 0;
  for_each_tops_only_rule(k23, {}, [&](const Rule& f) {
    const bool fast = efficient_via_tops(f);
    EXPECT_EQ(fast, is_efficient(f)) << f.to_string();
    efficient += fast;
    return true;
  });
  EXPECT_EQ(efficient, 64u);
}

TEST(EfficiencyViaTops, AgreesWithDefinitionOnSampledThreeAgentRules) {
  // 10^5 rules would repeat the same comparison; mixing the three sampling
  // spaces keeps both verdicts well represented.
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 3000; ++k) {
    const auto space = static_cast<SampleSpace>(k % 3);
    const Rule f = sample_tops_only_rule({3, 3}, space, rng);
    ASSERT_EQ(efficient_via_tops(f), is_efficient(f)) << f.to_string();
  }
}

TEST(Manipulation, Examples) {
  EXPECT_FALSE(find_manipulation(Rule::dictator(k23, 0)));
  EXPECT_FALSE(find_manipulation(Rule::majority_lex({3, 2})));
  const Rule borda = Rule::borda_lex(k23);
  const auto w = find_manipulation(borda);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->validates(borda));
  EXPECT_TRUE(w->profile[w->agent].prefers(w->improved_outcome, w->sincere_outcome));
}

TEST(Dictator, Examples) {
  EXPECT_EQ(find_dictator(Rule::dictator(k23, 1)), 1);
  EXPECT_EQ(find_dictator(Rule::tops_table(k23, tops_table_of(Rule::dictator(k23, 1)).outcomes)), 1);
  EXPECT_FALSE(find_dictator(Rule::constant(k23, a)));
  EXPECT_FALSE(find_dictator(Rule::parse("TOPS:n=2,m=3:000111221")));
  EXPECT_FALSE(find_dictator(Rule::majority_lex({3, 2})));
}

TEST(Axioms, AgreeWithBruteForceOnEveryTwoAgentRule) {
  for (const int m : {2, 3}) {
    const Dimensions dims{2, m};
    for_each_tops_only_rule(dims, {}, [&](const Rule& f) {
      const std::string digits = f.to_string().substr(std::string("TOPS:n=2,m=3:").size());
      const oracle::TopsRule g{2, m, digits};
      EXPECT_EQ(is_unanimous(f), oracle::unanimous(g, 2, m)) << f.to_string();
      EXPECT_EQ(unanimous_via_tops(f), oracle::unanimous(g, 2, m)) << f.to_string();
      EXPECT_EQ(is_efficient(f), oracle::efficient(g, 2, m)) << f.to_string();
      EXPECT_EQ(is_strategy_proof(f), oracle::strategy_proof(g, 2, m)) << f.to_string();
      EXPECT_EQ(find_dictator(f).value_or(-1), oracle::dictator(g, 2, m)) << f.to_string();
      return true;
    });
  }
}

TEST(Axioms, ClosedFormRulesAgreeWithBruteForce) {
  for (const Dimensions dims : {Dimensions{2, 3}, Dimensions{3, 3}}) {
    const auto borda = [&](const oracle::Prof& p) { return oracle::borda(p, dims.alternatives); };
    const Rule f = Rule::borda_lex(dims);
    EXPECT_EQ(is_unanimous(f), oracle::unanimous(borda, dims.agents, dims.alternatives));
    EXPECT_EQ(is_efficient(f), oracle::efficient(borda, dims.agents, dims.alternatives));
    EXPECT_EQ(is_tops_only(f), oracle::tops_only(borda, dims.agents, dims.alternatives));
    EXPECT_EQ(is_strategy_proof(f), oracle::strategy_proof(borda, dims.agents, dims.alternatives));
  }
}

TEST(Axioms, DictatorshipsSatisfyEveryAxiom) {
  for (const int n : {2, 3})
    for (const int m : {3, 4})
      for (int i = 0; i < n; ++i) {
        const Rule f = Rule::dictator({n, m}, i);
        EXPECT_EQ(find_dictator(f), i);
        EXPECT_TRUE(is_strategy_proof(f));
        EXPECT_TRUE(is_unanimous(f));
        EXPECT_TRUE(is_tops_only(f));
        EXPECT_TRUE(is_efficient(f));
      }
}

TEST(Axioms, WitnessesRevalidate) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Rule f = sample_tops_only_rule({2, 3}, static_cast<SampleSpace>(k % 3), rng);
    if (const auto w = find_manipulation(f)) EXPECT_TRUE(w->validates(f));
    if (const auto e = check_efficiency(f); !e.holds) EXPECT_TRUE(e.counterexample->validates(f));
    if (const auto u = check_unanimity(f); !u.holds) {
      const auto tops = u.counterexample->tops();
      EXPECT_NE(f.evaluate(*u.counterexample), tops[0]);
    }
  }
}

TEST(Axioms, ScanBudget) {
  Limits tight;
  tight.profile_budget = 10;
  EXPECT_THROW(check_unanimity(Rule::dictator(k23, 0), tight), CapExceeded);
  EXPECT_THROW(find_manipulation(Rule::dictator(k23, 0), tight), CapExceeded);
}

}  // namespace
}  // namespace gsv

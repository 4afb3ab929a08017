#pragma once

#include <cstdint>
#include <optional>

namespace gsv {

/// Enumeration caps. Defaults can be overridden through the environment:
/// GSV_MAX_ALTS, GSV_MAX_AGENTS, GSV_PROFILE_BUDGET, GSV_RULE_BUDGET.
struct Limits {
  int max_alternatives = 6;
  int max_agents = 5;
  // Largest (m!)^n a predicate may scan.
  std::uint64_t profile_budget = 20'000'000;
  // Largest m^(m^n) an exhaustive rule-space enumeration may visit.
  std::uint64_t rule_budget = 2'000'000;

  static Limits from_environment();
};

/// Process-wide limits, read from the environment on first use.
const Limits& default_limits();

// Hard ceiling imposed by the single-character rule digit encoding.
inline constexpr int kMaxAlternativesHard = 10;

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b);
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

void require_alternatives(int m, const Limits& limits);
void require_agents(int n, const Limits& limits);

}  // namespace gsv

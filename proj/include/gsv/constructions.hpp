#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gsv/rule.hpp"

namespace gsv {

/// g(P_1, P_3, ..., P_n) = f(P_1, P_1, P_3, ..., P_n). Needs n >= 3.
/// Agent k >= 2 of f becomes agent k-1 of g.
Rule coalesce(const Rule& f, const Limits& limits = default_limits());

/// h(P_1, P_2) = f(P_1, P_2, fixed...). `fixed` holds preferences for agents
/// 3..n of f.
Rule restrict_to_two(const Rule& f, std::span<const Preference> fixed,
                     const Limits& limits = default_limits());

enum class RuleFilter { Unanimous, Efficient, StrategyProof, Dictatorial };
std::string to_string(RuleFilter filter);
std::optional<RuleFilter> parse_rule_filter(std::string_view name);

/// The tops-only rule space at fixed dimensions: base-m digit strings over
/// the m^n tops profiles. Rule codes order digit strings lexicographically.
class TopsRuleSpace {
 public:
  explicit TopsRuleSpace(Dimensions dims);

  Dimensions dimensions() const noexcept { return dims_; }
  std::uint64_t cells() const noexcept { return cells_; }
  /// m^(m^n), or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> size() const noexcept { return size_; }
  /// log10 of the size, for budget messages.
  double log10_size() const noexcept;

  /// Throws CapExceeded with the required work when the space exceeds the
  /// rule budget.
  void require_within_budget(const Limits& limits = default_limits()) const;

  Rule at(std::uint64_t code) const;
  std::vector<std::uint8_t> digits_at(std::uint64_t code) const;

 private:
  Dimensions dims_;
  std::uint64_t cells_;
  std::optional<std::uint64_t> size_;
};

/// Which part of the tops-only space a sampler draws from.
enum class SampleSpace {
  All,        // every digit uniform
  Unanimous,  // diagonal forced, other cells uniform
  Efficient,  // every cell picks one of its distinct tops uniformly
};

Rule sample_tops_only_rule(Dimensions dims, SampleSpace space, std::mt19937_64& rng);

/// Does the rule (tops-only by construction) pass every filter? Filters run
/// cheapest first: unanimity, efficiency via tops, strategy-proofness,
/// dictatorship.
bool passes_filters(const Rule& f, std::span<const RuleFilter> filters,
                    const Limits& limits = default_limits());

/// Visits every tops-only rule passing `filters` in ascending code order.
/// Stop early by returning false from `visit`. Uses mixed-radix increments.
/// Throws CapExceeded when the space is over budget.
void for_each_tops_only_rule(Dimensions dims, std::span<const RuleFilter> filters,
                             const std::function<bool(const Rule&)>& visit,
                             const Limits& limits = default_limits());

std::vector<Rule> enumerate_tops_only_rules(Dimensions dims,
                                            std::span<const RuleFilter> filters,
                                            const Limits& limits = default_limits());

/// The five checks showing a rule is unanimous, strategy-proof, tops-only and
/// efficient without being dictatorial.
struct CounterexampleCertificate {
  Rule rule;
  bool unanimous = false;
  bool strategy_proof = false;
  bool tops_only = false;
  bool efficient = false;
  std::optional<int> dictator;

  bool passes() const noexcept {
    return unanimous && strategy_proof && tops_only && efficient && !dictator;
  }
};

/// MAJLEX on n agents and 2 alternatives, machine-checked.
CounterexampleCertificate gs_counterexample_two_alternatives(
    int agents, const Limits& limits = default_limits());

}  // namespace gsv

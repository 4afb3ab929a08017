#include "gsv/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "gsv/axioms.hpp"
#include "gsv/errors.hpp"

namespace gsv {
namespace {

// Builds a rule on `target` dims by evaluating `source` through `lift`,
// which maps a target-dims tops profile (or profile) to a source-dims one.
template <typename LiftTops, typename LiftProfile>
Rule rebuild(const Rule& source, Dimensions target, LiftTops lift_tops,
             LiftProfile lift_profile, const Limits& limits) {
  if (source.tops_only_by_construction()) {
    const auto cells = checked_pow(target.alternatives, target.agents);
    if (!cells || *cells > limits.profile_budget)
      throw CapExceeded("tops space too large for " + to_string(target));
    std::vector<std::uint8_t> outcomes(*cells);
    for (std::uint64_t code = 0; code < *cells; ++code)
      outcomes[code] = static_cast<std::uint8_t>(
          source.evaluate_tops(lift_tops(TopsProfile::decode(code, target))).index());
    return Rule::tops_table(target, std::move(outcomes));
  }
  const ProfileSpace space(target, limits);
  std::vector<std::uint8_t> outcomes(space.size());
  for (std::uint64_t code = 0; code < space.size(); ++code)
    outcomes[code] = static_cast<std::uint8_t>(source.evaluate(lift_profile(space.at(code))).index());
  return Rule::full_table(target, std::move(outcomes), limits);
}

}  // namespace

Rule coalesce(const Rule& f, const Limits& limits) {
  const Dimensions dims = f.dimensions();
  if (dims.agents < 3)
    throw std::invalid_argument("coalescing needs at least 3 agents, got " +
                                std::to_string(dims.agents));
  const Dimensions target{dims.agents - 1, dims.alternatives};
  if (const auto* d = std::get_if<Dictator>(&f.representation()))
    return Rule::dictator(target, d->agent <= 1 ? 0 : d->agent - 1);
  if (const auto* c = std::get_if<Constant>(&f.representation()))
    return Rule::constant(target, c->value);

  return rebuild(
      f, target,
      [&](const TopsProfile& t) {
        std::vector<Alternative> tops(t.tops().begin(), t.tops().end());
        tops.insert(tops.begin() + 1, tops.front());
        return TopsProfile(std::move(tops), dims.alternatives);
      },
      [&](const Profile& p) {
        std::vector<Preference> prefs(p.preferences().begin(), p.preferences().end());
        prefs.insert(prefs.begin() + 1, prefs.front());
        return Profile(std::move(prefs));
      },
      limits);
}

Rule restrict_to_two(const Rule& f, std::span<const Preference> fixed, const Limits& limits) {
  const Dimensions dims = f.dimensions();
  if (dims.agents < 3)
    throw std::invalid_argument("restriction needs at least 3 agents, got " +
                                std::to_string(dims.agents));
  if (fixed.size() != static_cast<std::size_t>(dims.agents - 2))
    throw DimensionMismatch("restriction needs " + std::to_string(dims.agents - 2) +
                            " fixed preferences, got " + std::to_string(fixed.size()));
  for (const auto& p : fixed)
    if (p.alternatives() != dims.alternatives)
      throw DimensionMismatch("fixed preference has the wrong alternative count");
  const Dimensions target{2, dims.alternatives};
  if (const auto* d = std::get_if<Dictator>(&f.representation()))
    return d->agent <= 1 ? Rule::dictator(target, d->agent)
                         : Rule::constant(target, fixed[d->agent - 2].top());
  if (const auto* c = std::get_if<Constant>(&f.representation()))
    return Rule::constant(target, c->value);

  return rebuild(
      f, target,
      [&](const TopsProfile& t) {
        std::vector<Alternative> tops(t.tops().begin(), t.tops().end());
        for (const auto& p : fixed) tops.push_back(p.top());
        return TopsProfile(std::move(tops), dims.alternatives);
      },
      [&](const Profile& p) {
        std::vector<Preference> prefs(p.preferences().begin(), p.preferences().end());
        prefs.insert(prefs.end(), fixed.begin(), fixed.end());
        return Profile(std::move(prefs));
      },
      limits);
}

std::string to_string(RuleFilter filter) {
  switch (filter) {
    case RuleFilter::Unanimous: return "unanimous";
    case RuleFilter::Efficient: return "efficient";
    case RuleFilter::StrategyProof: return "strategy-proof";
    case RuleFilter::Dictatorial: return "dictatorial";
  }
  return "?";
}

std::optional<RuleFilter> parse_rule_filter(std::string_view name) {
  for (auto f : {RuleFilter::Unanimous, RuleFilter::Efficient, RuleFilter::StrategyProof,
                 RuleFilter::Dictatorial})
    if (name == to_string(f)) return f;
  if (name == "strategy_proof" || name == "sp") return RuleFilter::StrategyProof;
  return std::nullopt;
}

TopsRuleSpace::TopsRuleSpace(Dimensions dims) : dims_(dims) {
  if (dims.agents < 2 || dims.alternatives < 2 || dims.alternatives > kMaxAlternativesHard)
    throw std::invalid_argument("unsupported dimensions " + to_string(dims));
  const auto cells = checked_pow(dims.alternatives, dims.agents);
  if (!cells) throw CapExceeded("tops space does not fit in 64 bits");
  cells_ = *cells;
  size_ = checked_pow(dims.alternatives, cells_);
}

double TopsRuleSpace::log10_size() const noexcept {
  return static_cast<double>(cells_) * std::log10(static_cast<double>(dims_.alternatives));
}

void TopsRuleSpace::require_within_budget(const Limits& limits) const {
  if (size_ && *size_ <= limits.rule_budget) return;
  std::ostringstream msg;
  msg << "exhaustive enumeration of the tops-only rule space at " << to_string(dims_)
      << " needs " << dims_.alternatives << "^" << cells_;
  if (size_) msg << " = " << *size_;
  else msg << " ~ 10^" << static_cast<long long>(log10_size());
  msg << " rules, over the rule budget of " << limits.rule_budget
      << " (use --mode sampled or raise GSV_RULE_BUDGET)";
  throw CapExceeded(msg.str());
}

std::vector<std::uint8_t> TopsRuleSpace::digits_at(std::uint64_t code) const {
  if (!size_ || code >= *size_) throw std::out_of_range("rule code out of range");
  std::vector<std::uint8_t> digits(cells_);
  for (std::uint64_t k = cells_; k-- > 0;) {
    digits[k] = static_cast<std::uint8_t>(code % dims_.alternatives);
    code /= dims_.alternatives;
  }
  return digits;
}

Rule TopsRuleSpace::at(std::uint64_t code) const {
  return Rule::tops_table(dims_, digits_at(code));
}

Rule sample_tops_only_rule(Dimensions dims, SampleSpace space, std::mt19937_64& rng) {
  const TopsRuleSpace rules(dims);
  std::vector<std::uint8_t> digits(rules.cells());
  std::vector<std::uint8_t> distinct;
  for (std::uint64_t cell = 0; cell < rules.cells(); ++cell) {
    const auto tops = TopsProfile::decode(cell, dims);
    distinct.clear();
    for (Alternative t : tops.tops())
      if (std::find(distinct.begin(), distinct.end(), t.index()) == distinct.end())
        distinct.push_back(static_cast<std::uint8_t>(t.index()));
    std::sort(distinct.begin(), distinct.end());
    if (space == SampleSpace::Efficient || (space == SampleSpace::Unanimous && distinct.size() == 1)) {
      std::uniform_int_distribution<std::size_t> pick(0, distinct.size() - 1);
      digits[cell] = distinct[pick(rng)];
    } else {
      std::uniform_int_distribution<int> pick(0, dims.alternatives - 1);
      digits[cell] = static_cast<std::uint8_t>(pick(rng));
    }
  }
  return Rule::tops_table(dims, std::move(digits));
}

bool passes_filters(const Rule& f, std::span<const RuleFilter> filters, const Limits& limits) {
  std::vector<RuleFilter> ordered(filters.begin(), filters.end());
  std::sort(ordered.begin(), ordered.end());
  ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
  const bool by_tops = f.tops_only_by_construction();
  for (RuleFilter filter : ordered) {
    bool ok = true;
    switch (filter) {
      case RuleFilter::Unanimous:
        ok = by_tops ? unanimous_via_tops(f) : check_unanimity(f, limits).holds;
        break;
      case RuleFilter::Efficient:
        ok = by_tops ? efficient_via_tops(f, limits) : check_efficiency(f, limits).holds;
        break;
      case RuleFilter::StrategyProof:
        ok = !find_manipulation(f, limits).has_value();
        break;
      case RuleFilter::Dictatorial:
        ok = find_dictator(f, limits).has_value();
        break;
    }
    if (!ok) return false;
  }
  return true;
}

void for_each_tops_only_rule(Dimensions dims, std::span<const RuleFilter> filters,
                             const std::function<bool(const Rule&)>& visit,
                             const Limits& limits) {
  const TopsRuleSpace space(dims);
  space.require_within_budget(limits);
  std::vector<std::uint8_t> digits(space.cells(), 0);
  const auto m = static_cast<std::uint8_t>(dims.alternatives);
  for (std::uint64_t code = 0; code < *space.size(); ++code) {
    const Rule f = Rule::tops_table(dims, digits);
    if (passes_filters(f, filters, limits) && !visit(f)) return;
    // Increment the least significant (last) digit with carry.
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < m) break;
      digits[k] = 0;
    }
  }
}

std::vector<Rule> enumerate_tops_only_rules(Dimensions dims, std::span<const RuleFilter> filters,
                                            const Limits& limits) {
  std::vector<Rule> out;
  for_each_tops_only_rule(
      dims, filters,
      [&](const Rule& f) {
        out.push_back(f);
        return true;
      },
      limits);
  return out;
}

CounterexampleCertificate gs_counterexample_two_alternatives(int agents, const Limits& limits) {
  require_agents(agents, limits);
  const Rule rule = Rule::majority_lex({agents, 2});
  CounterexampleCertificate cert{rule, false, false, false, false, std::nullopt};
  cert.unanimous = check_unanimity(rule, limits).holds;
  cert.strategy_proof = !find_manipulation(rule, limits).has_value();
  cert.tops_only = check_tops_only(rule, limits).holds;
  cert.efficient = check_efficiency(rule, limits).holds;
  cert.dictator = find_dictator(rule, limits);
  return cert;
}

}  // namespace gsv

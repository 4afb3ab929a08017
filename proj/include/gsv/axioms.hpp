#pragma once

#include <optional>
#include <utility>

#include "gsv/rule.hpp"

namespace gsv {

/// Agent `agent` manipulates at `profile` by reporting `misreport`.
struct ManipulationWitness {
  Profile profile;
  int agent = 0;
  Preference misreport;
  Alternative sincere_outcome;
  Alternative improved_outcome;

  /// Re-evaluates the rule and checks the strict improvement.
  bool validates(const Rule& f) const;
};

/// x is strictly preferred to f(profile) by every agent.
struct ParetoViolation {
  Profile profile;
  Alternative dominating;

  bool validates(const Rule& f) const;
};

struct UnanimityCheck {
  bool holds = true;
  std::optional<Profile> counterexample;
};

struct TopsOnlyCheck {
  bool holds = true;
  /// Two profiles with equal tops and different outcomes.
  std::optional<std::pair<Profile, Profile>> counterexample;
};

struct EfficiencyCheck {
  bool holds = true;
  std::optional<ParetoViolation> counterexample;
};

// Every scan below visits profiles in ascending code order (then agents, then
// misreport codes, then alternatives) and reports the first failure, so
// witnesses are reproducible. All of them throw CapExceeded when the profile
// space exceeds the budget.

UnanimityCheck check_unanimity(const Rule& f, const Limits& limits = default_limits());
TopsOnlyCheck check_tops_only(const Rule& f, const Limits& limits = default_limits());
EfficiencyCheck check_efficiency(const Rule& f, const Limits& limits = default_limits());

inline bool is_unanimous(const Rule& f) { return check_unanimity(f).holds; }
inline bool is_tops_only(const Rule& f) { return check_tops_only(f).holds; }
inline bool is_efficient(const Rule& f) { return check_efficiency(f).holds; }

/// Tops-level efficiency test: a tops-only rule is efficient exactly when it
/// always picks somebody's top. Throws NotTopsOnly for rules that are not
/// tops-only by construction.
bool efficient_via_tops(const Rule& f, const Limits& limits = default_limits());

/// Unanimity read off the tops table diagonal. Same precondition.
bool unanimous_via_tops(const Rule& f);

std::optional<ManipulationWitness> find_manipulation(const Rule& f,
                                                     const Limits& limits = default_limits());
inline bool is_strategy_proof(const Rule& f) { return !find_manipulation(f).has_value(); }

/// The dictator's index, if any.
std::optional<int> find_dictator(const Rule& f, const Limits& limits = default_limits());
inline std::optional<int> is_dictatorial(const Rule& f) { return find_dictator(f); }

}  // namespace gsv

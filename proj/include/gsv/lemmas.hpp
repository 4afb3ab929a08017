#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsv/census.hpp"

namespace gsv {

enum class LemmaId { L1, L3, L4, L5, C1, C2, R1, R2, THM };

std::string to_string(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view text);
const std::vector<LemmaId>& all_lemmas();
/// One-line statement of what the suite checks.
std::string describe(LemmaId id);

/// Failure evidence. `rule` (and `other_rule` for pairwise checks) parse back
/// with Rule::parse in the report's dimensions.
struct Counterexample {
  std::string rule;
  std::optional<std::string> other_rule;
  std::optional<std::string> profile;
  std::string detail;
};

struct VerificationReport {
  LemmaId id;
  RunConfig scope;
  std::string families;
  bool passed = true;
  std::uint64_t checked = 0;  // rules (or pairs) examined
  std::map<std::string, std::uint64_t> tallies;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;
};

/// Runs one quantified check over the tops-only rule space (exhaustive or
/// sampled) and, where relevant, the closed-form library. Throws CapExceeded
/// when exhaustive mode is over budget.
VerificationReport verify_lemma(LemmaId id, const RunConfig& config,
                                const Limits& limits = default_limits());

/// DICT:i for every agent, CONST:x for every alternative, MAJLEX when m = 2,
/// then BORDALEX.
std::vector<Rule> closed_form_library(Dimensions dims);

}  // namespace gsv

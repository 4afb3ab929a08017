#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsv/constructions.hpp"

namespace gsv {

enum class Mode { Exhaustive, Sampled };
std::string to_string(Mode mode);
std::string to_string(SampleSpace space);

/// Scope shared by the census and the lemma suites.
struct RunConfig {
  Dimensions dims;
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  int workers = 1;
  // Census only: which rules get listed / get CSV rows.
  std::vector<RuleFilter> filters;
  // Census only, sampled mode: where samples come from.
  SampleSpace sample_space = SampleSpace::All;
};

struct CensusRow {
  std::string rule;
  bool unanimous = false;
  bool efficient = false;
  bool strategy_proof = false;
  bool dictatorial = false;
  std::uint64_t manipulable_count = 0;
  std::uint64_t dictatorial_count = 0;
};

struct CensusReport {
  RunConfig config;
  // Count cascade; each level is a subset of the previous one.
  std::uint64_t total = 0;
  std::uint64_t unanimous = 0;
  std::uint64_t efficient = 0;       // unanimous and efficient (TE)
  std::uint64_t strategy_proof = 0;  // strategy-proof within TE
  std::uint64_t dictatorial = 0;     // dictatorial within TE
  std::uint64_t listed = 0;          // rules passing config.filters
  std::uint64_t strategy_proof_non_dictatorial = 0;
  std::optional<std::string> first_strategy_proof_non_dictatorial;
  // Rules counted in the last two levels, in code order.
  std::vector<std::string> strategy_proof_rules;
  std::vector<std::string> dictatorial_rules;
  bool strategy_proof_equals_dictatorial = false;
  std::vector<CensusRow> rows;  // verbose mode only
  double elapsed_seconds = 0.0;
};

/// Walks the tops-only rule space (exhaustively, or by seeded sampling in
/// fixed-size chunks so results do not depend on the worker count).
CensusReport census(const RunConfig& config, bool verbose = false,
                    const Limits& limits = default_limits());

/// Seeded pools of tops-only rules. Chunk k of the sample stream draws from
/// an engine seeded with (seed, k), so any prefix is reproducible.
std::vector<Rule> sample_tops_only_rules(Dimensions dims, SampleSpace space,
                                         std::uint64_t count, std::uint64_t seed);

}  // namespace gsv

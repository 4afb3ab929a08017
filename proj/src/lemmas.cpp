#include "gsv/lemmas.hpp"

#include <algorithm>

#include "gsv/axioms.hpp"
#include "gsv/classification.hpp"
#include "gsv/errors.hpp"
#include "gsv/parallel.hpp"

namespace gsv {
namespace {

constexpr std::uint64_t kChunks = 64;

struct Tally {
  std::uint64_t checked = 0;
  std::map<std::string, std::uint64_t> counts;
  std::optional<Counterexample> failure;
};

// Runs `check` on every pool rule. Each chunk stops at its first failure; the
// lowest-index failure wins, independent of the worker count.
template <typename Check>
Tally scan(const std::vector<Rule>& pool, int workers, Check check) {
  auto parts = map_ranges<Tally>(pool.size(), kChunks, resolve_workers(workers),
                                 [&](std::uint64_t begin, std::uint64_t end) {
                                   Tally t;
                                   for (std::uint64_t k = begin; k < end && !t.failure; ++k) {
                                     ++t.checked;
                                     t.failure = check(pool[k], t);
                                   }
                                   return t;
                                 });
  Tally all;
  for (auto& part : parts) {
    all.checked += part.checked;
    for (const auto& [key, value] : part.counts) all.counts[key] += value;
    if (!all.failure) all.failure = std::move(part.failure);
  }
  return all;
}

Rule dictator_table(Dimensions dims, int agent) {
  return Rule::tops_table(dims, tops_table_of(Rule::dictator(dims, agent)).outcomes);
}

std::vector<Rule> tops_pool(const RunConfig& config, SampleSpace space, bool add_dictators,
                            const Limits& limits) {
  if (config.mode == Mode::Exhaustive) return enumerate_tops_only_rules(config.dims, {}, limits);
  auto pool = sample_tops_only_rules(config.dims, space, config.samples, config.seed);
  if (add_dictators)
    for (int i = 0; i < config.dims.agents; ++i) pool.push_back(dictator_table(config.dims, i));
  return pool;
}

std::string pool_description(const RunConfig& config, SampleSpace space, bool add_dictators,
                             bool library) {
  std::string text;
  if (config.mode == Mode::Exhaustive) {
    text = "every tops-only rule at " + to_string(config.dims);
  } else {
    text = std::to_string(config.samples) + " tops-only rules sampled from the " +
           to_string(space) + " space at " + to_string(config.dims) + " (seed " +
           std::to_string(config.seed) + ")";
    if (add_dictators) text += " plus every dictatorship";
  }
  if (library) text += "; closed-form library DICT, CONST, MAJLEX (m=2), BORDALEX";
  return text;
}

std::vector<Rule> with_library(std::vector<Rule> pool, Dimensions dims) {
  auto library = closed_form_library(dims);
  library.insert(library.end(), std::make_move_iterator(pool.begin()),
                 std::make_move_iterator(pool.end()));
  return library;
}

std::vector<ClassificationSummary> definitional_summaries(const std::vector<Rule>& pool,
                                                          int workers, const Limits& limits) {
  auto parts = map_ranges<std::vector<ClassificationSummary>>(
      pool.size(), kChunks, resolve_workers(workers),
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<ClassificationSummary> out;
        for (std::uint64_t k = begin; k < end; ++k)
          out.push_back(classify_all(pool[k], {ClassifyPath::Definitional, false, 1}, limits));
        return out;
      });
  std::vector<ClassificationSummary> all;
  all.reserve(pool.size());
  for (auto& part : parts)
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return all;
}

const std::string kRestrictedFamilies =
    "arbitrary full-table rules are not enumerated; the quantifier ranges over the families above";

}  // namespace

std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return "L1";
    case LemmaId::L3: return "L3";
    case LemmaId::L4: return "L4";
    case LemmaId::L5: return "L5";
    case LemmaId::C1: return "C1";
    case LemmaId::C2: return "C2";
    case LemmaId::R1: return "R1";
    case LemmaId::R2: return "R2";
    case LemmaId::THM: return "THM";
  }
  return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view text) {
  for (LemmaId id : all_lemmas())
    if (text == to_string(id)) return id;
  return std::nullopt;
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids{LemmaId::L1, LemmaId::L3, LemmaId::L4,
                                        LemmaId::L5, LemmaId::C1, LemmaId::C2,
                                        LemmaId::R1, LemmaId::R2, LemmaId::THM};
  return ids;
}

std::string describe(LemmaId id) {
  switch (id) {
    case LemmaId::L1: return "unanimous strategy-proof rules are efficient";
    case LemmaId::L3: return "tops-only efficient rules always select some agent's top";
    case LemmaId::L4:
      return "a tops-only efficient rule is dictatorial iff every profile is dictatorial for it";
    case LemmaId::L5:
      return "for a tops-only rule every profile is exactly one of dictatorial or manipulable";
    case LemmaId::C1: return "unanimous strategy-proof rules are tops-only and efficient";
    case LemmaId::C2:
      return "f is at least as dictatorial as g iff g is at least as manipulable as f";
    case LemmaId::R1:
      return "a tops-only rule is strategy-proof iff every tops-only rule is at least as "
             "manipulable";
    case LemmaId::R2:
      return "a tops-only efficient rule is dictatorial iff it is at least as dictatorial as "
             "every such rule";
    case LemmaId::THM: return "unanimous strategy-proof rules are exactly the dictatorships";
  }
  return "?";
}

std::vector<Rule> closed_form_library(Dimensions dims) {
  std::vector<Rule> library;
  for (int i = 0; i < dims.agents; ++i) library.push_back(Rule::dictator(dims, i));
  for (int x = 0; x < dims.alternatives; ++x) library.push_back(Rule::constant(dims, Alternative(x)));
  if (dims.alternatives == 2) library.push_back(Rule::majority_lex(dims));
  library.push_back(Rule::borda_lex(dims));
  return library;
}

VerificationReport verify_lemma(LemmaId id, const RunConfig& config, const Limits& limits) {
  require_agents(config.dims.agents, limits);
  require_alternatives(config.dims.alternatives, limits);
  if (config.mode == Mode::Exhaustive) TopsRuleSpace(config.dims).require_within_budget(limits);

  VerificationReport report{id, config, {}, true, 0, {}, std::nullopt, {}};
  const Dimensions dims = config.dims;
  const int workers = config.workers;
  Tally tally;

  switch (id) {
    case LemmaId::L1:
    case LemmaId::C1: {
      const bool corollary = id == LemmaId::C1;
      const auto pool =
          with_library(tops_pool(config, SampleSpace::Unanimous, false, limits), dims);
      report.families = pool_description(config, SampleSpace::Unanimous, false, true);
      tally = scan(pool, workers, [&](const Rule& f, Tally& t) -> std::optional<Counterexample> {
        if (!check_unanimity(f, limits).holds) return std::nullopt;
        ++t.counts["unanimous"];
        if (find_manipulation(f, limits)) return std::nullopt;
        ++t.counts["unanimous_strategy_proof"];
        if (const auto eff = check_efficiency(f, limits); !eff.holds)
          return Counterexample{f.to_string(), std::nullopt, eff.counterexample->profile.to_string(),
                                "unanimous and strategy-proof but " +
                                    eff.counterexample->dominating.name() +
                                    " Pareto-dominates the outcome"};
        if (corollary) {
          if (const auto tops = check_tops_only(f, limits); !tops.holds)
            return Counterexample{f.to_string(), std::nullopt, tops.counterexample->first.to_string(),
                                  "unanimous and strategy-proof but not tops-only; same tops as " +
                                      tops.counterexample->second.to_string()};
        }
        return std::nullopt;
      });
      report.notes.push_back(kRestrictedFamilies);
      if (corollary)
        report.notes.push_back(
            "the tops-only half rests on an external result about minimally rich domains "
            "with property T*; it is checked here only on the enumerated families");
      break;
    }

    case LemmaId::L3: {
      const auto pool = tops_pool(config, SampleSpace::Unanimous, false, limits);
      report.families = pool_description(config, SampleSpace::Unanimous, false, false);
      const ProfileSpace space(dims, limits);
      tally = scan(pool, workers, [&](const Rule& f, Tally& t) -> std::optional<Counterexample> {
        if (!check_efficiency(f, limits).holds) return std::nullopt;
        ++t.counts["tops_only_efficient"];
        for (std::uint64_t code = 0; code < space.size(); ++code) {
          const Profile p = space.at(code);
          const Alternative chosen = f.evaluate(p);
          if (p.supporters(chosen).empty())
            return Counterexample{f.to_string(), std::nullopt, p.to_string(),
                                  "selects " + chosen.name() + ", which is nobody's top"};
        }
        return std::nullopt;
      });
      break;
    }

    case LemmaId::L4: {
      const auto pool = tops_pool(config, SampleSpace::Efficient, true, limits);
      report.families = pool_description(config, SampleSpace::Efficient, true, false);
      const std::uint64_t total = ProfileSpace(dims, limits).size();
      tally = scan(pool, workers, [&](const Rule& f, Tally& t) -> std::optional<Counterexample> {
        if (!check_efficiency(f, limits).holds) return std::nullopt;
        ++t.counts["tops_only_efficient"];
        const bool all_dictatorial = count_dictatorial_profiles(f, 1, limits) == total;
        const bool dictatorship = find_dictator(f, limits).has_value();
        if (all_dictatorial) ++t.counts["all_profiles_dictatorial"];
        if (dictatorship) ++t.counts["dictatorial"];
        if (all_dictatorial != dictatorship)
          return Counterexample{f.to_string(), std::nullopt, std::nullopt,
                                all_dictatorial ? "every profile is dictatorial but the rule has no dictator"
                                                : "a dictatorship with a non-dictatorial profile"};
        return std::nullopt;
      });
      break;
    }

    case LemmaId::L5: {
      const auto pool = tops_pool(config, SampleSpace::All, false, limits);
      report.families = pool_description(config, SampleSpace::All, false, false);
      tally = scan(pool, workers, [&](const Rule& f, Tally& t) -> std::optional<Counterexample> {
        const auto summary = classify_all(f, {ClassifyPath::Definitional, true, 1}, limits);
        t.counts["profiles_classified"] += summary.total;
        t.counts["manipulable"] += summary.manipulable_count;
        t.counts["dictatorial"] += summary.dictatorial_count;
        const auto both = *summary.manipulable & *summary.dictatorial;
        auto covered = *summary.manipulable;
        covered |= *summary.dictatorial;
        const auto neither = covered.complement();
        const ProfileSpace space(dims, limits);
        for (std::uint64_t code = 0; code < summary.total; ++code) {
          if (both.contains(code))
            return Counterexample{f.to_string(), std::nullopt, space.at(code).to_string(),
                                  "profile is both dictatorial and manipulable"};
          if (neither.contains(code))
            return Counterexample{f.to_string(), std::nullopt, space.at(code).to_string(),
                                  "profile is neither dictatorial nor manipulable"};
        }
        return std::nullopt;
      });
      report.notes.push_back(
          "exclusivity (never both) is a derived strengthening checked alongside the disjunction");
      break;
    }

    case LemmaId::C2: {
      std::vector<Rule> pool;
      if (config.mode == Mode::Exhaustive) {
        pool = enumerate_tops_only_rules(dims, {}, limits);
        report.families = "every ordered pair of tops-only rules at " + to_string(dims);
      } else {
        pool = sample_tops_only_rules(dims, SampleSpace::All, 2 * config.samples, config.seed);
        report.families = std::to_string(config.samples) +
                          " ordered pairs of tops-only rules sampled uniformly at " +
                          to_string(dims) + " (seed " + std::to_string(config.seed) + ")";
      }
      const auto summaries = definitional_summaries(pool, workers, limits);
      const auto pair_failure = [&](std::size_t a, std::size_t b) -> std::optional<Counterexample> {
        if (check_duality(summaries[a], summaries[b])) return std::nullopt;
        return Counterexample{pool[a].to_string(), pool[b].to_string(), std::nullopt,
                              "|D_f|=" + std::to_string(summaries[a].dictatorial_count) +
                                  " |D_g|=" + std::to_string(summaries[b].dictatorial_count) +
                                  " |M_f|=" + std::to_string(summaries[a].manipulable_count) +
                                  " |M_g|=" + std::to_string(summaries[b].manipulable_count)};
      };
      if (config.mode == Mode::Exhaustive) {
        auto parts = map_ranges<Tally>(pool.size(), kChunks, resolve_workers(workers),
                                       [&](std::uint64_t begin, std::uint64_t end) {
                                         Tally t;
                                         for (std::uint64_t a = begin; a < end && !t.failure; ++a)
                                           for (std::size_t b = 0; b < pool.size() && !t.failure; ++b) {
                                             ++t.checked;
                                             t.failure = pair_failure(a, b);
                                           }
                                         return t;
                                       });
        for (auto& part : parts) {
          tally.checked += part.checked;
          if (!tally.failure) tally.failure = std::move(part.failure);
        }
      } else {
        for (std::uint64_t k = 0; k < config.samples && !tally.failure; ++k) {
          ++tally.checked;
          tally.failure = pair_failure(2 * k, 2 * k + 1);
        }
      }
      tally.counts["rules_classified"] = pool.size();
      report.notes.push_back("counts come from the per-profile definitions, not the tops-cell shortcut");
      break;
    }

    case LemmaId::R1: {
      const auto pool = tops_pool(config, SampleSpace::All, true, limits);
      report.families = pool_description(config, SampleSpace::All, true, false);
      const auto summaries = definitional_summaries(pool, workers, limits);
      std::uint64_t least = summaries.front().manipulable_count;
      for (const auto& s : summaries) least = std::min(least, s.manipulable_count);
      tally = scan(pool, workers, [&](const Rule& f, Tally& t) -> std::optional<Counterexample> {
        const auto k = static_cast<std::size_t>(&f - pool.data());
        const bool strategy_proof = !find_manipulation(f, limits).has_value();
        const bool minimal = summaries[k].manipulable_count <= least;
        if (strategy_proof) ++t.counts["strategy_proof"];
        if (minimal) ++t.counts["least_manipulable"];
        if (strategy_proof != minimal)
          return Counterexample{f.to_string(), std::nullopt, std::nullopt,
                                std::string(strategy_proof ? "strategy-proof" : "manipulable") +
                                    " with |M_f|=" + std::to_string(summaries[k].manipulable_count) +
                                    " against a pool minimum of " + std::to_string(least)};
        return std::nullopt;
      });
      break;
    }

    case LemmaId::R2: {
      auto candidates = tops_pool(config, SampleSpace::Efficient, true, limits);
      std::vector<Rule> pool;
      for (auto& f : candidates)
        if (check_efficiency(f, limits).holds) pool.push_back(std::move(f));
      report.families = pool_description(config, SampleSpace::Efficient, true, false) +
                        ", restricted to efficient rules";
      const auto summaries = definitional_summaries(pool, workers, limits);
      std::uint64_t most = 0;
      for (const auto& s : summaries) most = std::max(most, s.dictatorial_count);
      tally = scan(pool, workers, [&](const Rule& f, Tally& t) -> std::optional<Counterexample> {
        const auto k = static_cast<std::size_t>(&f - pool.data());
        const bool dictatorship = find_dictator(f, limits).has_value();
        const bool maximal = summaries[k].dictatorial_count >= most;
        if (dictatorship) ++t.counts["dictatorial"];
        if (maximal) ++t.counts["most_dictatorial"];
        if (dictatorship != maximal)
          return Counterexample{f.to_string(), std::nullopt, std::nullopt,
                                std::string(dictatorship ? "dictatorship" : "non-dictatorship") +
                                    " with |D_f|=" + std::to_string(summaries[k].dictatorial_count) +
                                    " against a pool maximum of " + std::to_string(most)};
        return std::nullopt;
      });
      break;
    }

    case LemmaId::THM: {
      const auto pool =
          with_library(tops_pool(config, SampleSpace::Efficient, true, limits), dims);
      report.families = pool_description(config, SampleSpace::Efficient, true, true);
      tally = scan(pool, workers, [&](const Rule& f, Tally& t) -> std::optional<Counterexample> {
        const bool unanimous = check_unanimity(f, limits).holds;
        const auto manipulation = unanimous ? find_manipulation(f, limits) : std::nullopt;
        const bool in_s = unanimous && !manipulation;
        const auto dictator = find_dictator(f, limits);
        if (in_s) ++t.counts["unanimous_strategy_proof"];
        if (dictator) ++t.counts["dictatorial"];
        if (in_s && !dictator)
          return Counterexample{f.to_string(), std::nullopt, std::nullopt,
                                "unanimous and strategy-proof but not dictatorial"};
        if (dictator && !in_s)
          return Counterexample{f.to_string(), std::nullopt,
                                manipulation ? std::optional(manipulation->profile.to_string())
                                             : std::nullopt,
                                "dictatorship that is not unanimous and strategy-proof"};
        return std::nullopt;
      });
      report.notes.push_back(kRestrictedFamilies);
      break;
    }
  }

  report.checked = tally.checked;
  report.tallies = std::move(tally.counts);
  report.passed = !tally.failure.has_value();
  report.counterexample = std::move(tally.failure);
  return report;
}

}  // namespace gsv

#include "gsv/census.hpp"

#include <chrono>

#include "gsv/axioms.hpp"
#include "gsv/classification.hpp"
#include "gsv/errors.hpp"
#include "gsv/parallel.hpp"

namespace gsv {
namespace {

constexpr std::uint64_t kSampleChunk = 1024;
constexpr std::uint64_t kExhaustiveChunks = 256;
// Rule strings kept per list; counts are always exact.
constexpr std::size_t kListCap = 1000;

struct Partial {
  std::uint64_t total = 0, unanimous = 0, efficient = 0, strategy_proof = 0, dictatorial = 0;
  std::uint64_t listed = 0, sp_non_dictatorial = 0;
  std::optional<std::string> first_sp_non_dictatorial;
  std::vector<std::string> sp_rules, dictatorial_rules;
  std::vector<CensusRow> rows;
  bool sets_equal = true;
};

void tally(const Rule& f, const RunConfig& config, bool verbose, const Limits& limits,
           Partial& out) {
  ++out.total;
  const bool listed = passes_filters(f, config.filters, limits);
  if (listed) ++out.listed;
  const bool unanimous = unanimous_via_tops(f);
  const bool efficient = unanimous && efficient_via_tops(f, limits);
  bool strategy_proof = false;
  bool dictatorial = false;
  if (efficient) {
    strategy_proof = !find_manipulation(f, limits).has_value();
    dictatorial = find_dictator(f, limits).has_value();
  }
  if (unanimous) ++out.unanimous;
  if (efficient) ++out.efficient;
  if (strategy_proof) {
    ++out.strategy_proof;
    if (out.sp_rules.size() < kListCap) out.sp_rules.push_back(f.to_string());
  }
  if (dictatorial) {
    ++out.dictatorial;
    if (out.dictatorial_rules.size() < kListCap) out.dictatorial_rules.push_back(f.to_string());
  }
  if (strategy_proof != dictatorial) out.sets_equal = false;
  if (strategy_proof && !dictatorial) {
    ++out.sp_non_dictatorial;
    if (!out.first_sp_non_dictatorial) out.first_sp_non_dictatorial = f.to_string();
  }
  if (verbose && listed) {
    CensusRow row;
    row.rule = f.to_string();
    row.unanimous = unanimous;
    row.efficient = efficient_via_tops(f, limits);
    row.strategy_proof = efficient ? strategy_proof : !find_manipulation(f, limits).has_value();
    row.dictatorial = efficient ? dictatorial : find_dictator(f, limits).has_value();
    const auto summary = classify_all(f, {}, limits);
    row.manipulable_count = summary.manipulable_count;
    row.dictatorial_count = summary.dictatorial_count;
    out.rows.push_back(std::move(row));
  }
}

void merge(Partial& into, Partial&& part) {
  into.total += part.total;
  into.unanimous += part.unanimous;
  into.efficient += part.efficient;
  into.strategy_proof += part.strategy_proof;
  into.dictatorial += part.dictatorial;
  into.listed += part.listed;
  into.sp_non_dictatorial += part.sp_non_dictatorial;
  if (!into.first_sp_non_dictatorial) into.first_sp_non_dictatorial = part.first_sp_non_dictatorial;
  for (auto& s : part.sp_rules)
    if (into.sp_rules.size() < kListCap) into.sp_rules.push_back(std::move(s));
  for (auto& s : part.dictatorial_rules)
    if (into.dictatorial_rules.size() < kListCap) into.dictatorial_rules.push_back(std::move(s));
  into.rows.insert(into.rows.end(), std::make_move_iterator(part.rows.begin()),
                   std::make_move_iterator(part.rows.end()));
  into.sets_equal = into.sets_equal && part.sets_equal;
}

std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::string to_string(Mode mode) { return mode == Mode::Exhaustive ? "exhaustive" : "sampled"; }

std::string to_string(SampleSpace space) {
  switch (space) {
    case SampleSpace::All: return "all";
    case SampleSpace::Unanimous: return "unanimous";
    case SampleSpace::Efficient: return "efficient";
  }
  return "?";
}

std::vector<Rule> sample_tops_only_rules(Dimensions dims, SampleSpace space, std::uint64_t count,
                                         std::uint64_t seed) {
  std::vector<Rule> out;
  out.reserve(count);
  for (std::uint64_t chunk = 0; chunk * kSampleChunk < count; ++chunk) {
    auto rng = chunk_engine(seed, chunk);
    const std::uint64_t end = std::min(count, (chunk + 1) * kSampleChunk);
    for (std::uint64_t k = chunk * kSampleChunk; k < end; ++k)
      out.push_back(sample_tops_only_rule(dims, space, rng));
  }
  return out;
}

CensusReport census(const RunConfig& config, bool verbose, const Limits& limits) {
  const auto started = std::chrono::steady_clock::now();
  require_agents(config.dims.agents, limits);
  require_alternatives(config.dims.alternatives, limits);
  const TopsRuleSpace space(config.dims);
  const int workers = resolve_workers(config.workers);

  std::vector<Partial> parts;
  if (config.mode == Mode::Exhaustive) {
    space.require_within_budget(limits);
    const std::uint64_t size = *space.size();
    const auto m = static_cast<std::uint8_t>(config.dims.alternatives);
    parts = map_ranges<Partial>(size, kExhaustiveChunks, workers,
                                [&](std::uint64_t begin, std::uint64_t end) {
                                  Partial out;
                                  if (begin == end) return out;
                                  auto digits = space.digits_at(begin);
                                  for (std::uint64_t code = begin; code < end; ++code) {
                                    tally(Rule::tops_table(config.dims, digits), config, verbose,
                                          limits, out);
                                    for (std::size_t k = digits.size(); k-- > 0;) {
                                      if (++digits[k] < m) break;
                                      digits[k] = 0;
                                    }
                                  }
                                  return out;
                                });
  } else {
    const std::uint64_t chunks = (config.samples + kSampleChunk - 1) / kSampleChunk;
    parts = map_ranges<Partial>(chunks, chunks, workers,
                                [&](std::uint64_t begin, std::uint64_t end) {
                                  Partial out;
                                  for (std::uint64_t chunk = begin; chunk < end; ++chunk) {
                                    auto rng = chunk_engine(config.seed, chunk);
                                    const std::uint64_t stop =
                                        std::min(config.samples, (chunk + 1) * kSampleChunk);
                                    for (std::uint64_t k = chunk * kSampleChunk; k < stop; ++k)
                                      tally(sample_tops_only_rule(config.dims, config.sample_space, rng),
                                            config, verbose, limits, out);
                                  }
                                  return out;
                                });
  }

  Partial all;
  for (auto& part : parts) merge(all, std::move(part));

  CensusReport report;
  report.config = config;
  report.total = all.total;
  report.unanimous = all.unanimous;
  report.efficient = all.efficient;
  report.strategy_proof = all.strategy_proof;
  report.dictatorial = all.dictatorial;
  report.listed = all.listed;
  report.strategy_proof_non_dictatorial = all.sp_non_dictatorial;
  report.first_strategy_proof_non_dictatorial = all.first_sp_non_dictatorial;
  report.strategy_proof_rules = std::move(all.sp_rules);
  report.dictatorial_rules = std::move(all.dictatorial_rules);
  report.strategy_proof_equals_dictatorial = all.sets_equal;
  report.rows = std::move(all.rows);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace gsv

#include "gsv/classification.hpp"

#include <algorithm>
#include <stdexcept>

#include "gsv/errors.hpp"
#include "gsv/parallel.hpp"

namespace gsv {
namespace {

constexpr std::uint64_t kChunks = 64;

DictatorialCheck dictatorial_at(const Rule& f, const ProfileSpace& space, const Profile& p) {
  const Alternative chosen = f.evaluate(p);
  for (int i = 0; i < p.agents(); ++i) {
    if (p[i].top() == chosen) continue;
    for (const auto& q : space.preferences()) {
      const Alternative moved = f.evaluate(p.with_replaced(i, q));
      if (moved != chosen) return {false, Deviation{i, q, moved}};
    }
  }
  return {};
}

std::optional<ManipulationWitness> manipulation_at(const Rule& f, const ProfileSpace& space,
                                                   const Profile& p) {
  for (int i = 0; i < p.agents(); ++i) {
    for (const auto& same_top : space.with_top(p[i].top())) {
      const Profile varied = p.with_replaced(i, same_top);
      const Alternative sincere = f.evaluate(varied);
      if (same_top.top() == sincere) continue;
      for (const auto& q : space.preferences()) {
        const Alternative deviated = f.evaluate(varied.with_replaced(i, q));
        if (same_top.prefers(deviated, sincere))
          return ManipulationWitness{varied, i, q, sincere, deviated};
      }
    }
  }
  return std::nullopt;
}

void require_tops_only(const Rule& f, const Limits& limits) {
  if (f.tops_only_by_construction()) return;
  if (!check_tops_only(f, limits).holds)
    throw NotTopsOnly("manipulable profiles are only defined for tops-only rules; " +
                      f.to_string() + " is not tops-only");
}

void require_same_dims(const Rule& f, const Rule& g) {
  if (f.dimensions() != g.dimensions())
    throw DimensionMismatch("rules live on " + to_string(f.dimensions()) + " and " +
                            to_string(g.dimensions()));
}

bool unanimity_flag(const Rule& f, const Limits& limits) {
  return f.tops_only_by_construction() ? unanimous_via_tops(f) : check_unanimity(f, limits).holds;
}

struct PartialCounts {
  std::uint64_t manipulable = 0;
  std::uint64_t dictatorial = 0;
  std::optional<ProfileSet> manipulable_set;
  std::optional<ProfileSet> dictatorial_set;
};

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::Dictatorial ? "dictatorial" : "manipulable";
}

DictatorialCheck check_dictatorial_profile(const Rule& f, const Profile& p,
                                           const Limits& limits) {
  if (p.dimensions() != f.dimensions())
    throw DimensionMismatch("profile does not match rule dimensions");
  return dictatorial_at(f, ProfileSpace(f.dimensions(), limits), p);
}

std::optional<ManipulationWitness> find_profile_manipulation(const Rule& f, const Profile& p,
                                                             const Limits& limits) {
  if (p.dimensions() != f.dimensions())
    throw DimensionMismatch("profile does not match rule dimensions");
  require_tops_only(f, limits);
  return manipulation_at(f, ProfileSpace(f.dimensions(), limits), p);
}

ProfileClassification classify_profile(const Rule& f, const Profile& p, const Limits& limits) {
  auto witness = find_profile_manipulation(f, p, limits);
  auto dictatorial = check_dictatorial_profile(f, p, limits);
  if (dictatorial.holds == witness.has_value())
    throw std::logic_error("profile " + p.to_string() + " is " +
                           (dictatorial.holds ? "both" : "neither") +
                           " dictatorial and manipulable for " + f.to_string());
  if (dictatorial.holds) return {p, Verdict::Dictatorial, std::nullopt, std::nullopt};
  return {p, Verdict::Manipulable, std::move(witness), std::move(dictatorial.violator)};
}

ClassificationSummary classify_all(const Rule& f, const ClassifyOptions& options,
                                   const Limits& limits) {
  require_tops_only(f, limits);
  const ProfileSpace space(f.dimensions(), limits);
  const Dimensions dims = f.dimensions();
  ClassificationSummary summary;
  summary.rule = f.to_string();
  summary.dims = dims;
  summary.unanimous = unanimity_flag(f, limits);
  summary.total = space.size();
  const int workers = resolve_workers(options.workers);

  // verdict per tops cell; filled by the fast path and used for examples.
  std::vector<bool> cell_dictatorial;

  if (options.path == ClassifyPath::TopsCells) {
    const TopsTable table = tops_table_of(f, limits);
    const std::uint64_t cells = space.tops_count();
    const auto m = static_cast<std::uint64_t>(dims.alternatives);
    std::vector<std::uint64_t> weight(dims.agents);
    for (int i = dims.agents - 1, w = 1; i >= 0; --i, w *= dims.alternatives)
      weight[i] = static_cast<std::uint64_t>(w);

    auto parts = map_ranges<std::vector<bool>>(
        cells, kChunks, workers, [&](std::uint64_t begin, std::uint64_t end) {
          std::vector<bool> out;
          out.reserve(end - begin);
          for (std::uint64_t cell = begin; cell < end; ++cell) {
            const std::uint8_t chosen = table.outcomes[cell];
            bool dictatorial = true;
            for (int i = 0; i < dims.agents && dictatorial; ++i) {
              const std::uint64_t own = (cell / weight[i]) % m;
              if (own == chosen) continue;
              const std::uint64_t base = cell - own * weight[i];
              for (std::uint64_t y = 0; y < m; ++y)
                if (table.outcomes[base + y * weight[i]] != chosen) {
                  dictatorial = false;
                  break;
                }
            }
            out.push_back(dictatorial);
          }
          return out;
        });
    cell_dictatorial.reserve(cells);
    for (const auto& part : parts) cell_dictatorial.insert(cell_dictatorial.end(), part.begin(), part.end());

    const auto dict_cells =
        static_cast<std::uint64_t>(std::count(cell_dictatorial.begin(), cell_dictatorial.end(), true));
    summary.dictatorial_count = dict_cells * space.cell_size();
    summary.manipulable_count = summary.total - summary.dictatorial_count;
    if (options.materialize_sets) {
      ProfileSet manipulable(space.size());
      ProfileSet dictatorial(space.size());
      for (std::uint64_t code = 0; code < space.size(); ++code)
        (cell_dictatorial[space.tops_code_of(code)] ? dictatorial : manipulable).insert(code);
      summary.manipulable = std::move(manipulable);
      summary.dictatorial = std::move(dictatorial);
    }
    for (std::uint64_t code = 0; code < space.size(); ++code) {
      const bool dictatorial = cell_dictatorial[space.tops_code_of(code)];
      if (dictatorial && !summary.example_dictatorial) summary.example_dictatorial = space.at(code);
      if (!dictatorial && !summary.example_manipulation)
        summary.example_manipulation = manipulation_at(f, space, space.at(code));
      if (summary.example_dictatorial && summary.example_manipulation) break;
    }
    return summary;
  }

  const bool materialize = options.materialize_sets;
  auto parts = map_ranges<PartialCounts>(
      space.size(), kChunks, workers, [&](std::uint64_t begin, std::uint64_t end) {
        PartialCounts out;
        if (materialize) {
          out.manipulable_set.emplace(space.size());
          out.dictatorial_set.emplace(space.size());
        }
        for (std::uint64_t code = begin; code < end; ++code) {
          const Profile p = space.at(code);
          if (manipulation_at(f, space, p)) {
            ++out.manipulable;
            if (materialize) out.manipulable_set->insert(code);
          }
          if (dictatorial_at(f, space, p).holds) {
            ++out.dictatorial;
            if (materialize) out.dictatorial_set->insert(code);
          }
        }
        return out;
      });
  if (materialize) {
    summary.manipulable.emplace(space.size());
    summary.dictatorial.emplace(space.size());
  }
  for (const auto& part : parts) {
    summary.manipulable_count += part.manipulable;
    summary.dictatorial_count += part.dictatorial;
    if (materialize) {
      *summary.manipulable |= *part.manipulable_set;
      *summary.dictatorial |= *part.dictatorial_set;
    }
  }
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    if (!summary.example_manipulation) summary.example_manipulation = manipulation_at(f, space, p);
    if (!summary.example_dictatorial && dictatorial_at(f, space, p).holds)
      summary.example_dictatorial = p;
    if (summary.example_dictatorial && summary.example_manipulation) break;
  }
  return summary;
}

std::uint64_t count_dictatorial_profiles(const Rule& f, int workers, const Limits& limits) {
  const ProfileSpace space(f.dimensions(), limits);
  auto parts = map_ranges<std::uint64_t>(
      space.size(), kChunks, resolve_workers(workers),
      [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t n = 0;
        for (std::uint64_t code = begin; code < end; ++code)
          if (dictatorial_at(f, space, space.at(code)).holds) ++n;
        return n;
      });
  std::uint64_t total = 0;
  for (auto n : parts) total += n;
  return total;
}

bool at_least_as_manipulable(const ClassificationSummary& f, const ClassificationSummary& g) {
  if (f.dims != g.dims) throw DimensionMismatch("summaries live on different dimensions");
  return f.manipulable_count >= g.manipulable_count;
}

bool at_least_as_dictatorial(const ClassificationSummary& f, const ClassificationSummary& g) {
  if (f.dims != g.dims) throw DimensionMismatch("summaries live on different dimensions");
  return f.dictatorial_count >= g.dictatorial_count;
}

bool check_duality(const ClassificationSummary& f, const ClassificationSummary& g) {
  return at_least_as_dictatorial(f, g) == at_least_as_manipulable(g, f);
}

bool at_least_as_manipulable(const Rule& f, const Rule& g) {
  require_same_dims(f, g);
  return at_least_as_manipulable(classify_all(f), classify_all(g));
}

bool at_least_as_dictatorial(const Rule& f, const Rule& g) {
  require_same_dims(f, g);
  return count_dictatorial_profiles(f) >= count_dictatorial_profiles(g);
}

bool check_duality(const Rule& f, const Rule& g) {
  require_same_dims(f, g);
  return check_duality(classify_all(f), classify_all(g));
}

RemarkCheck remark_strategyproof_minimal(const Rule& f,
                                         std::span<const ClassificationSummary> pool,
                                         const Limits& limits) {
  const ClassificationSummary own = classify_all(f, {}, limits);
  RemarkCheck check;
  check.count = own.manipulable_count;
  check.property = !find_manipulation(f, limits).has_value();
  check.extremal = std::all_of(pool.begin(), pool.end(), [&](const ClassificationSummary& g) {
    return at_least_as_manipulable(g, own);
  });
  check.holds = check.property == check.extremal;
  return check;
}

RemarkCheck remark_strategyproof_minimal(const Rule& f, std::span<const Rule> pool,
                                         const Limits& limits) {
  std::vector<ClassificationSummary> summaries;
  summaries.reserve(pool.size());
  for (const auto& g : pool) {
    require_same_dims(f, g);
    summaries.push_back(classify_all(g, {}, limits));
  }
  return remark_strategyproof_minimal(f, summaries, limits);
}

RemarkCheck remark_dictatorial_maximal(const Rule& f,
                                       std::span<const ClassificationSummary> pool,
                                       const Limits& limits) {
  if (!(f.tops_only_by_construction() || check_tops_only(f, limits).holds) ||
      !check_efficiency(f, limits).holds)
    throw PreconditionFailed("rule " + f.to_string() + " is not tops-only and efficient");
  const ClassificationSummary own = classify_all(f, {}, limits);
  RemarkCheck check;
  check.count = own.dictatorial_count;
  check.property = find_dictator(f, limits).has_value();
  check.extremal = std::all_of(pool.begin(), pool.end(), [&](const ClassificationSummary& g) {
    return at_least_as_dictatorial(own, g);
  });
  check.holds = check.property == check.extremal;
  return check;
}

RemarkCheck remark_dictatorial_maximal(const Rule& f, std::span<const Rule> pool,
                                       const Limits& limits) {
  std::vector<ClassificationSummary> summaries;
  summaries.reserve(pool.size());
  for (const auto& g : pool) {
    require_same_dims(f, g);
    summaries.push_back(classify_all(g, {}, limits));
  }
  return remark_dictatorial_maximal(f, summaries, limits);
}

}  // namespace gsv

#include "gsv/axioms.hpp"

#include "gsv/errors.hpp"

namespace gsv {

bool ManipulationWitness::validates(const Rule& f) const {
  if (f.evaluate(profile) != sincere_outcome) return false;
  if (f.evaluate(profile.with_replaced(agent, misreport)) != improved_outcome) return false;
  return profile[agent].prefers(improved_outcome, sincere_outcome);
}

bool ParetoViolation::validates(const Rule& f) const {
  const Alternative chosen = f.evaluate(profile);
  for (const auto& p : profile.preferences())
    if (!p.prefers(dominating, chosen)) return false;
  return true;
}

UnanimityCheck check_unanimity(const Rule& f, const Limits& limits) {
  const ProfileSpace space(f.dimensions(), limits);
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    const Alternative common = p[0].top();
    bool unanimous_profile = true;
    for (const auto& pref : p.preferences())
      if (pref.top() != common) {
        unanimous_profile = false;
        break;
      }
    if (unanimous_profile && f.evaluate(p) != common) return {false, p};
  }
  return {};
}

TopsOnlyCheck check_tops_only(const Rule& f, const Limits& limits) {
  const ProfileSpace space(f.dimensions(), limits);
  // First profile seen per tops cell; any later disagreement is a witness.
  std::vector<std::optional<std::uint64_t>> first(space.tops_count());
  std::vector<Alternative> outcome(space.tops_count());
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    const Alternative chosen = f.evaluate(p);
    const std::uint64_t cell = space.tops_code_of(code);
    if (!first[cell]) {
      first[cell] = code;
      outcome[cell] = chosen;
    } else if (outcome[cell] != chosen) {
      return {false, std::make_pair(space.at(*first[cell]), p)};
    }
  }
  return {};
}

EfficiencyCheck check_efficiency(const Rule& f, const Limits& limits) {
  const ProfileSpace space(f.dimensions(), limits);
  const int m = f.alternatives();
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    const Alternative chosen = f.evaluate(p);
    for (int xi = 0; xi < m; ++xi) {
      const Alternative x(xi);
      bool dominates = true;
      for (const auto& pref : p.preferences())
        if (!pref.prefers(x, chosen)) {
          dominates = false;
          break;
        }
      if (dominates) return {false, ParetoViolation{p, x}};
    }
  }
  return {};
}

namespace {

void require_tops_only(const Rule& f) {
  if (!f.tops_only_by_construction())
    throw NotTopsOnly("rule " + f.to_string() + " is not tops-only by construction");
}

}  // namespace

bool efficient_via_tops(const Rule& f, const Limits& limits) {
  require_tops_only(f);
  const TopsTable table = tops_table_of(f, limits);
  const Dimensions dims = f.dimensions();
  for (std::uint64_t code = 0; code < table.outcomes.size(); ++code)
    if (!TopsProfile::decode(code, dims).contains(Alternative(table.outcomes[code])))
      return false;
  return true;
}

bool unanimous_via_tops(const Rule& f) {
  require_tops_only(f);
  const Dimensions dims = f.dimensions();
  for (int x = 0; x < dims.alternatives; ++x) {
    std::vector<Alternative> tops(dims.agents, Alternative(x));
    if (f.evaluate_tops(TopsProfile(std::move(tops), dims.alternatives)) != Alternative(x))
      return false;
  }
  return true;
}

std::optional<ManipulationWitness> find_manipulation(const Rule& f, const Limits& limits) {
  const ProfileSpace space(f.dimensions(), limits);
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    const Alternative sincere = f.evaluate(p);
    for (int i = 0; i < f.agents(); ++i) {
      if (p[i].top() == sincere) continue;  // nothing beats the top
      for (const auto& q : space.preferences()) {
        const Alternative deviated = f.evaluate(p.with_replaced(i, q));
        if (p[i].prefers(deviated, sincere))
          return ManipulationWitness{p, i, q, sincere, deviated};
      }
    }
  }
  return std::nullopt;
}

std::optional<int> find_dictator(const Rule& f, const Limits& limits) {
  if (const auto* d = std::get_if<Dictator>(&f.representation())) return d->agent;
  const ProfileSpace space(f.dimensions(), limits);
  std::vector<bool> candidate(f.agents(), true);
  int remaining = f.agents();
  for (std::uint64_t code = 0; code < space.size() && remaining > 0; ++code) {
    const Profile p = space.at(code);
    const Alternative chosen = f.evaluate(p);
    for (int i = 0; i < f.agents(); ++i)
      if (candidate[i] && p[i].top() != chosen) {
        candidate[i] = false;
        --remaining;
      }
  }
  for (int i = 0; i < f.agents(); ++i)
    if (candidate[i]) return i;
  return std::nullopt;
}

}  // namespace gsv

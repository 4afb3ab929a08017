#include "gsv/profile.hpp"

#include <stdexcept>

#include "gsv/errors.hpp"

namespace gsv {

std::string to_string(const Dimensions& dims) {
  return "n=" + std::to_string(dims.agents) + ",m=" + std::to_string(dims.alternatives);
}

TopsProfile::TopsProfile(std::vector<Alternative> tops, int alternatives)
    : tops_(std::move(tops)), m_(alternatives) {
  for (Alternative x : tops_)
    if (x.index() < 0 || x.index() >= m_)
      throw std::out_of_range("top alternative out of range");
}

std::uint64_t TopsProfile::code() const noexcept {
  std::uint64_t code = 0;
  for (Alternative x : tops_) code = code * static_cast<std::uint64_t>(m_) + x.index();
  return code;
}

TopsProfile TopsProfile::decode(std::uint64_t code, Dimensions dims) {
  std::vector<Alternative> tops(dims.agents);
  for (int i = dims.agents - 1; i >= 0; --i) {
    tops[i] = Alternative(static_cast<int>(code % dims.alternatives));
    code /= dims.alternatives;
  }
  if (code != 0) throw std::out_of_range("tops profile code out of range");
  return TopsProfile(std::move(tops), dims.alternatives);
}

bool TopsProfile::contains(Alternative x) const noexcept {
  for (Alternative t : tops_)
    if (t == x) return true;
  return false;
}

Profile::Profile(std::vector<Preference> prefs) : prefs_(std::move(prefs)) {
  if (prefs_.size() < 2)
    throw std::invalid_argument("a profile needs at least 2 agents");
  for (const auto& p : prefs_)
    if (p.alternatives() != prefs_.front().alternatives())
      throw DimensionMismatch("profile preferences disagree on the alternative count");
}

Profile Profile::with_replaced(int agent, const Preference& q) const {
  if (agent < 0 || agent >= agents())
    throw std::out_of_range("agent index " + std::to_string(agent) + " out of range");
  if (q.alternatives() != alternatives())
    throw DimensionMismatch("replacement preference has the wrong alternative count");
  Profile out = *this;
  out.prefs_[agent] = q;
  return out;
}

TopsProfile Profile::tops() const {
  std::vector<Alternative> tops;
  tops.reserve(prefs_.size());
  for (const auto& p : prefs_) tops.push_back(p.top());
  return TopsProfile(std::move(tops), alternatives());
}

std::vector<int> Profile::supporters(Alternative x) const {
  std::vector<int> out;
  for (int i = 0; i < agents(); ++i)
    if (prefs_[i].top() == x) out.push_back(i);
  return out;
}

std::uint64_t Profile::code() const noexcept {
  const std::uint64_t radix = factorial(alternatives());
  std::uint64_t code = 0;
  for (const auto& p : prefs_) code = code * radix + p.code();
  return code;
}

std::string Profile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < prefs_.size(); ++i) {
    if (i > 0) out += '|';
    out += prefs_[i].to_string();
  }
  return out;
}

Profile Profile::parse(std::string_view text) {
  std::vector<Preference> prefs;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view part =
        text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
    try {
      prefs.push_back(Preference::parse(part));
    } catch (const ParseError& e) {
      // Re-anchor the position to the whole profile string.
      std::string what = e.what();
      what = what.substr(0, what.rfind(" (at position"));
      throw ParseError(what, start + e.position());
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (prefs.size() < 2) throw ParseError("a profile needs at least 2 preferences", text.size());
  for (std::size_t i = 1; i < prefs.size(); ++i)
    if (prefs[i].alternatives() != prefs[0].alternatives())
      throw ParseError("preferences disagree on the alternative count", 0);
  return Profile(std::move(prefs));
}

ProfileSpace::ProfileSpace(Dimensions dims, const Limits& limits) : dims_(dims) {
  require_agents(dims.agents, limits);
  require_alternatives(dims.alternatives, limits);
  const auto size = checked_pow(factorial(dims.alternatives), dims.agents);
  if (!size || *size > limits.profile_budget)
    throw CapExceeded("profile space (" + std::to_string(dims.alternatives) + "!)^" +
                      std::to_string(dims.agents) + " exceeds the profile budget of " +
                      std::to_string(limits.profile_budget) +
                      " (raise GSV_PROFILE_BUDGET)");
  size_ = *size;
  tops_count_ = *checked_pow(dims.alternatives, dims.agents);
  prefs_ = enumerate_preferences(dims.alternatives, limits);
  by_top_.resize(dims.alternatives);
  for (const auto& p : prefs_) by_top_[p.top().index()].push_back(p);
}

std::uint64_t ProfileSpace::cell_size() const noexcept {
  return size_ / tops_count_;
}

Profile ProfileSpace::at(std::uint64_t code) const {
  if (code >= size_) throw std::out_of_range("profile code out of range");
  const std::uint64_t radix = prefs_.size();
  std::vector<Preference> prefs(static_cast<std::size_t>(dims_.agents), prefs_.front());
  for (int i = dims_.agents - 1; i >= 0; --i) {
    prefs[i] = prefs_[code % radix];
    code /= radix;
  }
  return Profile(std::move(prefs));
}

std::uint64_t ProfileSpace::tops_code_of(std::uint64_t profile_code) const {
  const std::uint64_t radix = prefs_.size();
  std::uint64_t weight = 1;
  std::uint64_t tops = 0;
  for (int i = dims_.agents - 1; i >= 0; --i) {
    tops += static_cast<std::uint64_t>(prefs_[profile_code % radix].top().index()) * weight;
    weight *= dims_.alternatives;
    profile_code /= radix;
  }
  return tops;
}

std::span<const Preference> ProfileSpace::with_top(Alternative x) const {
  return by_top_.at(x.index());
}

}  // namespace gsv

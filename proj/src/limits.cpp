#include "gsv/limits.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "gsv/errors.hpp"

namespace gsv {
namespace {

template <typename T>
void override_from_env(const char* name, T& value) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    value = static_cast<T>(std::stoull(raw));
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("invalid value for ") + name +
                                ": " + raw);
  }
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  override_from_env("GSV_MAX_ALTS", limits.max_alternatives);
  override_from_env("GSV_MAX_AGENTS", limits.max_agents);
  override_from_env("GSV_PROFILE_BUDGET", limits.profile_budget);
  override_from_env("GSV_RULE_BUDGET", limits.rule_budget);
  if (limits.max_alternatives > kMaxAlternativesHard)
    limits.max_alternatives = kMaxAlternativesHard;
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::nullopt;
  return a * b;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    auto next = checked_mul(result, base);
    if (!next) return std::nullopt;
    result = *next;
  }
  return result;
}

void require_alternatives(int m, const Limits& limits) {
  if (m < 2)
    throw std::invalid_argument("need at least 2 alternatives, got " +
                                std::to_string(m));
  if (m > limits.max_alternatives)
    throw CapExceeded(std::to_string(m) + " alternatives exceeds the cap of " +
                      std::to_string(limits.max_alternatives) +
                      " (raise GSV_MAX_ALTS)");
}

void require_agents(int n, const Limits& limits) {
  if (n < 2)
    throw std::invalid_argument("need at least 2 agents, got " +
                                std::to_string(n));
  if (n > limits.max_agents)
    throw CapExceeded(std::to_string(n) + " agents exceeds the cap of " +
                      std::to_string(limits.max_agents) +
                      " (raise GSV_MAX_AGENTS)");
}

}  // namespace gsv

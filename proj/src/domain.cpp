#include "gsv/domain.hpp"

#include <stdexcept>

#include "gsv/errors.hpp"

namespace gsv {

PreferenceDomain::PreferenceDomain(std::vector<Preference> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("a preference domain must be non-empty");
  m_ = members_.front().alternatives();
  for (const auto& p : members_)
    if (p.alternatives() != m_)
      throw DimensionMismatch("domain members disagree on the alternative count");
}

PreferenceDomain PreferenceDomain::universal(int m, const Limits& limits) {
  return PreferenceDomain(enumerate_preferences(m, limits));
}

bool is_minimally_rich(const PreferenceDomain& domain) {
  std::vector<bool> covered(domain.alternatives(), false);
  for (const auto& p : domain.members()) covered[p.top().index()] = true;
  for (bool c : covered)
    if (!c) return false;
  return true;
}

bool satisfies_property_t_star(const PreferenceDomain& domain) {
  const int m = domain.alternatives();
  const auto& members = domain.members();
  for (const auto& p : members) {
    for (int xi = 0; xi < m; ++xi) {
      const Alternative x(xi);
      if (x == p.top()) continue;
      for (int yi = 0; yi < m; ++yi) {
        const Alternative y(yi);
        // y must beat x in every member sharing p's top.
        bool beats_everywhere = true;
        for (const auto& q : members)
          if (q.top() == p.top() && !q.prefers(y, x)) {
            beats_everywhere = false;
            break;
          }
        if (!beats_everywhere) continue;

        bool placed = false;
        for (const auto& candidate : members) {
          if (candidate.top() != x) continue;
          bool above_all = true;
          for (int zi = 0; zi < m && above_all; ++zi) {
            const Alternative z(zi);
            if (p.prefers(x, z) && !candidate.prefers(y, z)) above_all = false;
          }
          if (above_all) {
            placed = true;
            break;
          }
        }
        if (!placed) return false;
      }
    }
  }
  return true;
}

}  // namespace gsv

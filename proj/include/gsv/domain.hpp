#pragma once

#include <vector>

#include "gsv/preference.hpp"

namespace gsv {

/// A non-empty set of preferences over a common alternative count.
class PreferenceDomain {
 public:
  explicit PreferenceDomain(std::vector<Preference> members);
  static PreferenceDomain universal(int m, const Limits& limits = default_limits());

  int alternatives() const noexcept { return m_; }
  const std::vector<Preference>& members() const noexcept { return members_; }

 private:
  std::vector<Preference> members_;
  int m_;
};

/// Every alternative is the top of some member.
bool is_minimally_rich(const PreferenceDomain& domain);

/// For each member P and each x other than its top, every y that beats x in
/// all members sharing P's top must be placeable above everything P ranks
/// below x, by some member whose top is x.
bool satisfies_property_t_star(const PreferenceDomain& domain);

}  // namespace gsv

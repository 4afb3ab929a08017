#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsv/preference.hpp"

namespace gsv {

/// Agent count and alternative count a profile or rule lives on.
struct Dimensions {
  int agents = 2;
  int alternatives = 3;

  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

std::string to_string(const Dimensions& dims);

/// The vector of top alternatives of a profile.
class TopsProfile {
 public:
  TopsProfile(std::vector<Alternative> tops, int alternatives);

  int agents() const noexcept { return static_cast<int>(tops_.size()); }
  int alternatives() const noexcept { return m_; }
  Alternative operator[](int agent) const { return tops_.at(agent); }
  std::span<const Alternative> tops() const noexcept { return tops_; }

  /// Base-m number with agent 0 as the most significant digit.
  std::uint64_t code() const noexcept;
  static TopsProfile decode(std::uint64_t code, Dimensions dims);

  bool contains(Alternative x) const noexcept;

  friend bool operator==(const TopsProfile&, const TopsProfile&) = default;

 private:
  std::vector<Alternative> tops_;
  int m_;
};

/// One strict preference per agent. Immutable; "changes" build new values.
class Profile {
 public:
  /// Requires at least two agents and a common alternative count.
  explicit Profile(std::vector<Preference> prefs);

  int agents() const noexcept { return static_cast<int>(prefs_.size()); }
  int alternatives() const noexcept { return prefs_.front().alternatives(); }
  Dimensions dimensions() const noexcept { return {agents(), alternatives()}; }
  const Preference& operator[](int agent) const { return prefs_.at(agent); }
  std::span<const Preference> preferences() const noexcept { return prefs_; }

  /// (q, P_-i). Throws std::out_of_range / DimensionMismatch.
  Profile with_replaced(int agent, const Preference& q) const;
  TopsProfile tops() const;
  /// Agents whose top is x, ascending.
  std::vector<int> supporters(Alternative x) const;

  /// Mixed-radix code over preference codes, agent 0 most significant.
  std::uint64_t code() const noexcept;

  /// "a,b,c|c,a,b"
  std::string to_string() const;
  static Profile parse(std::string_view text);

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<Preference> prefs_;
};

inline TopsProfile tops_of(const Profile& p) { return p.tops(); }
inline std::vector<int> supporters(const Profile& p, Alternative x) {
  return p.supporters(x);
}

/// The full profile space P^n at fixed dimensions, addressable by code.
class ProfileSpace {
 public:
  /// Throws CapExceeded when (m!)^n exceeds the profile budget.
  explicit ProfileSpace(Dimensions dims, const Limits& limits = default_limits());

  Dimensions dimensions() const noexcept { return dims_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Number of profiles sharing any given tops profile: ((m-1)!)^n.
  std::uint64_t cell_size() const noexcept;
  std::uint64_t tops_count() const noexcept { return tops_count_; }

  Profile at(std::uint64_t code) const;
  std::uint64_t tops_code_of(std::uint64_t profile_code) const;
  std::span<const Preference> preferences() const noexcept { return prefs_; }
  /// Preferences with the given top, ascending by code.
  std::span<const Preference> with_top(Alternative x) const;

 private:
  Dimensions dims_;
  std::vector<Preference> prefs_;
  std::vector<std::vector<Preference>> by_top_;
  std::uint64_t size_ = 0;
  std::uint64_t tops_count_ = 0;
};

}  // namespace gsv

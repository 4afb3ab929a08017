#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsv/limits.hpp"

namespace gsv {

/// An element of the outcome set, identified by its 0-based index.
/// Text form uses letters: 0 -> "a", 1 -> "b", ...
class Alternative {
 public:
  constexpr Alternative() = default;
  constexpr explicit Alternative(int index) : index_(index) {}

  constexpr int index() const noexcept { return index_; }
  std::string name() const;

  friend constexpr auto operator<=>(Alternative, Alternative) = default;

 private:
  int index_ = 0;
};

std::uint64_t factorial(int k);

/// Strict total order over m alternatives, best first.
///
/// The canonical code is the lexicographic rank of the ranking among all m!
/// permutations (Lehmer code), so (a,b,c) has code 0 and (c,b,a) has code 5.
class Preference {
 public:
  /// Throws std::invalid_argument unless `ranking` is a permutation of [0, m).
  explicit Preference(std::span<const Alternative> ranking);
  Preference(std::initializer_list<int> ranking);

  int alternatives() const noexcept { return m_; }
  Alternative top() const noexcept { return Alternative(order_[0]); }
  Alternative at_rank(int rank) const;
  int rank_of(Alternative x) const;
  std::vector<Alternative> ranking() const;

  /// x P y: x strictly precedes y. Throws std::out_of_range on bad indices.
  bool prefers(Alternative x, Alternative y) const;
  /// x R y: x = y or x P y.
  bool weakly_prefers(Alternative x, Alternative y) const;

  std::uint64_t code() const noexcept { return code_; }

  /// "a,b,c"
  std::string to_string() const;
  static Preference parse(std::string_view text);

  friend bool operator==(const Preference& a, const Preference& b) noexcept {
    return a.m_ == b.m_ && a.code_ == b.code_;
  }

 private:
  void check(Alternative x) const;

  std::array<std::uint8_t, kMaxAlternativesHard> order_{};
  std::array<std::uint8_t, kMaxAlternativesHard> position_{};
  std::uint8_t m_ = 0;
  std::uint64_t code_ = 0;
};

std::uint64_t encode_preference(const Preference& p);
/// Throws std::out_of_range when code >= m!.
Preference decode_preference(std::uint64_t code, int m);

/// All m! preferences in ascending code order. Throws CapExceeded above the
/// configured alternative cap.
std::vector<Preference> enumerate_preferences(
    int m, const Limits& limits = default_limits());

}  // namespace gsv

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsv {

/// Fixed-size bitset over profile codes.
class ProfileSet {
 public:
  ProfileSet() = default;
  explicit ProfileSet(std::uint64_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::uint64_t size() const noexcept { return size_; }
  void insert(std::uint64_t code) { words_[code / 64] |= std::uint64_t{1} << (code % 64); }
  bool contains(std::uint64_t code) const {
    return (words_[code / 64] >> (code % 64)) & 1U;
  }
  std::uint64_t count() const noexcept;

  ProfileSet& operator|=(const ProfileSet& other);
  friend ProfileSet operator&(const ProfileSet& a, const ProfileSet& b);
  ProfileSet complement() const;

  /// Big-endian hex over bit positions: the first character covers codes
  /// 0..3, most significant bit first.
  std::string to_hex() const;

  friend bool operator==(const ProfileSet&, const ProfileSet&) = default;

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gsv

#include "gsv/profile_set.hpp"

#include <bit>
#include <stdexcept>

namespace gsv {

std::uint64_t ProfileSet::count() const noexcept {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

ProfileSet& ProfileSet::operator|=(const ProfileSet& other) {
  if (other.size_ != size_) throw std::invalid_argument("profile set size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ProfileSet operator&(const ProfileSet& a, const ProfileSet& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("profile set size mismatch");
  ProfileSet out(a.size_);
  for (std::size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
  return out;
}

ProfileSet ProfileSet::complement() const {
  ProfileSet out(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (size_ % 64 != 0 && !out.words_.empty())
    out.words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  return out;
}

std::string ProfileSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((size_ + 3) / 4);
  for (std::uint64_t base = 0; base < size_; base += 4) {
    unsigned nibble = 0;
    for (std::uint64_t k = 0; k < 4; ++k) {
      nibble <<= 1;
      if (base + k < size_ && contains(base + k)) nibble |= 1U;
    }
    out += kDigits[nibble];
  }
  return out;
}

}  // namespace gsv

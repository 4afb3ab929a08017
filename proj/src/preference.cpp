#include "gsv/preference.hpp"

#include <stdexcept>

#include "gsv/errors.hpp"

namespace gsv {

std::string Alternative::name() const {
  if (index_ >= 0 && index_ < 26) return std::string(1, static_cast<char>('a' + index_));
  return "#" + std::to_string(index_);
}

std::uint64_t factorial(int k) {
  std::uint64_t result = 1;
  for (int i = 2; i <= k; ++i) result *= static_cast<std::uint64_t>(i);
  return result;
}

Preference::Preference(std::span<const Alternative> ranking) {
  const auto m = ranking.size();
  if (m < 1 || m > static_cast<std::size_t>(kMaxAlternativesHard))
    throw std::invalid_argument("preference over " + std::to_string(m) +
                                " alternatives is not supported");
  m_ = static_cast<std::uint8_t>(m);
  std::array<bool, kMaxAlternativesHard> seen{};
  for (std::size_t rank = 0; rank < m; ++rank) {
    const int x = ranking[rank].index();
    if (x < 0 || static_cast<std::size_t>(x) >= m || seen[x])
      throw std::invalid_argument("ranking is not a permutation of [0, " +
                                  std::to_string(m) + ")");
    seen[x] = true;
    order_[rank] = static_cast<std::uint8_t>(x);
    position_[x] = static_cast<std::uint8_t>(rank);
  }
  // Lehmer code: digit i counts the later entries smaller than entry i.
  code_ = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < m; ++j)
      if (order_[j] < order_[i]) ++smaller;
    code_ += smaller * factorial(static_cast<int>(m - 1 - i));
  }
}

namespace {
std::vector<Alternative> to_alternatives(std::initializer_list<int> xs) {
  std::vector<Alternative> out;
  out.reserve(xs.size());
  for (int x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

Preference::Preference(std::initializer_list<int> ranking)
    : Preference(std::span<const Alternative>(to_alternatives(ranking))) {}

void Preference::check(Alternative x) const {
  if (x.index() < 0 || x.index() >= m_)
    throw std::out_of_range("alternative index " + std::to_string(x.index()) +
                            " out of range for m=" + std::to_string(m_));
}

Alternative Preference::at_rank(int rank) const {
  if (rank < 0 || rank >= m_) throw std::out_of_range("rank out of range");
  return Alternative(order_[rank]);
}

int Preference::rank_of(Alternative x) const {
  check(x);
  return position_[x.index()];
}

std::vector<Alternative> Preference::ranking() const {
  std::vector<Alternative> out;
  out.reserve(m_);
  for (int r = 0; r < m_; ++r) out.emplace_back(order_[r]);
  return out;
}

bool Preference::prefers(Alternative x, Alternative y) const {
  check(x);
  check(y);
  return position_[x.index()] < position_[y.index()];
}

bool Preference::weakly_prefers(Alternative x, Alternative y) const {
  return x == y ? (check(x), true) : prefers(x, y);
}

std::string Preference::to_string() const {
  std::string out;
  for (int r = 0; r < m_; ++r) {
    if (r > 0) out += ',';
    out += Alternative(order_[r]).name();
  }
  return out;
}

Preference Preference::parse(std::string_view text) {
  std::vector<Alternative> ranking;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size()) throw ParseError("expected an alternative name", pos);
    const char c = text[pos];
    if (c < 'a' || c >= 'a' + kMaxAlternativesHard)
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    ranking.emplace_back(c - 'a');
    ++pos;
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw ParseError(std::string("expected ',' but found '") + text[pos] + "'", pos);
    ++pos;
  }
  std::vector<bool> seen(ranking.size(), false);
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    const auto x = static_cast<std::size_t>(ranking[i].index());
    if (x >= ranking.size() || seen[x])
      throw ParseError("not a strict ranking of the first " +
                           std::to_string(ranking.size()) + " alternatives",
                       2 * i);
    seen[x] = true;
  }
  return Preference(std::span<const Alternative>(ranking));
}

std::uint64_t encode_preference(const Preference& p) { return p.code(); }

Preference decode_preference(std::uint64_t code, int m) {
  if (m < 1 || m > kMaxAlternativesHard)
    throw std::out_of_range("unsupported alternative count " + std::to_string(m));
  if (code >= factorial(m))
    throw std::out_of_range("preference code " + std::to_string(code) +
                            " out of range [0, " + std::to_string(factorial(m)) + ")");
  std::vector<int> pool(m);
  for (int i = 0; i < m; ++i) pool[i] = i;
  std::vector<Alternative> ranking;
  ranking.reserve(m);
  for (int i = 0; i < m; ++i) {
    const std::uint64_t weight = factorial(m - 1 - i);
    const auto digit = static_cast<std::size_t>(code / weight);
    code %= weight;
    ranking.emplace_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Preference(std::span<const Alternative>(ranking));
}

std::vector<Preference> enumerate_preferences(int m, const Limits& limits) {
  require_alternatives(m, limits);
  const std::uint64_t count = factorial(m);
  std::vector<Preference> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code)
    out.push_back(decode_preference(code, m));
  return out;
}

}  // namespace gsv

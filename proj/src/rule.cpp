#include "gsv/rule.hpp"

#include <charconv>
#include <stdexcept>

#include "gsv/errors.hpp"

namespace gsv {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void check_dims(Dimensions dims) {
  if (dims.agents < 2) throw std::invalid_argument("a rule needs at least 2 agents");
  if (dims.alternatives < 2 || dims.alternatives > kMaxAlternativesHard)
    throw std::invalid_argument("unsupported alternative count " +
                                std::to_string(dims.alternatives));
}

void check_outcomes(const std::vector<std::uint8_t>& outcomes, int m) {
  for (auto o : outcomes)
    if (o >= m) throw std::invalid_argument("table outcome out of range");
}

std::uint64_t tops_code(const Profile& p) {
  const auto m = static_cast<std::uint64_t>(p.alternatives());
  std::uint64_t code = 0;
  for (const auto& pref : p.preferences()) code = code * m + pref.top().index();
  return code;
}

Alternative borda_winner(const Profile& p) {
  const int m = p.alternatives();
  std::vector<int> score(m, 0);
  for (const auto& pref : p.preferences())
    for (int r = 0; r < m; ++r) score[pref.at_rank(r).index()] += m - 1 - r;
  int best = 0;
  for (int x = 1; x < m; ++x)
    if (score[x] > score[best]) best = x;
  return Alternative(best);
}

template <typename Tops>
Alternative majority_winner(const Tops& tops) {
  int for_one = 0;
  int for_zero = 0;
  for (Alternative t : tops) (t.index() == 1 ? for_one : for_zero)++;
  return Alternative(for_one > for_zero ? 1 : 0);
}

}  // namespace

Rule Rule::tops_table(Dimensions dims, std::vector<std::uint8_t> outcomes) {
  check_dims(dims);
  const auto cells = checked_pow(dims.alternatives, dims.agents);
  if (!cells || outcomes.size() != *cells)
    throw DimensionMismatch("tops table for " + gsv::to_string(dims) + " needs " +
                            (cells ? std::to_string(*cells) : std::string("too many")) +
                            " entries, got " + std::to_string(outcomes.size()));
  check_outcomes(outcomes, dims.alternatives);
  return Rule(dims, TopsTable{std::move(outcomes)});
}

Rule Rule::full_table(Dimensions dims, std::vector<std::uint8_t> outcomes,
                      const Limits& limits) {
  check_dims(dims);
  const ProfileSpace space(dims, limits);
  if (outcomes.size() != space.size())
    throw DimensionMismatch("full table for " + gsv::to_string(dims) + " needs " +
                            std::to_string(space.size()) + " entries, got " +
                            std::to_string(outcomes.size()));
  check_outcomes(outcomes, dims.alternatives);
  return Rule(dims, FullTable{std::move(outcomes)});
}

Rule Rule::dictator(Dimensions dims, int agent) {
  check_dims(dims);
  if (agent < 0 || agent >= dims.agents)
    throw std::out_of_range("dictator index " + std::to_string(agent) + " out of range");
  return Rule(dims, Dictator{agent});
}

Rule Rule::constant(Dimensions dims, Alternative value) {
  check_dims(dims);
  if (value.index() < 0 || value.index() >= dims.alternatives)
    throw std::out_of_range("constant alternative out of range");
  return Rule(dims, Constant{value});
}

Rule Rule::borda_lex(Dimensions dims) {
  check_dims(dims);
  return Rule(dims, BordaLex{});
}

Rule Rule::majority_lex(Dimensions dims) {
  check_dims(dims);
  if (dims.alternatives != 2)
    throw std::invalid_argument("MAJLEX is defined for exactly 2 alternatives");
  return Rule(dims, MajorityLex{});
}

Alternative Rule::evaluate(const Profile& profile) const {
  if (profile.dimensions() != dims_)
    throw DimensionMismatch("profile " + gsv::to_string(profile.dimensions()) +
                            " does not match rule " + gsv::to_string(dims_));
  return std::visit(
      overloaded{
          [&](const TopsTable& t) { return Alternative(t.outcomes[tops_code(profile)]); },
          [&](const FullTable& t) { return Alternative(t.outcomes[profile.code()]); },
          [&](const Dictator& d) { return profile[d.agent].top(); },
          [&](const Constant& c) { return c.value; },
          [&](const BordaLex&) { return borda_winner(profile); },
          [&](const MajorityLex&) {
            std::vector<Alternative> tops;
            for (const auto& p : profile.preferences()) tops.push_back(p.top());
            return majority_winner(tops);
          },
      },
      repr_);
}

bool Rule::tops_only_by_construction() const noexcept {
  return !std::holds_alternative<FullTable>(repr_) && !std::holds_alternative<BordaLex>(repr_);
}

Alternative Rule::evaluate_tops(const TopsProfile& tops) const {
  if (tops.agents() != dims_.agents || tops.alternatives() != dims_.alternatives)
    throw DimensionMismatch("tops profile does not match rule " + gsv::to_string(dims_));
  return std::visit(
      overloaded{
          [&](const TopsTable& t) { return Alternative(t.outcomes[tops.code()]); },
          [&](const Dictator& d) { return tops[d.agent]; },
          [&](const Constant& c) { return c.value; },
          [&](const MajorityLex&) { return majority_winner(tops.tops()); },
          [&](const auto&) -> Alternative {
            throw NotTopsOnly("rule " + to_string() + " is not tops-only by construction");
          },
      },
      repr_);
}

std::string Rule::to_string() const {
  const auto digits = [](const std::vector<std::uint8_t>& outcomes) {
    std::string s;
    s.reserve(outcomes.size());
    for (auto o : outcomes) s += static_cast<char>('0' + o);
    return s;
  };
  const std::string header = "n=" + std::to_string(dims_.agents) +
                             ",m=" + std::to_string(dims_.alternatives) + ":";
  return std::visit(
      overloaded{
          [&](const TopsTable& t) { return "TOPS:" + header + digits(t.outcomes); },
          [&](const FullTable& t) { return "FULL:" + header + digits(t.outcomes); },
          [&](const Dictator& d) { return "DICT:" + std::to_string(d.agent); },
          [&](const Constant& c) { return "CONST:" + c.value.name(); },
          [&](const BordaLex&) { return std::string("BORDALEX"); },
          [&](const MajorityLex&) { return std::string("MAJLEX"); },
      },
      repr_);
}

namespace {

class RuleParser {
 public:
  explicit RuleParser(std::string_view text) : text_(text) {}

  bool consume(std::string_view literal) {
    if (text_.substr(pos_, literal.size()) != literal) return false;
    pos_ += literal.size();
    return true;
  }

  void expect(std::string_view literal) {
    if (!consume(literal)) fail("expected '" + std::string(literal) + "'");
  }

  int integer() {
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    if (first == last || *first < '0' || *first > '9') fail("expected a non-negative integer");
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc()) fail("integer out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  std::vector<std::uint8_t> digits(int m) {
    std::vector<std::uint8_t> out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c < '0' || c >= '0' + m)
        fail(std::string("invalid base-") + std::to_string(m) + " digit '" + c + "'");
      out.push_back(static_cast<std::uint8_t>(c - '0'));
      ++pos_;
    }
    return out;
  }

  void end() {
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::size_t position() const { return pos_; }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw ParseError(message, at);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rule Rule::parse(std::string_view text, std::optional<Dimensions> context,
                 const Limits& limits) {
  RuleParser in(text);
  const auto need_context = [&](std::string_view kind) -> Dimensions {
    if (!context)
      throw ParseError(std::string(kind) + " needs agent and alternative counts from context", 0);
    return *context;
  };
  const bool tops = in.consume("TOPS:");
  if (tops || in.consume("FULL:")) {
    const std::size_t header_at = in.position();
    in.expect("n=");
    Dimensions dims;
    dims.agents = in.integer();
    in.expect(",m=");
    dims.alternatives = in.integer();
    in.expect(":");
    if (dims.agents < 2) in.fail_at("need at least 2 agents", header_at);
    if (dims.alternatives < 2 || dims.alternatives > kMaxAlternativesHard)
      in.fail_at("unsupported alternative count", header_at);
    if (context && *context != dims)
      in.fail_at("rule dimensions " + gsv::to_string(dims) + " disagree with " +
                     gsv::to_string(*context),
                 header_at);
    const std::size_t digits_at = in.position();
    auto outcomes = in.digits(dims.alternatives);
    std::optional<std::uint64_t> expected;
    if (tops) {
      expected = checked_pow(dims.alternatives, dims.agents);
    } else {
      expected = checked_pow(factorial(dims.alternatives), dims.agents);
      if (!expected || *expected > limits.profile_budget)
        in.fail_at("full table exceeds the profile budget", header_at);
    }
    if (!expected || outcomes.size() != *expected)
      in.fail_at("expected " + (expected ? std::to_string(*expected) : std::string("?")) +
                     " outcome digits, got " + std::to_string(outcomes.size()),
                 digits_at + std::min<std::size_t>(outcomes.size(), expected.value_or(0)));
    return tops ? tops_table(dims, std::move(outcomes))
                : full_table(dims, std::move(outcomes), limits);
  }
  if (in.consume("DICT:")) {
    const Dimensions dims = need_context("DICT");
    const std::size_t at = in.position();
    const int agent = in.integer();
    in.end();
    if (agent >= dims.agents) in.fail_at("dictator index out of range", at);
    return dictator(dims, agent);
  }
  if (in.consume("CONST:")) {
    const Dimensions dims = need_context("CONST");
    const std::size_t at = in.position();
    if (at >= text.size()) in.fail("expected an alternative name");
    const char c = text[at];
    if (c < 'a' || c >= 'a' + dims.alternatives) in.fail("unknown alternative");
    in.consume(std::string_view(&text[at], 1));
    in.end();
    return constant(dims, Alternative(c - 'a'));
  }
  if (in.consume("BORDALEX")) {
    in.end();
    return borda_lex(need_context("BORDALEX"));
  }
  if (in.consume("MAJLEX")) {
    in.end();
    const Dimensions dims = need_context("MAJLEX");
    if (dims.alternatives != 2) in.fail_at("MAJLEX needs exactly 2 alternatives", 0);
    return majority_lex(dims);
  }
  in.fail("unknown rule kind; expected TOPS, FULL, DICT, CONST, BORDALEX or MAJLEX");
}

TopsTable tops_table_of(const Rule& f, const Limits& limits) {
  const Dimensions dims = f.dimensions();
  const auto cells = checked_pow(dims.alternatives, dims.agents);
  if (!cells || *cells > limits.profile_budget)
    throw CapExceeded("tops space too large for " + to_string(dims));
  TopsTable table;
  table.outcomes.resize(*cells);
  if (f.tops_only_by_construction()) {
    for (std::uint64_t code = 0; code < *cells; ++code)
      table.outcomes[code] = static_cast<std::uint8_t>(
          f.evaluate_tops(TopsProfile::decode(code, dims)).index());
    return table;
  }
  const ProfileSpace space(dims, limits);
  for (std::uint64_t code = 0; code < *cells; ++code) {
    const auto tops = TopsProfile::decode(code, dims);
    std::vector<Preference> prefs;
    for (Alternative t : tops.tops()) prefs.push_back(space.with_top(t).front());
    table.outcomes[code] = static_cast<std::uint8_t>(f.evaluate(Profile(std::move(prefs))).index());
  }
  return table;
}

Rule to_full_table(const Rule& f, const Limits& limits) {
  const ProfileSpace space(f.dimensions(), limits);
  std::vector<std::uint8_t> outcomes(space.size());
  for (std::uint64_t code = 0; code < space.size(); ++code)
    outcomes[code] = static_cast<std::uint8_t>(f.evaluate(space.at(code)).index());
  return Rule::full_table(f.dimensions(), std::move(outcomes), limits);
}

bool same_function(const Rule& f, const Rule& g, const Limits& limits) {
  if (f.dimensions() != g.dimensions()) return false;
  const ProfileSpace space(f.dimensions(), limits);
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    const Profile p = space.at(code);
    if (f.evaluate(p) != g.evaluate(p)) return false;
  }
  return true;
}

}  // namespace gsv

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gsv/profile.hpp"

namespace gsv {

/// One outcome per tops profile, indexed by TopsProfile::code().
struct TopsTable {
  std::vector<std::uint8_t> outcomes;
  friend bool operator==(const TopsTable&, const TopsTable&) = default;
};

/// One outcome per profile, indexed by Profile::code().
struct FullTable {
  std::vector<std::uint8_t> outcomes;
  friend bool operator==(const FullTable&, const FullTable&) = default;
};

struct Dictator {
  int agent = 0;
  friend bool operator==(const Dictator&, const Dictator&) = default;
};

struct Constant {
  Alternative value;
  friend bool operator==(const Constant&, const Constant&) = default;
};

/// Borda count; ties go to the lowest alternative index.
struct BordaLex {
  friend bool operator==(const BordaLex&, const BordaLex&) = default;
};

/// Two-alternative majority over tops; ties go to alternative 0.
struct MajorityLex {
  friend bool operator==(const MajorityLex&, const MajorityLex&) = default;
};

/// A social choice rule on fixed dimensions. Immutable.
///
/// Canonical strings:
///   TOPS:n=<n>,m=<m>:<digits>   base-m outcome per tops profile code
///   FULL:n=<n>,m=<m>:<digits>   base-m outcome per profile code
///   DICT:<i>  CONST:<x>  BORDALEX  MAJLEX
/// Closed forms carry no dimensions; parsing them needs a context.
class Rule {
 public:
  using Representation =
      std::variant<TopsTable, FullTable, Dictator, Constant, BordaLex, MajorityLex>;

  static Rule tops_table(Dimensions dims, std::vector<std::uint8_t> outcomes);
  static Rule full_table(Dimensions dims, std::vector<std::uint8_t> outcomes,
                         const Limits& limits = default_limits());
  static Rule dictator(Dimensions dims, int agent);
  static Rule constant(Dimensions dims, Alternative value);
  static Rule borda_lex(Dimensions dims);
  static Rule majority_lex(Dimensions dims);

  Dimensions dimensions() const noexcept { return dims_; }
  int agents() const noexcept { return dims_.agents; }
  int alternatives() const noexcept { return dims_.alternatives; }
  const Representation& representation() const noexcept { return repr_; }

  /// Throws DimensionMismatch when the profile has other dimensions.
  Alternative evaluate(const Profile& profile) const;

  /// True for representations whose outcome is a function of the tops
  /// profile alone (TopsTable, Dictator, Constant, MajorityLex).
  bool tops_only_by_construction() const noexcept;
  /// Outcome at a tops profile. Requires tops_only_by_construction().
  Alternative evaluate_tops(const TopsProfile& tops) const;

  std::string to_string() const;
  /// Throws ParseError. `context` supplies dimensions for closed forms and,
  /// when given, must agree with the dimensions embedded in table strings.
  static Rule parse(std::string_view text,
                    std::optional<Dimensions> context = std::nullopt,
                    const Limits& limits = default_limits());

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  Rule(Dimensions dims, Representation repr) : dims_(dims), repr_(std::move(repr)) {}

  Dimensions dims_;
  Representation repr_;
};

inline Alternative evaluate(const Rule& f, const Profile& p) { return f.evaluate(p); }

/// Tops table for a rule whose outcome is known to depend on tops alone:
/// tops-only-by-construction rules convert directly, anything else is read
/// off one representative profile per tops cell without further checks.
TopsTable tops_table_of(const Rule& f, const Limits& limits = default_limits());

/// Materialise any rule as a FullTable rule on the same dimensions.
Rule to_full_table(const Rule& f, const Limits& limits = default_limits());

/// Two rules agree on every profile.
bool same_function(const Rule& f, const Rule& g, const Limits& limits = default_limits());

}  // namespace gsv

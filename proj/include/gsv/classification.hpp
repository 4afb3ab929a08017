#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "gsv/axioms.hpp"
#include "gsv/profile_set.hpp"

namespace gsv {

enum class Verdict { Dictatorial, Manipulable };
std::string to_string(Verdict v);

/// A unilateral deviation that moves the outcome away from f(P) for an agent
/// whose top was not chosen.
struct Deviation {
  int agent = 0;
  Preference misreport;
  Alternative outcome;  // f(misreport, P_-agent)
};

struct DictatorialCheck {
  bool holds = true;
  std::optional<Deviation> violator;
};

/// P is dictatorial for f when no agent missing out on its top can change the
/// outcome alone. Defined for every rule.
DictatorialCheck check_dictatorial_profile(const Rule& f, const Profile& p,
                                           const Limits& limits = default_limits());
inline bool is_dictatorial_profile(const Rule& f, const Profile& p) {
  return check_dictatorial_profile(f, p).holds;
}

/// P is manipulable for a tops-only f when some agent, after switching to a
/// preference with the same top, manipulates at the switched profile. The
/// witness is stated at that switched profile. Throws NotTopsOnly unless f is
/// tops-only (by construction, or verified by an exhaustive scan).
std::optional<ManipulationWitness> find_profile_manipulation(
    const Rule& f, const Profile& p, const Limits& limits = default_limits());
inline bool is_manipulable_profile(const Rule& f, const Profile& p) {
  return find_profile_manipulation(f, p).has_value();
}

struct ProfileClassification {
  Profile profile;
  Verdict verdict;
  std::optional<ManipulationWitness> witness;  // iff Manipulable
  std::optional<Deviation> violator;           // iff Manipulable
};

/// Throws std::logic_error if the profile is both or neither (never expected
/// for tops-only rules).
ProfileClassification classify_profile(const Rule& f, const Profile& p,
                                       const Limits& limits = default_limits());

enum class ClassifyPath {
  // Verdicts computed once per tops cell and shared by the whole cell.
  TopsCells,
  // Both definitions evaluated at every profile.
  Definitional,
};

struct ClassifyOptions {
  ClassifyPath path = ClassifyPath::TopsCells;
  bool materialize_sets = false;
  int workers = 1;
};

struct ClassificationSummary {
  std::string rule;
  Dimensions dims;
  bool unanimous = false;
  std::uint64_t manipulable_count = 0;
  std::uint64_t dictatorial_count = 0;
  std::uint64_t total = 0;
  std::optional<ProfileSet> manipulable;
  std::optional<ProfileSet> dictatorial;
  // Lowest-code profile of each kind, with the manipulation found there.
  std::optional<ManipulationWitness> example_manipulation;
  std::optional<Profile> example_dictatorial;
};

/// M_f and D_f for a tops-only rule. Throws NotTopsOnly otherwise.
ClassificationSummary classify_all(const Rule& f, const ClassifyOptions& options = {},
                                   const Limits& limits = default_limits());

/// |D_f| for any rule, by the per-profile definition.
std::uint64_t count_dictatorial_profiles(const Rule& f, int workers = 1,
                                         const Limits& limits = default_limits());

bool at_least_as_manipulable(const ClassificationSummary& f, const ClassificationSummary& g);
bool at_least_as_dictatorial(const ClassificationSummary& f, const ClassificationSummary& g);
/// f >=_d g exactly when g >=_m f.
bool check_duality(const ClassificationSummary& f, const ClassificationSummary& g);

// Rule overloads. The first and third need tops-only rules; all three throw
// DimensionMismatch on differing dimensions.
bool at_least_as_manipulable(const Rule& f, const Rule& g);
bool at_least_as_dictatorial(const Rule& f, const Rule& g);
bool check_duality(const Rule& f, const Rule& g);

struct RemarkCheck {
  bool holds = false;
  // The two sides of the biconditional being checked.
  bool property = false;
  bool extremal = false;
  std::uint64_t count = 0;  // |M_f| or |D_f|
};

/// f is strategy-proof iff every rule in the pool is at least as manipulable.
RemarkCheck remark_strategyproof_minimal(const Rule& f,
                                         std::span<const ClassificationSummary> pool,
                                         const Limits& limits = default_limits());
RemarkCheck remark_strategyproof_minimal(const Rule& f, std::span<const Rule> pool,
                                         const Limits& limits = default_limits());

/// For f tops-only and efficient: f is dictatorial iff f is at least as
/// dictatorial as every pool rule. Throws PreconditionFailed outside that
/// class.
RemarkCheck remark_dictatorial_maximal(const Rule& f,
                                       std::span<const ClassificationSummary> pool,
                                       const Limits& limits = default_limits());
RemarkCheck remark_dictatorial_maximal(const Rule& f, std::span<const Rule> pool,
                                       const Limits& limits = default_limits());

}  // namespace gsv

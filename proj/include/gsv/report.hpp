#pragma once

#include <string>

#include "json.hpp"

#include "gsv/census.hpp"
#include "gsv/classification.hpp"
#include "gsv/lemmas.hpp"

namespace gsv {

using Json = nlohmann::ordered_json;

/// Bumped whenever a report field changes meaning or disappears.
inline constexpr int kReportSchemaVersion = 1;

Json to_json(const ManipulationWitness& w);
Json to_json(const Deviation& d);
Json to_json(const RunConfig& config);
Json to_json(const ClassificationSummary& summary, bool include_sets);
Json to_json(const CensusReport& report, bool include_timing);
Json to_json(const VerificationReport& report);
Json to_json(const CounterexampleCertificate& cert);

/// Header plus one row per listed rule: rule, unanimous, efficient,
/// strategy_proof, dictatorial, m_count, d_count.
std::string census_csv(const CensusReport& report);

}  // namespace gsv

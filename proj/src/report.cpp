#include "gsv/report.hpp"

#include <sstream>

namespace gsv {
namespace {

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

Json to_json(const ManipulationWitness& w) {
  return Json{{"profile", w.profile.to_string()},
              {"agent", w.agent},
              {"misreport", w.misreport.to_string()},
              {"sincere_outcome", w.sincere_outcome.name()},
              {"improved_outcome", w.improved_outcome.name()}};
}

Json to_json(const Deviation& d) {
  return Json{{"agent", d.agent}, {"misreport", d.misreport.to_string()}, {"outcome", d.outcome.name()}};
}

Json to_json(const RunConfig& config) {
  Json filters = Json::array();
  for (auto f : config.filters) filters.push_back(to_string(f));
  Json j{{"agents", config.dims.agents},
         {"alternatives", config.dims.alternatives},
         {"mode", to_string(config.mode)},
         {"workers", config.workers},
         {"filters", filters}};
  if (config.mode == Mode::Sampled) {
    j["seed"] = config.seed;
    j["samples"] = config.samples;
    j["sample_space"] = to_string(config.sample_space);
  }
  return j;
}

Json to_json(const ClassificationSummary& summary, bool include_sets) {
  Json j{{"rule", summary.rule},
         {"agents", summary.dims.agents},
         {"alternatives", summary.dims.alternatives},
         {"unanimous", summary.unanimous},
         {"total", summary.total},
         {"m_count", summary.manipulable_count},
         {"d_count", summary.dictatorial_count},
         {"example_manipulable",
          summary.example_manipulation ? to_json(*summary.example_manipulation) : Json(nullptr)},
         {"example_dictatorial",
          summary.example_dictatorial ? Json(summary.example_dictatorial->to_string()) : Json(nullptr)}};
  if (!summary.unanimous)
    j["warning"] = "rule is not unanimous; classification is reported anyway";
  if (include_sets && summary.manipulable && summary.dictatorial) {
    j["m_set_hex"] = summary.manipulable->to_hex();
    j["d_set_hex"] = summary.dictatorial->to_hex();
  }
  return j;
}

Json to_json(const CensusReport& report, bool include_timing) {
  Json j{{"schema_version", kReportSchemaVersion},
         {"report", "census"},
         {"config", to_json(report.config)},
         {"scope", "tops-only rules (TopsTable space); full-table rules are not enumerated"},
         {"total", report.total},
         {"unanimous", report.unanimous},
         {"efficient", report.efficient},
         {"strategy_proof", report.strategy_proof},
         {"dictatorial", report.dictatorial},
         {"listed", report.listed},
         {"strategy_proof_equals_dictatorial", report.strategy_proof_equals_dictatorial},
         {"strategy_proof_non_dictatorial", report.strategy_proof_non_dictatorial},
         {"first_strategy_proof_non_dictatorial",
          optional_string(report.first_strategy_proof_non_dictatorial)},
         {"strategy_proof_rules", report.strategy_proof_rules},
         {"dictatorial_rules", report.dictatorial_rules}};
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

Json to_json(const VerificationReport& report) {
  Json j{{"schema_version", kReportSchemaVersion},
         {"report", "lemma"},
         {"id", to_string(report.id)},
         {"statement", describe(report.id)},
         {"config", to_json(report.scope)},
         {"families", report.families},
         {"status", report.passed ? "pass" : "fail"},
         {"checked", report.checked},
         {"tallies", report.tallies}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    Json cx{{"rule", c.rule}};
    if (c.other_rule) cx["other_rule"] = *c.other_rule;
    if (c.profile) cx["profile"] = *c.profile;
    cx["detail"] = c.detail;
    j["counterexample"] = cx;
  } else {
    j["counterexample"] = nullptr;
  }
  j["notes"] = report.notes;
  return j;
}

Json to_json(const CounterexampleCertificate& cert) {
  return Json{{"schema_version", kReportSchemaVersion},
              {"report", "counterexample"},
              {"rule", cert.rule.to_string()},
              {"agents", cert.rule.agents()},
              {"alternatives", cert.rule.alternatives()},
              {"unanimous", cert.unanimous},
              {"strategy_proof", cert.strategy_proof},
              {"tops_only", cert.tops_only},
              {"efficient", cert.efficient},
              {"dictator", cert.dictator ? Json(*cert.dictator) : Json(nullptr)},
              {"certified", cert.passes()}};
}

std::string census_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "rule,unanimous,efficient,strategy_proof,dictatorial,m_count,d_count\n";
  for (const auto& row : report.rows)
    out << '"' << row.rule << "\"," << row.unanimous << ',' << row.efficient << ',' << row.strategy_proof
        << ',' << row.dictatorial << ',' << row.manipulable_count << ',' << row.dictatorial_count
        << '\n';
  return out.str();
}

}  // namespace gsv

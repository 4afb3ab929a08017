#include "gsv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gsv/axioms.hpp"
#include "gsv/errors.hpp"
#include "gsv/report.hpp"

namespace gsv {
namespace {

struct Options {
  int agents = 2;
  int alts = 3;
  std::string rule;
  std::vector<std::string> filters;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  int workers = 0;
  std::string format = "json";
  std::string out_path;
  std::string space = "all";
  std::string path = "tops";
  std::string suite;
  std::vector<std::string> lemma_ids;
  bool sets = false;
  bool timing = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

RunConfig make_config(const Options& o) {
  RunConfig config;
  config.dims = {o.agents, o.alts};
  config.mode = o.mode == "sampled" ? Mode::Sampled : Mode::Exhaustive;
  config.seed = o.seed;
  config.samples = o.samples;
  config.workers = o.workers;
  for (const auto& name : o.filters) {
    const auto f = parse_rule_filter(name);
    if (!f) throw UsageError("unknown filter '" + name + "'");
    config.filters.push_back(*f);
  }
  config.sample_space = o.space == "unanimous"   ? SampleSpace::Unanimous
                        : o.space == "efficient" ? SampleSpace::Efficient
                                                 : SampleSpace::All;
  return config;
}

Rule require_rule(const Options& o) {
  if (o.rule.empty()) throw UsageError("--rule is required");
  return Rule::parse(o.rule, Dimensions{o.agents, o.alts});
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int classify(const Options& o, std::ostream& out) {
  const Rule f = require_rule(o);
  if (o.format == "csv") throw UsageError("classify supports json and text output");
  const bool tops_only = f.tops_only_by_construction() || check_tops_only(f).holds;
  if (!tops_only) {
    // D_f is defined for every rule; M_f only for tops-only ones.
    const auto d_count = count_dictatorial_profiles(f, o.workers);
    const auto total = ProfileSpace(f.dimensions()).size();
    if (o.format == "text") {
      out << f.to_string() << ": not tops-only, m_count undefined, d_count=" << d_count << "/"
          << total << "\n";
      return kExitOk;
    }
    Json j{{"schema_version", kReportSchemaVersion},
           {"report", "classification"},
           {"rule", f.to_string()},
           {"agents", o.agents},
           {"alternatives", o.alts},
           {"tops_only", false},
           {"total", total},
           {"m_count", nullptr},
           {"d_count", d_count},
           {"warning", "manipulable profiles are only defined for tops-only rules"}};
    out << dump(j);
    return kExitOk;
  }
  ClassifyOptions options;
  options.path = o.path == "definitional" ? ClassifyPath::Definitional : ClassifyPath::TopsCells;
  options.materialize_sets = o.sets;
  options.workers = o.workers;
  const auto summary = classify_all(f, options);
  if (o.format == "text") {
    out << summary.rule << ": m_count=" << summary.manipulable_count
        << " d_count=" << summary.dictatorial_count << " total=" << summary.total
        << (summary.unanimous ? "" : " (not unanimous)") << "\n";
    return kExitOk;
  }
  Json j{{"schema_version", kReportSchemaVersion}, {"report", "classification"}, {"tops_only", true}};
  j.update(to_json(summary, o.sets));
  out << dump(j);
  return kExitOk;
}

int run_census(const Options& o, std::ostream& out) {
  const RunConfig config = make_config(o);
  const bool csv = o.format == "csv";
  const auto report = census(config, csv);
  if (csv) {
    out << census_csv(report);
  } else if (o.format == "text") {
    out << "census " << to_string(config.dims) << " (" << to_string(config.mode) << ")\n"
        << "  tops-only rules:      " << report.total << "\n"
        << "  unanimous:            " << report.unanimous << "\n"
        << "  unanimous efficient:  " << report.efficient << "\n"
        << "  strategy-proof in TE: " << report.strategy_proof << "\n"
        << "  dictatorial:          " << report.dictatorial << "\n"
        << "  strategy-proof == dictatorial: "
        << (report.strategy_proof_equals_dictatorial ? "yes" : "no") << "\n";
    if (o.timing) out << "  elapsed: " << report.elapsed_seconds << " s\n";
  } else {
    out << dump(to_json(report, o.timing));
  }
  return kExitOk;
}

int run_lemmas(const Options& o, std::ostream& out) {
  const RunConfig config = make_config(o);
  std::vector<LemmaId> ids;
  if (!o.suite.empty() && o.suite != "all") throw UsageError("unknown suite '" + o.suite + "'");
  for (const auto& text : o.lemma_ids) {
    const auto id = parse_lemma_id(text);
    if (!id) throw UsageError("unknown lemma id '" + text + "'");
    ids.push_back(*id);
  }
  if (o.suite == "all") ids = all_lemmas();
  if (ids.empty()) throw UsageError("name at least one lemma id or pass --suite all");
  if (o.format == "csv") throw UsageError("lemmas supports json and text output");

  bool all_passed = true;
  for (LemmaId id : ids) {
    const auto report = verify_lemma(id, config);
    all_passed = all_passed && report.passed;
    if (o.format == "text") {
      out << to_string(id) << ' ' << (report.passed ? "pass" : "fail") << "  " << describe(id)
          << " [" << report.checked << " checked]\n";
      if (report.counterexample) {
        const auto& c = *report.counterexample;
        out << "    counterexample: " << c.rule;
        if (c.other_rule) out << " vs " << *c.other_rule;
        if (c.profile) out << " at " << *c.profile;
        out << " (" << c.detail << ")\n";
      }
    } else {
      out << to_json(report).dump() << "\n";
    }
  }
  return all_passed ? kExitOk : kExitVerificationFailed;
}

Json predicate_json(const Rule& f) {
  Json j{{"schema_version", kReportSchemaVersion},
         {"report", "inspect"},
         {"rule", f.to_string()},
         {"agents", f.agents()},
         {"alternatives", f.alternatives()}};
  const auto unanimity = check_unanimity(f);
  j["unanimous"] = unanimity.holds;
  if (unanimity.counterexample) j["unanimity_counterexample"] = unanimity.counterexample->to_string();
  const auto tops = check_tops_only(f);
  j["tops_only"] = tops.holds;
  if (tops.counterexample)
    j["tops_only_counterexample"] = {tops.counterexample->first.to_string(),
                                     tops.counterexample->second.to_string()};
  const auto efficiency = check_efficiency(f);
  j["efficient"] = efficiency.holds;
  if (efficiency.counterexample)
    j["efficiency_counterexample"] = {{"profile", efficiency.counterexample->profile.to_string()},
                                      {"dominating", efficiency.counterexample->dominating.name()}};
  const auto manipulation = find_manipulation(f);
  j["strategy_proof"] = !manipulation;
  j["manipulation"] = manipulation ? to_json(*manipulation) : Json(nullptr);
  const auto dictator = find_dictator(f);
  j["dictator"] = dictator ? Json(*dictator) : Json(nullptr);
  return j;
}

int inspect(const Options& o, std::ostream& out) {
  const Rule f = require_rule(o);
  const Json j = predicate_json(f);
  if (o.format == "text") {
    for (const auto& [key, value] : j.items())
      if (key != "schema_version" && key != "report") out << key << ": " << value.dump() << "\n";
  } else {
    out << dump(j);
  }
  return kExitOk;
}

int counterexample(const Options& o, std::ostream& out) {
  const auto cert = gs_counterexample_two_alternatives(o.agents);
  if (o.format == "text") {
    out << cert.rule.to_string() << " on n=" << o.agents << ", m=2: "
        << (cert.passes() ? "certified" : "NOT certified") << " (unanimous=" << cert.unanimous
        << " strategy_proof=" << cert.strategy_proof << " tops_only=" << cert.tops_only
        << " efficient=" << cert.efficient << " dictatorial=" << cert.dictator.has_value() << ")\n";
  } else {
    out << dump(to_json(cert));
  }
  return cert.passes() ? kExitOk : kExitVerificationFailed;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--agents", o.agents, "number of agents")->capture_default_str();
  cmd->add_option("--alts", o.alts, "number of alternatives")->capture_default_str();
  cmd->add_option("--workers", o.workers, "worker threads (0: machine parallelism)")
      ->capture_default_str();
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out_path, "write the report to this file");
}

void add_scope(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "rule-space coverage")
      ->check(CLI::IsMember({"exhaustive", "sampled"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--samples", o.samples, "sample size")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive checker for strategy-proofness, dictatorship and the "
               "manipulable/dictatorial profile duality of finite social choice rules"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "count manipulable and dictatorial profiles");
  add_common(classify_cmd, o);
  classify_cmd->add_option("--rule", o.rule, "rule string")->required();
  classify_cmd->add_flag("--sets", o.sets, "include hex-encoded profile sets");
  classify_cmd->add_option("--path", o.path, "classification route")
      ->check(CLI::IsMember({"tops", "definitional"}))
      ->capture_default_str();

  auto* census_cmd = app.add_subcommand("census", "count rules through the axiom cascade");
  add_common(census_cmd, o);
  add_scope(census_cmd, o);
  census_cmd->add_option("--filter", o.filters, "list only rules passing this filter (repeatable)");
  census_cmd->add_option("--space", o.space, "sampling space")
      ->check(CLI::IsMember({"all", "unanimous", "efficient"}))
      ->capture_default_str();
  census_cmd->add_flag("--timing", o.timing, "include elapsed time (breaks byte determinism)");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "run verification suites");
  add_common(lemmas_cmd, o);
  add_scope(lemmas_cmd, o);
  lemmas_cmd->add_option("ids", o.lemma_ids, "L1 L3 L4 L5 C1 C2 R1 R2 THM");
  lemmas_cmd->add_option("--suite", o.suite, "'all' runs every suite");

  auto* inspect_cmd = app.add_subcommand("inspect", "evaluate every axiom on one rule");
  add_common(inspect_cmd, o);
  inspect_cmd->add_option("--rule", o.rule, "rule string")->required();

  auto* cx_cmd = app.add_subcommand("counterexample", "certify MAJLEX on two alternatives");
  add_common(cx_cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (classify_cmd->parsed()) code = classify(o, buffer);
    else if (census_cmd->parsed()) code = run_census(o, buffer);
    else if (lemmas_cmd->parsed()) code = run_lemmas(o, buffer);
    else if (inspect_cmd->parsed()) code = inspect(o, buffer);
    else code = counterexample(o, buffer);
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out_path << "\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace gsv

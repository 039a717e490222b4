#pragma once

// Command-line front end. Exit codes: 0 success, 1 input with errors
// (ontology, profile or snapshot diagnostics), 2 usage error, 3 `gate` when
// the phase does not advance.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "oceval/advisor.hpp"
#include "oceval/octree.hpp"
#include "oceval/parser.hpp"
#include "oceval/profile_io.hpp"
#include "oceval/replay.hpp"
#include "oceval/report.hpp"

namespace oceval::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoAdvance = 3;

inline constexpr const char* kProfileEnv = "OCEVAL_PROFILE";

struct RunConfig {
  std::string ontologyPath;
  std::string profilePath;
  std::string phase;  // empty: placed automatically
  double threshold = kDefaultThreshold;
  std::string format = "text";
  bool sequential = false;
};

namespace detail {

struct InputError {
  std::string message;
};

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || std::filesystem::is_directory(path)) throw InputError{path + ": cannot read file"};
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ProfileSet profiles(const RunConfig& cfg, const ConditionTree& tree) {
  if (cfg.profilePath.empty()) return builtinProfiles();
  std::string text = readFile(cfg.profilePath);
  try {
    return parseProfiles(text, tree);
  } catch (const ProfileParseError& e) {
    throw InputError{cfg.profilePath + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                     ": error: " + e.message()};
  }
}

inline Ontology ontology(const RunConfig& cfg, std::ostream& err) {
  auto parsed = parseOntology(readFile(cfg.ontologyPath));
  for (const auto& d : parsed.diagnostics) err << formatDiagnostic(d, cfg.ontologyPath) << '\n';
  if (!parsed.ok()) throw InputError{cfg.ontologyPath + ": " + std::to_string(parsed.errorCount()) + " error(s)"};
  return std::move(*parsed.ontology);
}

struct Context {
  ConditionTree tree = defaultTree();
  ProfileSet profiles;
  Ontology ontology;
  Phase phase = Phase::BusinessVocabulary;
  EvaluationResult eval;
};

inline Context prepare(const RunConfig& cfg, std::ostream& err) {
  Context c;
  c.profiles = profiles(cfg, c.tree);
  c.ontology = ontology(cfg, err);
  c.phase = cfg.phase.empty() ? placePhase(c.ontology, c.tree, c.profiles, cfg.threshold) : *parsePhase(cfg.phase);
  c.eval = evaluate(c.tree, c.profiles.at(c.phase), c.ontology, {!cfg.sequential});
  return c;
}

inline std::string actionsCsv(const std::vector<ImprovementAction>& actions) {
  std::string out = "rank,check_id,gain,description,findings\n";
  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& a = actions[i];
    out += std::to_string(i + 1) + ',' + a.checkId + ',' + report::fixed(a.gain, 1) + ',' +
           report::csvField(a.description) + ',' + std::to_string(a.findings.size()) + '\n';
  }
  return out;
}

inline nlohmann::ordered_json gateJson(const GateDecision& d) {
  nlohmann::ordered_json j;
  j["current_phase"] = std::string(phaseId(d.currentPhase));
  j["oc"] = report::rounded(d.oc);
  j["threshold"] = d.threshold;
  j["advance"] = d.advance;
  j["next_phase"] = d.nextPhase ? nlohmann::ordered_json(std::string(phaseId(*d.nextPhase)))
                                : nlohmann::ordered_json(nullptr);
  return j;
}

inline std::string gateText(const GateDecision& d) {
  std::string s = "OC " + report::percent(d.oc) + " at phase " + phaseLabel(d.currentPhase) + " (threshold " +
                  report::percent(d.threshold) + "): ";
  if (d.advance) return s + "advance to " + phaseLabel(*d.nextPhase) + "\n";
  if (!d.nextPhase) return s + "final phase reached\n";
  return s + "stay\n";
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ontology completeness evaluation", "oceval"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string replayFormat = "csv";

  auto thresholdCheck = CLI::Validator(
      [](std::string& s) -> std::string {
        double v = 0.0;
        try {
          v = std::stod(s);
        } catch (const std::exception&) {
          return "threshold is not a number";
        }
        return v > 0.0 && v <= 1.0 ? std::string() : std::string("threshold must be in (0, 1]");
      },
      "(0,1]");
  auto phaseCheck = CLI::Validator(
      [](std::string& s) -> std::string {
        return parsePhase(s) ? std::string() : "unknown phase '" + s + "'";
      },
      "PHASE");

  auto common = [&](CLI::App* sub, bool withPhase, bool withFormat) {
    sub->add_option("ontology", cfg.ontologyPath, "Turtle ontology file")->required();
    sub->add_option("--profile", cfg.profilePath, "Weight profile file")->envname(kProfileEnv);
    if (withPhase)
      sub->add_option("--phase", cfg.phase, "Development phase (2.1 .. 2.6, post); default: placed automatically")
          ->check(phaseCheck);
    sub->add_option("--threshold", cfg.threshold, "Gate threshold")->check(thresholdCheck);
    if (withFormat)
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "html", "csv"}));
    sub->add_flag("--sequential", cfg.sequential, "Run checks on one thread");
  };

  auto* evaluateCmd = app.add_subcommand("evaluate", "OC score, condition prices and element counts");
  common(evaluateCmd, true, true);
  auto* recommendCmd = app.add_subcommand("recommend", "Improvement actions sorted by projected gain");
  common(recommendCmd, true, true);
  auto* gateCmd = app.add_subcommand("gate", "Whether the OC allows moving to the next phase");
  common(gateCmd, true, false);
  gateCmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* placeCmd = app.add_subcommand("place", "Suggested phase for an existing ontology");
  common(placeCmd, false, false);
  placeCmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto* replayCmd = app.add_subcommand("replay", "OC trajectory over a directory of snapshots");
  replayCmd->add_option("snapshots", cfg.ontologyPath, "Directory of *.ttl snapshots, ordered by name")
      ->required();
  replayCmd->add_option("--profile", cfg.profilePath, "Weight profile file")->envname(kProfileEnv);
  replayCmd->add_option("--threshold", cfg.threshold, "Gate threshold")->check(thresholdCheck);
  replayCmd->add_option("--format", replayFormat, "Output format")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (replayCmd->parsed()) {
      ConditionTree tree = defaultTree();
      auto profiles = detail::profiles(cfg, tree);
      if (!std::filesystem::is_directory(cfg.ontologyPath))
        throw detail::InputError{cfg.ontologyPath + ": not a directory"};
      auto records = replay(loadSnapshots(cfg.ontologyPath), tree, profiles, cfg.threshold);
      if (replayFormat == "json") {
        auto j = nlohmann::ordered_json::array();
        for (const auto& r : records) {
          j.push_back({{"iteration", r.iteration},
                       {"phase", std::string(phaseId(r.phase))},
                       {"oc", report::rounded(r.oc)},
                       {"classes", r.counts.classes},
                       {"properties", r.counts.properties},
                       {"axioms", r.counts.axioms},
                       {"individuals", r.counts.individuals},
                       {"gate_fired", r.gateFired}});
        }
        out << j.dump(2) << '\n';
      } else {
        out << replayCsv(records);
      }
      return kExitOk;
    }

    if (placeCmd->parsed()) {
      ConditionTree tree = defaultTree();
      auto profiles = detail::profiles(cfg, tree);
      auto o = detail::ontology(cfg, err);
      auto placement = placePhaseDetailed(o, tree, profiles, cfg.threshold);
      if (cfg.format == "json") {
        nlohmann::ordered_json j;
        j["phase"] = std::string(phaseId(placement.phase));
        j["threshold"] = cfg.threshold;
        auto scanned = nlohmann::ordered_json::array();
        for (const auto& [p, oc] : placement.scanned)
          scanned.push_back({{"phase", std::string(phaseId(p))}, {"oc", report::rounded(oc)}});
        j["scanned"] = scanned;
        out << j.dump(2) << '\n';
      } else {
        for (const auto& [p, oc] : placement.scanned)
          out << "  " << phaseLabel(p) << ": " << report::percent(oc) << '\n';
        out << "Suggested phase: " << phaseLabel(placement.phase) << '\n';
      }
      return kExitOk;
    }

    auto ctx = detail::prepare(cfg, err);
    auto actions = recommendImprovements(ctx.eval);
    auto format = *parseReportFormat(cfg.format);

    if (gateCmd->parsed()) {
      auto decision = gatePhase(ctx.eval, ctx.phase, cfg.threshold);
      out << (cfg.format == "json" ? detail::gateJson(decision).dump(2) + "\n" : detail::gateText(decision));
      return decision.advance ? kExitOk : kExitNoAdvance;
    }
    if (recommendCmd->parsed()) {
      if (format == ReportFormat::Text) {
        out << renderText(ctx.eval, actions, false);
      } else if (format == ReportFormat::Csv) {
        out << detail::actionsCsv(actions);
      } else {
        out << render(format, ctx.eval, actions);
      }
      return kExitOk;
    }
    out << render(format, ctx.eval, actions);
    return kExitOk;
  } catch (const detail::InputError& e) {
    err << e.message << '\n';
  } catch (const ReplayError& e) {
    err << e.what() << '\n';
  } catch (const ProfileError& e) {
    err << (cfg.profilePath.empty() ? "" : cfg.profilePath + ": ") << "error: " << e.what() << '\n';
  }
  return kExitInput;
}

}  // namespace oceval::cli

#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oceval/advisor.hpp"
#include "oceval/octree.hpp"
#include "oceval/parser.hpp"

namespace oceval {

struct ReplayRecord {
  std::size_t iteration = 0;  // 1-based
  Phase phase = Phase::BusinessVocabulary;
  double oc = 0.0;
  ElementCounts counts;
  bool gateFired = false;

  bool operator==(const ReplayRecord&) const = default;
};

class ReplayError : public std::runtime_error {
 public:
  ReplayError(std::size_t iteration, std::string source, std::vector<ParseDiagnostic> diagnostics)
      : std::runtime_error(describe(iteration, source, diagnostics)),
        iteration_(iteration),
        source_(std::move(source)),
        diagnostics_(std::move(diagnostics)) {}

  std::size_t iteration() const { return iteration_; }
  const std::string& source() const { return source_; }
  const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  static std::string describe(std::size_t iteration, const std::string& source,
                              const std::vector<ParseDiagnostic>& diagnostics) {
    std::string msg = "snapshot " + std::to_string(iteration);
    if (!source.empty()) msg += " (" + source + ")";
    msg += " does not parse";
    for (const auto& d : diagnostics)
      if (d.isError()) msg += "\n  " + formatDiagnostic(d, source);
    return msg;
  }

  std::size_t iteration_;
  std::string source_;
  std::vector<ParseDiagnostic> diagnostics_;
};

struct Snapshot {
  std::string name;  // file name or other label used in diagnostics
  std::string document;
};

// Evaluates each snapshot under the current phase; a passing gate moves the
// following iteration one phase on.
inline std::vector<ReplayRecord> replay(const std::vector<Snapshot>& snapshots, const ConditionTree& tree,
                                        const ProfileSet& profiles, double threshold = kDefaultThreshold,
                                        const EvaluationOptions& opts = {}) {
  std::vector<ReplayRecord> records;
  Phase phase = Phase::BusinessVocabulary;
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    auto parsed = parseOntology(snapshots[i].document);
    if (!parsed.ok()) throw ReplayError(i + 1, snapshots[i].name, std::move(parsed.diagnostics));
    auto eval = evaluate(tree, profiles.at(phase), *parsed.ontology, opts);
    auto gate = gatePhase(eval, phase, threshold);
    records.push_back({i + 1, phase, eval.oc, eval.counts, gate.advance});
    if (gate.advance) phase = *gate.nextPhase;
  }
  return records;
}

inline std::vector<ReplayRecord> replay(const std::vector<std::string>& documents, const ConditionTree& tree,
                                        const ProfileSet& profiles, double threshold = kDefaultThreshold) {
  std::vector<Snapshot> snapshots;
  for (const auto& d : documents) snapshots.push_back({{}, d});
  return replay(snapshots, tree, profiles, threshold);
}

// Every *.ttl file of a directory, ordered by file name.
inline std::vector<Snapshot> loadSnapshots(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".ttl") files.push_back(e.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
  std::vector<Snapshot> out;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back({f.string(), ss.str()});
  }
  return out;
}

inline std::string replayCsv(const std::vector<ReplayRecord>& records) {
  std::string out = "iteration,phase,oc,classes,properties,axioms,individuals,gate_fired\n";
  char oc[32];
  for (const auto& r : records) {
    std::snprintf(oc, sizeof oc, "%.4f", r.oc);
    out += std::to_string(r.iteration) + ',' + std::string(phaseId(r.phase)) + ',' + oc + ',' +
           std::to_string(r.counts.classes) + ',' + std::to_string(r.counts.properties) + ',' +
           std::to_string(r.counts.axioms) + ',' + std::to_string(r.counts.individuals) + ',' +
           (r.gateFired ? "true" : "false") + '\n';
  }
  return out;
}

}  // namespace oceval

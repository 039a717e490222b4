#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oceval/checks.hpp"
#include "oceval/octree.hpp"
#include "oceval/phase.hpp"

namespace oceval {

inline constexpr double kDefaultThreshold = 0.80;

struct ImprovementAction {
  std::string checkId;
  std::string description;
  double gain = 0.0;  // OC percentage points recovered if the check scored 1
  std::vector<checks::Finding> findings;
};

// One action per evaluated leaf that is imperfect and carries weight, best
// gain first.
inline std::vector<ImprovementAction> recommendImprovements(const EvaluationResult& eval) {
  std::vector<ImprovementAction> actions;
  for (const auto& n : eval.nodes) {
    if (n.checkId.empty() || n.relativeWeight <= 0.0 || !n.price) continue;
    const auto& leaf = eval.leafResults.at(n.checkId);
    if (leaf.score >= 1.0) continue;
    ImprovementAction a;
    a.checkId = n.checkId;
    const auto* info = checks::findCheck(n.checkId);
    a.description = info ? std::string(info->action) : n.checkId;
    a.gain = n.relativeWeight * (1.0 - leaf.score) * 100.0;
    a.findings = leaf.findings;
    actions.push_back(std::move(a));
  }
  std::stable_sort(actions.begin(), actions.end(), [](const ImprovementAction& a, const ImprovementAction& b) {
    if (a.gain != b.gain) return a.gain > b.gain;
    return a.checkId < b.checkId;
  });
  return actions;
}

// OC after raising one leaf's score to 1, all else unchanged.
inline double projectGain(const EvaluationResult& eval, std::string_view checkId) {
  const NodeEvaluation* target = eval.leafFor(checkId);
  if (!target) throw std::invalid_argument("unknown check id: " + std::string(checkId));
  double oc = 0.0;
  for (const auto& n : eval.nodes) {
    if (n.checkId.empty() || !n.price) continue;
    double score = n.checkId == checkId ? 1.0 : eval.leafResults.at(n.checkId).score;
    oc += n.relativeWeight * score;
  }
  return std::max(oc, eval.oc);
}

struct GateDecision {
  Phase currentPhase = Phase::BusinessVocabulary;
  double oc = 0.0;
  double threshold = kDefaultThreshold;
  bool advance = false;
  std::optional<Phase> nextPhase;
};

inline GateDecision gatePhase(double oc, Phase phase, double threshold = kDefaultThreshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw std::invalid_argument("threshold must be in (0, 1]");
  GateDecision d;
  d.currentPhase = phase;
  d.oc = oc;
  d.threshold = threshold;
  d.nextPhase = nextPhase(phase);
  d.advance = oc >= threshold && d.nextPhase.has_value();
  return d;
}

inline GateDecision gatePhase(const EvaluationResult& eval, Phase phase, double threshold = kDefaultThreshold) {
  return gatePhase(eval.oc, phase, threshold);
}

struct Placement {
  Phase phase = Phase::BusinessVocabulary;
  std::vector<std::pair<Phase, double>> scanned;  // phases evaluated, in order
};

// Evaluates phase by phase and stops at the first one below the threshold.
// Check results are shared across phases since only the weights differ.
inline Placement placePhaseDetailed(const Ontology& ontology, const ConditionTree& tree,
                                    const ProfileSet& profiles, double threshold = kDefaultThreshold) {
  std::map<std::string, checks::LeafResult> cache;
  auto leaf = [&](const std::string& id) {
    auto it = cache.find(id);
    if (it == cache.end()) it = cache.emplace(id, checks::runCheck(id, ontology)).first;
    return it->second;
  };
  Placement out;
  for (Phase p : kAllPhases) {
    if (p == Phase::PostDevelopment) break;
    double oc = evaluateWith(tree, profiles.at(p), leaf).oc;
    out.scanned.emplace_back(p, oc);
    if (oc < threshold) {
      out.phase = p;
      return out;
    }
  }
  out.phase = Phase::PostDevelopment;
  return out;
}

inline Phase placePhase(const Ontology& ontology, const ConditionTree& tree, const ProfileSet& profiles,
                        double threshold = kDefaultThreshold) {
  return placePhaseDetailed(ontology, tree, profiles, threshold).phase;
}

}  // namespace oceval

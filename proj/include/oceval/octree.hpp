#pragma once

// The ontology-completeness condition tree: aggregate nodes with weighted
// edges and leaves bound to semantic checks, per-phase weight profiles, and
// the recursive evaluation that yields the OC score.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oceval/checks.hpp"
#include "oceval/model.hpp"
#include "oceval/phase.hpp"

namespace oceval {

class ProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ConditionNode {
  std::string name;
  std::string path;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
  std::string checkId;  // set on leaves only

  bool isLeaf() const { return !checkId.empty(); }
};

class ConditionTree {
 public:
  explicit ConditionTree(std::string rootName = "oc") {
    nodes_.push_back({rootName, rootName, std::nullopt, {}, {}});
    byPath_.emplace(rootName, 0);
  }

  static constexpr std::size_t root() { return 0; }

  std::size_t addAggregate(std::size_t parent, std::string name) {
    return add(parent, std::move(name), {});
  }

  std::size_t addLeaf(std::size_t parent, std::string name, std::string checkId) {
    if (checkId.empty()) throw std::invalid_argument("leaf without check id");
    for (const auto& n : nodes_)
      if (n.checkId == checkId) throw std::invalid_argument("check bound twice: " + checkId);
    return add(parent, std::move(name), std::move(checkId));
  }

  const std::vector<ConditionNode>& nodes() const { return nodes_; }
  const ConditionNode& node(std::size_t i) const { return nodes_.at(i); }

  std::optional<std::size_t> find(std::string_view path) const {
    auto it = byPath_.find(std::string(path));
    if (it == byPath_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].isLeaf()) out.push_back(i);
    return out;
  }

  // Aggregates must have children; leaves must not.
  void validate() const {
    for (const auto& n : nodes_) {
      if (!n.isLeaf() && n.children.empty())
        throw std::invalid_argument("aggregate without sub-conditions: " + n.path);
    }
  }

 private:
  std::size_t add(std::size_t parent, std::string name, std::string checkId) {
    if (parent >= nodes_.size() || nodes_[parent].isLeaf())
      throw std::invalid_argument("invalid parent for " + name);
    if (name.empty() || name.find('/') != std::string::npos)
      throw std::invalid_argument("invalid node name: " + name);
    std::string path = nodes_[parent].path + "/" + name;
    if (byPath_.contains(path)) throw std::invalid_argument("duplicate node: " + path);
    std::size_t id = nodes_.size();
    nodes_.push_back({std::move(name), path, parent, {}, std::move(checkId)});
    nodes_[parent].children.push_back(id);
    byPath_.emplace(std::move(path), id);
    return id;
  }

  std::vector<ConditionNode> nodes_;
  std::map<std::string, std::size_t> byPath_;
};

// Raw (unnormalized) edge weights keyed by the child's node path. Paths not
// listed weigh 1.
struct WeightProfile {
  Phase phase = Phase::BusinessVocabulary;
  std::map<std::string, double> weights;

  double raw(const std::string& path) const {
    auto it = weights.find(path);
    return it == weights.end() ? 1.0 : it->second;
  }

  // Checks the profile against a tree: known paths, non-negative weights and
  // no all-zero sibling group.
  void validate(const ConditionTree& tree) const {
    for (const auto& [path, w] : weights) {
      auto id = tree.find(path);
      if (!id) throw ProfileError("unknown node path: " + path);
      if (*id == ConditionTree::root()) throw ProfileError("the root weight is fixed at 1");
      if (!(w >= 0.0) || !std::isfinite(w)) throw ProfileError("invalid weight for " + path);
    }
    for (const auto& n : tree.nodes()) {
      if (n.children.empty()) continue;
      double sum = 0.0;
      for (auto c : n.children) sum += raw(tree.node(c).path);
      if (sum <= 0.0) throw ProfileError("all sub-condition weights of " + n.path + " are zero");
    }
  }

  // Per-node weight normalized within its sibling group; the root gets 1.
  std::vector<double> normalized(const ConditionTree& tree) const {
    validate(tree);
    std::vector<double> out(tree.nodes().size(), 1.0);
    for (const auto& n : tree.nodes()) {
      if (n.children.empty()) continue;
      double sum = 0.0;
      for (auto c : n.children) sum += raw(tree.node(c).path);
      for (auto c : n.children) out[c] = raw(tree.node(c).path) / sum;
    }
    return out;
  }
};

using ProfileSet = std::map<Phase, WeightProfile>;

// Leaf weight w' = product of normalized weights along the root path.
inline std::map<std::string, double> relativeWeights(const ConditionTree& tree,
                                                     const WeightProfile& profile) {
  auto local = profile.normalized(tree);
  std::vector<double> global(local.size(), 1.0);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
    const auto& n = tree.node(i);
    if (n.parent) global[i] = global[*n.parent] * local[i];
    if (n.isLeaf()) out[n.path] = global[i];
  }
  return out;
}

inline constexpr std::array<std::string_view, 5> kSublevels = {"description", "partition", "redundancy",
                                                               "consistency", "anomaly"};

// Root -> {tbox, rbox, abox} -> sublevels -> checks; uniform weights.
inline ConditionTree defaultTree() {
  namespace id = checks::ids;
  ConditionTree t;
  auto leafName = [](std::string_view checkId) {
    return std::string(checkId.substr(checkId.find('.') + 1));
  };
  auto group = [&](std::size_t parent, const char* name, std::initializer_list<const char*> leafIds) {
    auto g = t.addAggregate(parent, name);
    for (const char* c : leafIds) t.addLeaf(g, leafName(c), c);
  };
  auto tbox = t.addAggregate(ConditionTree::root(), "tbox");
  group(tbox, "description", {id::kEntityExistence, id::kNaturalLanguage});
  group(tbox, "partition", {id::kCommonClasses, id::kPathExistence, id::kDisjointRecommendation});
  group(tbox, "redundancy", {id::kIdenticalDefinition, id::kHierarchyRedundancy});
  group(tbox, "consistency", {id::kCirculatory});
  group(tbox, "anomaly", {id::kChainOfInheritance, id::kPropertyClumps, id::kLazyEntities});
  auto rbox = t.addAggregate(ConditionTree::root(), "rbox");
  group(rbox, "description", {id::kFormalTBox});
  group(rbox, "partition", {id::kInverseProperties});
  auto abox = t.addAggregate(ConditionTree::root(), "abox");
  group(abox, "description", {id::kInstanceExistence, id::kFormalABox});
  group(abox, "partition", {id::kCommonInstances, id::kExternalInstances});
  return t;
}

namespace detail {

struct PhaseWeights {
  double tbox, rbox, abox;
  std::array<double, 5> tboxSublevels;  // description .. anomaly
  std::array<double, 2> rboxSublevels;  // description, partition
  std::array<double, 2> aboxSublevels;
  std::vector<std::pair<const char*, double>> leafOverrides;
};

inline WeightProfile makeProfile(Phase phase, const PhaseWeights& w) {
  WeightProfile p{phase, {}};
  p.weights["oc/tbox"] = w.tbox;
  p.weights["oc/rbox"] = w.rbox;
  p.weights["oc/abox"] = w.abox;
  for (std::size_t i = 0; i < kSublevels.size(); ++i)
    p.weights["oc/tbox/" + std::string(kSublevels[i])] = w.tboxSublevels[i];
  for (std::size_t i = 0; i < 2; ++i) {
    p.weights["oc/rbox/" + std::string(kSublevels[i])] = w.rboxSublevels[i];
    p.weights["oc/abox/" + std::string(kSublevels[i])] = w.aboxSublevels[i];
  }
  for (const auto& [path, value] : w.leafOverrides) p.weights[path] = value;
  return p;
}

}  // namespace detail

// Shipped per-phase weights. Early steps weigh description and connectivity
// only; taxonomy definition brings in redundancy, consistency and anomaly;
// redundancy gains weight in the detail steps; post-development stresses
// description, redundancy and anomaly.
inline ProfileSet builtinProfiles() {
  using detail::PhaseWeights;
  const std::map<Phase, PhaseWeights> table = {
      {Phase::BusinessVocabulary,
       {0.85, 0.15, 0.0, {0.7, 0.3, 0, 0, 0}, {1.0, 0.0}, {0.5, 0.5},
        {{"oc/tbox/partition/common_classes", 0.0},
         {"oc/tbox/partition/disjoint_recommendation", 0.0}}}},
      {Phase::ExampleEnumeration,
       {0.5, 0.1, 0.4, {0.6, 0.4, 0, 0, 0}, {0.7, 0.3}, {0.6, 0.4}, {}}},
      {Phase::TaxonomyDefinition,
       {0.6, 0.1, 0.3, {0.25, 0.25, 0.2, 0.15, 0.15}, {0.6, 0.4}, {0.6, 0.4}, {}}},
      {Phase::BinaryRelations,
       {0.4, 0.4, 0.2, {0.25, 0.25, 0.2, 0.15, 0.15}, {0.6, 0.4}, {0.6, 0.4}, {}}},
      {Phase::DetailDescription,
       {0.45, 0.25, 0.3, {0.2, 0.2, 0.3, 0.15, 0.15}, {0.6, 0.4}, {0.6, 0.4}, {}}},
      {Phase::RestrictionsAndRules,
       {0.45, 0.25, 0.3, {0.2, 0.2, 0.3, 0.15, 0.15}, {0.6, 0.4}, {0.6, 0.4}, {}}},
      {Phase::PostDevelopment,
       {0.6, 0.2, 0.2, {0.25, 0.08, 0.32, 0.07, 0.28}, {0.8, 0.2}, {0.8, 0.2}, {}}},
  };
  ProfileSet out;
  for (const auto& [phase, w] : table) out.emplace(phase, detail::makeProfile(phase, w));
  return out;
}

// Share of the OC carried by one sublevel: the summed relative weight of the
// leaves beneath every node of that name.
inline double sublevelShare(const ConditionTree& tree, const WeightProfile& profile,
                            std::string_view sublevel) {
  double share = 0.0;
  for (const auto& [path, w] : relativeWeights(tree, profile)) {
    auto first = path.find('/');
    auto second = path.find('/', first + 1);
    auto third = path.find('/', second + 1);
    if (second == std::string::npos || third == std::string::npos) continue;
    if (std::string_view(path).substr(second + 1, third - second - 1) == sublevel) share += w;
  }
  return share;
}

struct NodeEvaluation {
  std::string path;
  std::string checkId;
  double weight = 0.0;          // normalized within the sibling group
  double relativeWeight = 0.0;  // product of weights from the root
  std::optional<double> price;  // absent for nodes skipped by a zero weight
};

struct EvaluationResult {
  Phase phase = Phase::BusinessVocabulary;
  double oc = 0.0;
  std::vector<NodeEvaluation> nodes;  // tree order
  std::map<std::string, checks::LeafResult> leafResults;
  ElementCounts counts;

  std::map<std::string, double> relativeWeights() const {
    std::map<std::string, double> out;
    for (const auto& n : nodes)
      if (!n.checkId.empty()) out[n.path] = n.relativeWeight;
    return out;
  }

  const NodeEvaluation* node(std::string_view path) const {
    for (const auto& n : nodes)
      if (n.path == path) return &n;
    return nullptr;
  }

  const NodeEvaluation* leafFor(std::string_view checkId) const {
    for (const auto& n : nodes)
      if (n.checkId == checkId) return &n;
    return nullptr;
  }

  double leafScore(std::string_view checkId) const {
    auto it = leafResults.find(std::string(checkId));
    return it == leafResults.end() ? 0.0 : it->second.score;
  }
};

struct EvaluationOptions {
  bool parallel = true;
};

namespace detail {

// Leaves reachable from the root through non-zero edges only.
inline std::vector<bool> activeNodes(const ConditionTree& tree, const std::vector<double>& local) {
  std::vector<bool> active(tree.nodes().size(), false);
  active[ConditionTree::root()] = true;
  for (std::size_t i = 1; i < tree.nodes().size(); ++i) {
    const auto& n = tree.node(i);
    active[i] = active[*n.parent] && local[i] != 0.0;
  }
  return active;
}

// Evaluate(X, w): a leaf returns w * exec(X); an aggregate returns w times
// the sum of Evaluate(Y, w(X, Y)) over sub-conditions with non-zero weight.
inline double evaluateNode(const ConditionTree& tree, const std::vector<double>& local,
                           const std::map<std::string, checks::LeafResult>& leaves,
                           std::vector<std::optional<double>>& prices, std::size_t x, double w) {
  const auto& node = tree.node(x);
  double price = 0.0;
  if (node.isLeaf()) {
    price = leaves.at(node.checkId).score;
  } else {
    for (auto y : node.children)
      if (local[y] != 0.0) price += evaluateNode(tree, local, leaves, prices, y, local[y]);
  }
  prices[x] = price;
  return w * price;
}

}  // namespace detail

// Evaluates with leaf results supplied by `leafResult(checkId)`; only leaves
// reachable through non-zero weights are requested.
template <class LeafFn>
EvaluationResult evaluateWith(const ConditionTree& tree, const WeightProfile& profile, LeafFn&& leafResult) {
  tree.validate();
  auto local = profile.normalized(tree);
  auto active = detail::activeNodes(tree, local);

  EvaluationResult result;
  result.phase = profile.phase;
  for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
    const auto& n = tree.node(i);
    if (n.isLeaf() && active[i]) result.leafResults.emplace(n.checkId, leafResult(n.checkId));
  }

  std::vector<std::optional<double>> prices(tree.nodes().size());
  result.oc = detail::evaluateNode(tree, local, result.leafResults, prices, ConditionTree::root(), 1.0);

  std::vector<double> global(tree.nodes().size(), 1.0);
  for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
    const auto& n = tree.node(i);
    if (n.parent) global[i] = global[*n.parent] * local[i];
    result.nodes.push_back({n.path, n.checkId, local[i], global[i], prices[i]});
  }
  return result;
}

inline EvaluationResult evaluate(const ConditionTree& tree, const WeightProfile& profile,
                                 const Ontology& ontology, const EvaluationOptions& opts = {}) {
  EvaluationResult result;
  if (opts.parallel) {
    // Fan the active checks out first, then aggregate in tree order.
    auto local = profile.normalized(tree);
    auto active = detail::activeNodes(tree, local);
    std::map<std::string, std::future<checks::LeafResult>> pending;
    for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
      const auto& n = tree.node(i);
      if (!n.isLeaf() || !active[i]) continue;
      pending.emplace(n.checkId, std::async(std::launch::async, [id = n.checkId, &ontology] {
                        return checks::runCheck(id, ontology);
                      }));
    }
    result = evaluateWith(tree, profile, [&](const std::string& id) { return pending.at(id).get(); });
  } else {
    result = evaluateWith(tree, profile,
                          [&](const std::string& id) { return checks::runCheck(id, ontology); });
  }
  result.counts = ontology.counts();
  return result;
}

}  // namespace oceval

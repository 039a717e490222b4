#pragma once

// Registry of the leaf semantic checks, keyed by their stable check ids.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oceval/checks/anomaly.hpp"
#include "oceval/checks/consistency.hpp"
#include "oceval/checks/description.hpp"
#include "oceval/checks/partition.hpp"
#include "oceval/checks/redundancy.hpp"
#include "oceval/checks/result.hpp"

namespace oceval::checks {

using CheckFn = LeafResult (*)(const Ontology&);

struct CheckInfo {
  std::string_view id;
  CheckFn run;
  std::string_view action;  // short remediation headline
};

inline LeafResult chainOfInheritanceDefault(const Ontology& o) { return findChainOfInheritance(o); }
inline LeafResult propertyClumpsDefault(const Ontology& o) { return findPropertyClumps(o); }

inline const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> checks = {
      {ids::kEntityExistence, checkEntityExistence, "Define classes and properties"},
      {ids::kInstanceExistence, checkInstanceExistence, "Add instances to classes"},
      {ids::kNaturalLanguage, checkNaturalLanguageDescription, "Describe entities in natural language"},
      {ids::kFormalTBox, checkFormalDescriptionTBox, "Define property domains and ranges"},
      {ids::kFormalABox, checkFormalDescriptionABox, "Complete instance descriptions"},
      {ids::kCommonClasses, checkCommonClasses, "Resolve classes under disjoint superclasses"},
      {ids::kCommonInstances, checkCommonInstances, "Resolve instances of disjoint classes"},
      {ids::kExternalInstances, checkExternalInstances, "Assign external instances to subclasses"},
      {ids::kInverseProperties, checkInverseProperties, "Define inverse properties"},
      {ids::kPathExistence, checkPathExistence, "Connect concepts"},
      {ids::kDisjointRecommendation, recommendDisjointAxioms, "Declare disjoint sibling classes"},
      {ids::kIdenticalDefinition, checkIdenticalFormalDefinition, "Merge or distinguish synonyms"},
      {ids::kHierarchyRedundancy, checkHierarchyRedundancy, "Remove redundant hierarchy axioms"},
      {ids::kCirculatory, checkCirculatoryErrors, "Remove circulatory errors"},
      {ids::kChainOfInheritance, chainOfInheritanceDefault, "Collapse chains of inheritance"},
      {ids::kPropertyClumps, propertyClumpsDefault, "Factor out property clumps"},
      {ids::kLazyEntities, checkLazyEntities, "Populate or remove lazy entities"},
  };
  return checks;
}

inline const CheckInfo* findCheck(std::string_view id) {
  const auto& all = registry();
  auto it = std::find_if(all.begin(), all.end(), [&](const CheckInfo& c) { return c.id == id; });
  return it == all.end() ? nullptr : &*it;
}

inline LeafResult runCheck(std::string_view id, const Ontology& o) {
  const CheckInfo* info = findCheck(id);
  if (!info) throw std::invalid_argument("unknown check id: " + std::string(id));
  return info->run(o);
}

}  // namespace oceval::checks

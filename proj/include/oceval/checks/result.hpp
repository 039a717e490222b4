#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oceval/model.hpp"

namespace oceval::checks {

struct Finding {
  std::string kind;
  std::vector<Iri> subjects;
  std::string suggestion;
  // Informational findings carry no score penalty.
  bool informational = false;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct LeafResult {
  std::string checkId;
  double score = 1.0;
  std::vector<Finding> findings;

  friend bool operator==(const LeafResult&, const LeafResult&) = default;

  std::size_t penalizedFindings() const {
    return static_cast<std::size_t>(std::count_if(
        findings.begin(), findings.end(), [](const Finding& f) { return !f.informational; }));
  }
};

namespace ids {
inline constexpr const char* kEntityExistence = "description.entity_existence";
inline constexpr const char* kInstanceExistence = "description.instance_existence";
inline constexpr const char* kNaturalLanguage = "description.nl";
inline constexpr const char* kFormalTBox = "description.formal_tbox";
inline constexpr const char* kFormalABox = "description.formal_abox";
inline constexpr const char* kCommonClasses = "partition.common_classes";
inline constexpr const char* kCommonInstances = "partition.common_instances";
inline constexpr const char* kExternalInstances = "partition.external_instances";
inline constexpr const char* kInverseProperties = "partition.inverse_properties";
inline constexpr const char* kPathExistence = "partition.path_existence";
inline constexpr const char* kDisjointRecommendation = "partition.disjoint_recommendation";
inline constexpr const char* kIdenticalDefinition = "redundancy.identical_definition";
inline constexpr const char* kHierarchyRedundancy = "redundancy.hierarchy";
inline constexpr const char* kCirculatory = "consistency.circulatory";
inline constexpr const char* kChainOfInheritance = "anomaly.chain_of_inheritance";
inline constexpr const char* kPropertyClumps = "anomaly.property_clumps";
inline constexpr const char* kLazyEntities = "anomaly.lazy_entities";
}  // namespace ids

namespace detail {

// 1 - bad/total, or 1 when the category is empty.
inline double penaltyScore(std::size_t bad, std::size_t total) {
  if (total == 0) return 1.0;
  return 1.0 - static_cast<double>(bad) / static_cast<double>(total);
}

inline double ratioScore(std::size_t good, std::size_t total) {
  if (total == 0) return 1.0;
  return static_cast<double>(good) / static_cast<double>(total);
}

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

inline bool isEnglish(const Literal& lit) {
  if (lit.lang.empty()) return true;
  if (lit.lang.size() < 2) return false;
  auto lower = [](char c) { return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c); };
  if (lower(lit.lang[0]) != 'e' || lower(lit.lang[1]) != 'n') return false;
  return lit.lang.size() == 2 || lit.lang[2] == '-';
}

inline std::string joined(const std::vector<Iri>& iris, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < iris.size(); ++i) {
    if (i) out += sep;
    out += iris[i].str();
  }
  return out;
}

template <class Range>
std::vector<Iri> toVector(const Range& r) {
  return std::vector<Iri>(r.begin(), r.end());
}

}  // namespace detail

}  // namespace oceval::checks

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace oceval {

// Development steps, in order.
enum class Phase {
  BusinessVocabulary,    // 2.1
  ExampleEnumeration,    // 2.2
  TaxonomyDefinition,    // 2.3
  BinaryRelations,       // 2.4
  DetailDescription,     // 2.5
  RestrictionsAndRules,  // 2.6
  PostDevelopment,
};

inline constexpr std::array<Phase, 7> kAllPhases = {
    Phase::BusinessVocabulary, Phase::ExampleEnumeration, Phase::TaxonomyDefinition,
    Phase::BinaryRelations,    Phase::DetailDescription,  Phase::RestrictionsAndRules,
    Phase::PostDevelopment,
};

inline std::string_view phaseId(Phase p) {
  switch (p) {
    case Phase::BusinessVocabulary: return "2.1";
    case Phase::ExampleEnumeration: return "2.2";
    case Phase::TaxonomyDefinition: return "2.3";
    case Phase::BinaryRelations: return "2.4";
    case Phase::DetailDescription: return "2.5";
    case Phase::RestrictionsAndRules: return "2.6";
    case Phase::PostDevelopment: return "post-development";
  }
  return "?";
}

inline std::string_view phaseName(Phase p) {
  switch (p) {
    case Phase::BusinessVocabulary: return "business-vocabulary-acquisition";
    case Phase::ExampleEnumeration: return "example-enumeration";
    case Phase::TaxonomyDefinition: return "taxonomy-definition";
    case Phase::BinaryRelations: return "ad-hoc-binary-relations";
    case Phase::DetailDescription: return "detail-description";
    case Phase::RestrictionsAndRules: return "restrictions-and-rules";
    case Phase::PostDevelopment: return "post-development";
  }
  return "?";
}

inline std::string phaseLabel(Phase p) {
  if (p == Phase::PostDevelopment) return std::string(phaseId(p));
  return std::string(phaseId(p)) + " " + std::string(phaseName(p));
}

// Accepts "2.3", "taxonomy-definition", "post-development" or "post".
inline std::optional<Phase> parsePhase(std::string_view text) {
  for (Phase p : kAllPhases)
    if (text == phaseId(p) || text == phaseName(p)) return p;
  if (text == "post") return Phase::PostDevelopment;
  return std::nullopt;
}

inline std::optional<Phase> nextPhase(Phase p) {
  if (p == Phase::PostDevelopment) return std::nullopt;
  return static_cast<Phase>(static_cast<int>(p) + 1);
}

}  // namespace oceval

#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oceval/checks/result.hpp"
#include "oceval/graph.hpp"
#include "oceval/model.hpp"

namespace oceval::checks {

namespace detail {

// The element's asserted axioms without annotations, with the element itself
// replaced by an empty placeholder IRI.
inline std::set<Axiom> formalSignature(const Ontology& o, const Iri& element) {
  static const Iri placeholder;
  std::set<Axiom> out;
  for (auto a : o.assertedAxioms(element)) {
    if (isAnnotation(a.kind)) continue;
    if (a.subject == element) a.subject = placeholder;
    if (a.object == element) a.object = placeholder;
    if (a.property == element) a.property = placeholder;
    out.insert(normalized(std::move(a)));
  }
  return out;
}

}  // namespace detail

// Same-kind elements with equal, non-empty formal definitions are synonym
// candidates.
inline LeafResult checkIdenticalFormalDefinition(const Ontology& o) {
  LeafResult r{ids::kIdenticalDefinition, 1.0, {}};
  std::map<std::pair<EntityKind, std::set<Axiom>>, std::vector<Iri>> groups;
  std::size_t elements = 0;
  auto visit = [&](const Iri& iri, EntityKind kind) {
    ++elements;
    auto sig = detail::formalSignature(o, iri);
    if (!sig.empty()) groups[{kind, std::move(sig)}].push_back(iri);
  };
  for (const auto& e : o.entities()) visit(e.iri, e.kind);
  for (const auto& [x, individual] : o.individuals()) visit(x, EntityKind::Individual);

  std::size_t flagged = 0;
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;
    flagged += members.size();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        r.findings.push_back({"synonym_candidate", {members[i], members[j]},
                              members[i].str() + " and " + members[j].str() +
                                  " have identical formal definitions; merge them or tell them apart."});
  }
  r.score = detail::penaltyScore(flagged, elements);
  return r;
}

// SubClassOf, SubPropertyOf and type assertions that repeat another asserted
// axiom or follow from the remaining hierarchy axioms.
inline LeafResult checkHierarchyRedundancy(const Ontology& o) {
  LeafResult r{ids::kHierarchyRedundancy, 1.0, {}};
  std::size_t total = 0, redundant = 0;

  auto record = [&](const Axiom& a, bool implied, const std::string& what) {
    std::size_t n = o.occurrences(a);
    total += n;
    std::size_t bad = implied ? n : n - 1;
    if (bad == 0) return;
    redundant += bad;
    std::vector<Iri> subjects{a.subject, a.object};
    if (implied) {
      r.findings.push_back({"implied_hierarchy_axiom", subjects,
                            what + " already follows from other hierarchy axioms; remove it."});
    }
    if (n > 1) {
      r.findings.push_back({"duplicate_hierarchy_axiom", subjects,
                            what + " is asserted " + std::to_string(n) + " times; keep one."});
    }
  };

  auto classes = graph::classHierarchyGraph(o);
  for (const auto& a : o.axiomsOfKind(AxiomKind::SubClassOf)) {
    bool implied = graph::reachableWithout(classes, a.subject, a.object, a.subject, a.object);
    record(a, implied, a.subject.str() + " rdfs:subClassOf " + a.object.str());
  }
  auto properties = graph::propertyHierarchyGraph(o);
  for (const auto& a : o.axiomsOfKind(AxiomKind::SubPropertyOf)) {
    bool implied = graph::reachableWithout(properties, a.subject, a.object, a.subject, a.object);
    record(a, implied, a.subject.str() + " rdfs:subPropertyOf " + a.object.str());
  }
  for (const auto& a : o.axiomsOfKind(AxiomKind::TypeAssertion)) {
    bool implied = false;
    for (const auto& other : o.individuals().at(a.subject).types) {
      if (other == a.object) continue;
      if (o.allSuperClasses(other).contains(a.object)) {
        implied = true;
        break;
      }
    }
    record(a, implied, a.subject.str() + " rdf:type " + a.object.str());
  }
  r.score = detail::penaltyScore(redundant, total);
  return r;
}

}  // namespace oceval::checks

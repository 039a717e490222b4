#pragma once

#include <map>
#include <set>
#include <string>

#include "oceval/checks/result.hpp"
#include "oceval/model.hpp"

namespace oceval::checks {

inline LeafResult checkEntityExistence(const Ontology& o) {
  LeafResult r{ids::kEntityExistence, 0.0, {}};
  bool hasClasses = !o.classes().empty();
  bool hasProperties = o.propertyCount() > 0;
  r.score = ((hasClasses ? 1.0 : 0.0) + (hasProperties ? 1.0 : 0.0)) / 2.0;
  if (!hasClasses) r.findings.push_back({"no_classes", {}, "Declare the classes of the domain vocabulary."});
  if (!hasProperties)
    r.findings.push_back({"no_properties", {}, "Declare object or data properties relating the classes."});
  return r;
}

inline LeafResult checkInstanceExistence(const Ontology& o) {
  LeafResult r{ids::kInstanceExistence, 1.0, {}};
  std::size_t instantiated = 0;
  for (const auto& c : o.classes()) {
    if (!o.instancesOf(c, InstanceMode::Inherited).empty()) {
      ++instantiated;
    } else {
      r.findings.push_back({"class_without_instances", {c}, "Add example individuals of " + c.str() + "."});
    }
  }
  r.score = detail::ratioScore(instantiated, o.classes().size());
  return r;
}

// Half credit each for an English label and an English comment.
inline LeafResult checkNaturalLanguageDescription(const Ontology& o) {
  LeafResult r{ids::kNaturalLanguage, 1.0, {}};
  std::set<Iri> labelled, commented;
  for (const auto& a : o.axiomsOfKind(AxiomKind::Label))
    if (detail::isEnglish(*a.literal)) labelled.insert(a.subject);
  for (const auto& a : o.axiomsOfKind(AxiomKind::Comment))
    if (detail::isEnglish(*a.literal)) commented.insert(a.subject);

  auto entities = o.entities();
  double credit = 0.0;
  for (const auto& e : entities) {
    if (labelled.contains(e.iri)) {
      credit += 0.5;
    } else {
      r.findings.push_back({"missing_label", {e.iri}, "Add an English rdfs:label to " + e.iri.str() + "."});
    }
    if (commented.contains(e.iri)) {
      credit += 0.5;
    } else {
      r.findings.push_back(
          {"missing_comment", {e.iri}, "Add an English rdfs:comment describing " + e.iri.str() + "."});
    }
  }
  if (!entities.empty()) r.score = credit / static_cast<double>(entities.size());
  return r;
}

inline LeafResult checkFormalDescriptionTBox(const Ontology& o) {
  LeafResult r{ids::kFormalTBox, 1.0, {}};
  auto properties = o.properties();
  double credit = 0.0;
  for (const auto& p : properties) {
    if (!o.domainsOf(p).empty()) {
      credit += 0.5;
    } else {
      r.findings.push_back({"missing_domain", {p}, "Define rdfs:domain of " + p.str() + "."});
    }
    if (!o.rangesOf(p).empty()) {
      credit += 0.5;
    } else {
      r.findings.push_back({"missing_range", {p}, "Define rdfs:range of " + p.str() + "."});
    }
  }
  if (!properties.empty()) r.score = credit / static_cast<double>(properties.size());
  return r;
}

// Closed-world conformance of each individual to asserted domains, ranges and
// cardinality restrictions. Object-property ranges only: datatypes are opaque.
inline LeafResult checkFormalDescriptionABox(const Ontology& o) {
  LeafResult r{ids::kFormalABox, 1.0, {}};
  std::map<Iri, std::set<Iri>> typeCache;
  auto typesOf = [&](const Iri& x) -> const std::set<Iri>& {
    auto it = typeCache.find(x);
    if (it == typeCache.end()) it = typeCache.emplace(x, o.inheritedTypes(x)).first;
    return it->second;
  };
  auto restrictions = o.axiomsOfKind(AxiomKind::MinCardinality);
  auto maxes = o.axiomsOfKind(AxiomKind::MaxCardinality);
  restrictions.insert(restrictions.end(), maxes.begin(), maxes.end());

  std::size_t conforming = 0;
  for (const auto& [x, individual] : o.individuals()) {
    bool ok = true;
    auto assertions = o.assertionsAbout(x);
    for (const auto& a : assertions) {
      for (const auto& d : o.domainsOf(a.property)) {
        if (!typesOf(x).contains(d)) {
          ok = false;
          r.findings.push_back({"domain_violation", {x, a.property, d},
                                "Type " + x.str() + " as " + d.str() + " (domain of " +
                                    a.property.str() + ") or correct the assertion."});
        }
      }
      if (a.literal || !o.objectProperties().contains(a.property)) continue;
      for (const auto& rg : o.rangesOf(a.property)) {
        if (!typesOf(a.object).contains(rg)) {
          ok = false;
          r.findings.push_back({"range_violation", {x, a.property, a.object},
                                "Type " + a.object.str() + " as " + rg.str() + " (range of " +
                                    a.property.str() + ") or correct the assertion."});
        }
      }
    }
    for (const auto& c : restrictions) {
      if (!typesOf(x).contains(c.subject)) continue;
      std::size_t count = 0;
      for (const auto& a : assertions)
        if (a.property == c.property) ++count;
      bool isMin = c.kind == AxiomKind::MinCardinality;
      if (isMin ? count < *c.cardinality : count > *c.cardinality) {
        ok = false;
        r.findings.push_back(
            {isMin ? "min_cardinality_violation" : "max_cardinality_violation",
             {x, c.subject, c.property},
             x.str() + " has " + std::to_string(count) + " value(s) of " + c.property.str() +
                 (isMin ? ", at least " : ", at most ") + std::to_string(*c.cardinality) +
                 " required by " + c.subject.str() + "."});
      }
    }
    if (ok) ++conforming;
  }
  r.score = detail::ratioScore(conforming, o.individuals().size());
  return r;
}

}  // namespace oceval::checks

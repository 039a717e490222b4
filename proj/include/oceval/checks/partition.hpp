#pragma once

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "oceval/checks/result.hpp"
#include "oceval/graph.hpp"
#include "oceval/model.hpp"

namespace oceval::checks {

namespace detail {

inline bool intersects(const std::set<Iri>& a, const std::set<Iri>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// Distinct disjoint pairs (X, Y), X != Y, that both occur in `types`.
inline std::vector<std::pair<Iri, Iri>> disjointPairsWithin(const Ontology& o,
                                                            const std::set<Iri>& types) {
  std::vector<std::pair<Iri, Iri>> out;
  for (const auto& [x, y] : o.disjointPairs())
    if (x != y && types.contains(x) && types.contains(y)) out.emplace_back(x, y);
  return out;
}

// Unordered pairs of distinct direct subclasses sharing a parent.
inline std::set<std::pair<Iri, Iri>> siblingClassPairs(const Ontology& o) {
  std::set<std::pair<Iri, Iri>> out;
  for (const auto& parent : o.classes()) {
    auto children = o.directSubClasses(parent);
    for (auto i = children.begin(); i != children.end(); ++i)
      for (auto j = std::next(i); j != children.end(); ++j) out.emplace(*i, *j);
  }
  return out;
}

inline std::set<std::pair<Iri, Iri>> siblingPropertyPairs(const Ontology& o) {
  std::set<std::pair<Iri, Iri>> out;
  for (const auto& parent : o.properties()) {
    auto children = o.directSubProperties(parent);
    for (auto i = children.begin(); i != children.end(); ++i)
      for (auto j = std::next(i); j != children.end(); ++j) out.emplace(*i, *j);
  }
  return out;
}

}  // namespace detail

inline LeafResult checkCommonClasses(const Ontology& o) {
  LeafResult r{ids::kCommonClasses, 1.0, {}};
  std::size_t violating = 0;
  if (!o.disjointPairs().empty()) {
    for (const auto& c : o.classes()) {
      auto clashes = detail::disjointPairsWithin(o, o.allSuperClasses(c));
      if (clashes.empty()) continue;
      ++violating;
      for (const auto& [x, y] : clashes)
        r.findings.push_back({"common_class", {c, x, y},
                              c.str() + " is a subclass of disjoint classes " + x.str() + " and " +
                                  y.str() + "; remove one superclass or the disjointness."});
    }
  }
  r.score = detail::penaltyScore(violating, o.classes().size());
  return r;
}

inline LeafResult checkCommonInstances(const Ontology& o) {
  LeafResult r{ids::kCommonInstances, 1.0, {}};
  std::size_t violating = 0;
  if (!o.disjointPairs().empty()) {
    for (const auto& [x, individual] : o.individuals()) {
      auto clashes = detail::disjointPairsWithin(o, o.inheritedTypes(x));
      if (clashes.empty()) continue;
      ++violating;
      for (const auto& [a, b] : clashes)
        r.findings.push_back({"common_instance", {x, a, b},
                              x.str() + " is an instance of disjoint classes " + a.str() + " and " +
                                  b.str() + "; correct its types."});
    }
  }
  r.score = detail::penaltyScore(violating, o.individuals().size());
  return r;
}

// Direct instances of a class with subclasses that belong to none of them.
inline LeafResult checkExternalInstances(const Ontology& o) {
  LeafResult r{ids::kExternalInstances, 1.0, {}};
  std::set<Iri> external;
  for (const auto& c : o.classes()) {
    auto subs = o.allSubClasses(c);
    subs.erase(c);
    if (o.directSubClasses(c).empty() || subs.empty()) continue;
    for (const auto& x : o.instancesOf(c, InstanceMode::Direct)) {
      const auto& types = o.individuals().at(x).types;
      if (detail::intersects(types, subs)) continue;
      external.insert(x);
      r.findings.push_back({"external_instance", {x, c},
                            x.str() + " is an instance of " + c.str() +
                                " but of none of its subclasses; assign it to a subclass."});
    }
  }
  r.score = detail::penaltyScore(external.size(), o.individuals().size());
  return r;
}

inline LeafResult checkInverseProperties(const Ontology& o) {
  LeafResult r{ids::kInverseProperties, 1.0, {}};
  std::set<Iri> withInverse;
  for (const auto& a : o.axiomsOfKind(AxiomKind::InverseOf)) {
    withInverse.insert(a.subject);
    withInverse.insert(a.object);
  }
  for (const auto& p : o.objectProperties())
    if (!withInverse.contains(p))
      r.findings.push_back({"missing_inverse", {p}, "Define an owl:inverseOf property for " + p.str() + "."});
  r.score = detail::ratioScore(o.objectProperties().size() - r.findings.size(),
                               o.objectProperties().size());
  return r;
}

inline LeafResult checkPathExistence(const Ontology& o) {
  LeafResult r{ids::kPathExistence, 1.0, {}};
  if (o.classes().size() <= 1) return r;
  auto components = graph::connectedComponents(graph::conceptGraph(o));
  r.score = static_cast<double>(components.front().size()) / static_cast<double>(o.classes().size());
  for (std::size_t i = 1; i < components.size(); ++i) {
    auto members = detail::toVector(components[i]);
    r.findings.push_back({"disconnected_component", members,
                          "Connect {" + detail::joined(members) +
                              "} to the rest of the ontology with a subclass axiom or a property."});
  }
  return r;
}

// Data-driven hierarchy recommendations over sibling pairs. Siblings whose
// (inherited) instance sets are non-empty and do not overlap are recommended
// as disjoint; only those recommendations affect the score. Equivalence and
// subsumption candidates for classes and properties are informational.
inline LeafResult recommendDisjointAxioms(const Ontology& o) {
  LeafResult r{ids::kDisjointRecommendation, 1.0, {}};
  auto siblings = detail::siblingClassPairs(o);
  std::map<Iri, std::set<Iri>> instances;
  auto extent = [&](const Iri& c) -> const std::set<Iri>& {
    auto it = instances.find(c);
    if (it == instances.end()) it = instances.emplace(c, o.instancesOf(c, InstanceMode::Inherited)).first;
    return it->second;
  };
  std::set<Axiom> asserted(o.axioms().begin(), o.axioms().end());

  std::size_t recommended = 0;
  for (const auto& [a, b] : siblings) {
    const auto& ea = extent(a);
    const auto& eb = extent(b);
    if (ea.empty() || eb.empty()) continue;
    if (!detail::intersects(ea, eb)) {
      if (o.areDisjoint(a, b)) continue;
      ++recommended;
      r.findings.push_back({"disjoint_candidate", {a, b},
                            "Declare " + a.str() + " owl:disjointWith " + b.str() + "."});
    } else if (ea == eb) {
      if (asserted.contains(pairAxiom(AxiomKind::EquivalentClasses, a, b))) continue;
      r.findings.push_back({"equivalent_class_candidate", {a, b},
                            a.str() + " and " + b.str() +
                                " have the same instances; consider owl:equivalentClass.",
                            true});
    } else {
      auto [small, large] = ea.size() < eb.size() ? std::pair{a, b} : std::pair{b, a};
      const auto& es = extent(small);
      const auto& el = extent(large);
      if (!std::includes(el.begin(), el.end(), es.begin(), es.end())) continue;
      if (asserted.contains(subClassOf(small, large))) continue;
      r.findings.push_back({"subclass_candidate", {small, large},
                            "Every instance of " + small.str() + " is an instance of " + large.str() +
                                "; consider rdfs:subClassOf.",
                            true});
    }
  }

  std::map<Iri, std::set<std::pair<Iri, Iri>>> usage;
  for (const auto& a : o.axiomsOfKind(AxiomKind::PropertyAssertion))
    usage[a.property].emplace(a.subject, a.literal ? Iri(a.literal->text) : a.object);
  for (const auto& [p, q] : detail::siblingPropertyPairs(o)) {
    const auto& up = usage[p];
    const auto& uq = usage[q];
    if (up.empty() || uq.empty()) continue;
    if (up == uq) {
      if (asserted.contains(pairAxiom(AxiomKind::EquivalentProperties, p, q))) continue;
      r.findings.push_back({"equivalent_property_candidate", {p, q},
                            p.str() + " and " + q.str() +
                                " relate the same pairs; consider owl:equivalentProperty.",
                            true});
    } else if (std::includes(uq.begin(), uq.end(), up.begin(), up.end()) ||
               std::includes(up.begin(), up.end(), uq.begin(), uq.end())) {
      auto [small, large] = up.size() < uq.size() ? std::pair{p, q} : std::pair{q, p};
      if (asserted.contains(subPropertyOf(small, large))) continue;
      r.findings.push_back({"subproperty_candidate", {small, large},
                            "Every use of " + small.str() + " is also a use of " + large.str() +
                                "; consider rdfs:subPropertyOf.",
                            true});
    }
  }

  r.score = detail::penaltyScore(recommended, siblings.size());
  return r;
}

}  // namespace oceval::checks

#pragma once

#include "oceval/checks/result.hpp"
#include "oceval/graph.hpp"
#include "oceval/model.hpp"

namespace oceval::checks {

// Classes or properties that are their own ancestor at distance 0, 1 or n.
inline LeafResult checkCirculatoryErrors(const Ontology& o) {
  LeafResult r{ids::kCirculatory, 1.0, {}};
  std::size_t onCycle = 0;
  auto report = [&](const graph::Digraph<Iri>& g, const char* relation) {
    for (const auto& cycle : graph::cycles(g)) {
      onCycle += cycle.size();
      auto members = detail::toVector(cycle);
      r.findings.push_back({"circulatory_error", members,
                            "Break the " + std::string(relation) + " cycle through {" +
                                detail::joined(members) + "}."});
    }
  };
  report(graph::classHierarchyGraph(o), "rdfs:subClassOf");
  report(graph::propertyHierarchyGraph(o), "rdfs:subPropertyOf");
  r.score = detail::penaltyScore(onCycle, o.classes().size() + o.propertyCount());
  return r;
}

}  // namespace oceval::checks

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oceval/checks/result.hpp"
#include "oceval/graph.hpp"
#include "oceval/model.hpp"

namespace oceval::checks {

struct ChainOptions {
  // Shortest run of bare pass-through classes reported as a chain.
  std::size_t minIntermediates = 3;
};

// Runs of bare pass-through classes (one superclass, no axioms besides the
// subclass link) between two described classes. Each chain lowers the score
// by (intermediates / asserted SubClassOf axioms). Tops are visited in IRI
// order and an intermediate is only ever charged to the first chain through
// it, so branching runs are split at the branch point.
inline LeafResult findChainOfInheritance(const Ontology& o, const ChainOptions& opts = {}) {
  LeafResult r{ids::kChainOfInheritance, 1.0, {}};
  const std::size_t directSubClassAxioms = o.axiomsOfKind(AxiomKind::SubClassOf).size();
  if (directSubClassAxioms == 0) return r;

  auto described = [&](const Iri& c) { return !o.assertedAxiomsWithoutSubClass(c).empty(); };
  auto passThrough = [&](const Iri& c) {
    return o.directSuperClasses(c).size() == 1 && !described(c);
  };

  double price = 1.0;
  std::set<Iri> claimed;
  std::vector<Iri> path;

  std::function<void(const Iri&, const Iri&)> walk = [&](const Iri& top, const Iri& node) {
    for (const auto& child : o.directSubClasses(node)) {
      if (child == node || child == top) continue;
      if (!path.empty() && described(child)) {
        if (path.size() < opts.minIntermediates) continue;
        std::vector<Iri> fresh;
        for (const auto& p : path)
          if (!claimed.contains(p)) fresh.push_back(p);
        if (fresh.empty()) continue;
        claimed.insert(fresh.begin(), fresh.end());
        price -= static_cast<double>(fresh.size()) / static_cast<double>(directSubClassAxioms);
        std::vector<Iri> subjects{top, child};
        subjects.insert(subjects.end(), fresh.begin(), fresh.end());
        r.findings.push_back({"chain_of_inheritance", subjects,
                              "Collapse the chain " + top.str() + " > " + detail::joined(fresh, " > ") +
                                  " > " + child.str() +
                                  " or describe the intermediate classes."});
      } else if (passThrough(child) && std::find(path.begin(), path.end(), child) == path.end()) {
        path.push_back(child);
        walk(top, child);
        path.pop_back();
      }
    }
  };
  for (const auto& top : o.classes()) {
    if (!described(top)) continue;
    walk(top, top);
  }
  r.score = detail::clamp01(price);
  return r;
}

// Repeatedly extracts the class-property biclique maximizing m*n/(m+n)
// among those with m, n >= 2 and m*n > m+n, removes its edges and lowers the
// score by (m*n - (m+n)) / (number of properties).
inline LeafResult findPropertyClumps(const Ontology& o, const graph::BicliqueOptions& opts = {}) {
  using Clique = graph::Biclique<Iri, Iri>;
  LeafResult r{ids::kPropertyClumps, 1.0, {}};
  const std::size_t nR = o.propertyCount();
  if (nR == 0) return r;

  auto g = graph::classPropertyGraph(o);
  double price = 1.0;
  auto better = [](const Clique& a, const Clique& b) {
    std::uint64_t ma = a.left.size(), na = a.right.size();
    std::uint64_t mb = b.left.size(), nb = b.right.size();
    std::uint64_t lhs = ma * na * (mb + nb), rhs = mb * nb * (ma + na);
    if (lhs != rhs) return lhs > rhs;
    if (ma * na != mb * nb) return ma * na > mb * nb;
    return a < b;
  };

  while (true) {
    std::vector<Clique> candidates;
    try {
      candidates = graph::enumerateMaximalBicliques(g, opts);
    } catch (const graph::BicliqueLimitExceeded&) {
      r.findings.push_back({"clump_search_truncated", {},
                            "Property clump search stopped at the candidate limit.", true});
      break;
    }
    const Clique* best = nullptr;
    for (const auto& c : candidates) {
      if (c.left.size() * c.right.size() <= c.left.size() + c.right.size()) continue;
      if (!best || better(c, *best)) best = &c;
    }
    if (!best) break;
    const std::size_t m = best->left.size(), n = best->right.size();
    price -= static_cast<double>(m * n - (m + n)) / static_cast<double>(nR);
    auto classes = detail::toVector(best->left);
    auto properties = detail::toVector(best->right);
    std::vector<Iri> subjects = classes;
    subjects.insert(subjects.end(), properties.begin(), properties.end());
    r.findings.push_back({"property_clump", subjects,
                          "Classes {" + detail::joined(classes) + "} repeat properties {" +
                              detail::joined(properties) +
                              "}; introduce an abstract class carrying them."});
    for (const auto& c : best->left)
      for (const auto& p : best->right) g.edges.erase({c, p});
  }
  r.score = detail::clamp01(price);
  return r;
}

// Leaf classes without direct instances and leaf properties never asserted.
inline LeafResult checkLazyEntities(const Ontology& o) {
  LeafResult r{ids::kLazyEntities, 1.0, {}};
  std::size_t leaves = 0, lazy = 0;
  for (const auto& c : o.classes()) {
    auto subs = o.directSubClasses(c);
    subs.erase(c);
    if (!subs.empty()) continue;
    ++leaves;
    if (o.instancesOf(c, InstanceMode::Direct).empty()) {
      ++lazy;
      r.findings.push_back({"lazy_class", {c},
                            "Leaf class " + c.str() + " has no instances; add instances, remove or generalize it."});
    }
  }
  for (const auto& p : o.properties()) {
    auto subs = o.directSubProperties(p);
    subs.erase(p);
    if (!subs.empty()) continue;
    ++leaves;
    if (o.assertionCount(p) == 0) {
      ++lazy;
      r.findings.push_back({"lazy_property", {p},
                            "Leaf property " + p.str() + " is never used; add assertions, remove or generalize it."});
    }
  }
  r.score = detail::penaltyScore(lazy, leaves);
  return r;
}

}  // namespace oceval::checks

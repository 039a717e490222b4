#pragma once

// Fixtures, random generators and brute-force oracles shared by the unit
// tests and the acceptance gate. Oracles here deliberately avoid the library
// algorithms they are used to check.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oceval/oceval.hpp"

namespace oceval::testing {

inline const std::string kNs = "http://example.org/t#";

inline Iri iri(const std::string& local) { return Iri(kNs + local); }

inline std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string dataPath(const std::string& name) { return std::string(OCEVAL_TEST_DATA) + "/" + name; }
inline std::string sourcePath(const std::string& name) { return std::string(OCEVAL_SOURCE_DIR) + "/" + name; }

inline Ontology parseOrThrow(std::string_view doc) {
  auto r = parseOntology(doc);
  if (!r.ok()) {
    std::string msg = "fixture does not parse:";
    for (const auto& d : r.diagnostics) msg += "\n" + formatDiagnostic(d);
    throw std::runtime_error(msg);
  }
  return std::move(*r.ontology);
}

// Turtle prelude binding ':' to the test namespace.
inline const std::string kPrelude = "@prefix : <" + kNs + "> .\n";

// ---------------------------------------------------------------------------
// Canonical fixtures

// Annotated Top and Bottom joined by three bare pass-through classes:
// Bottom < M3 < M2 < M1 < Top, four SubClassOf axioms.
inline OntologyBuilder chainBuilder() {
  OntologyBuilder b;
  for (auto n : {"Top", "M1", "M2", "M3", "Bottom"}) b.addClass(iri(n));
  b.add(label(iri("Top"), "Top"));
  b.add(label(iri("Bottom"), "Bottom"));
  b.add(subClassOf(iri("M1"), iri("Top")));
  b.add(subClassOf(iri("M2"), iri("M1")));
  b.add(subClassOf(iri("M3"), iri("M2")));
  b.add(subClassOf(iri("Bottom"), iri("M3")));
  return b;
}

// m classes each carrying the same n properties through rdfs:domain.
inline Ontology sharedPropertyFixture(std::size_t m, std::size_t n) {
  OntologyBuilder b;
  for (std::size_t i = 0; i < m; ++i) b.addClass(iri("C" + std::to_string(i)));
  for (std::size_t j = 0; j < n; ++j) b.addDataProperty(iri("p" + std::to_string(j)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add(domainOf(iri("p" + std::to_string(j)), iri("C" + std::to_string(i))));
  return b.build();
}

// ---------------------------------------------------------------------------
// Random generation

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}
inline bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }
template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[uniform(rng, 0, v.size() - 1)];
}

inline std::string randomText(Rng& rng) {
  static const std::vector<std::string> pieces = {"alpha", "Beta", " ", "\"quoted\"", "back\\slash", "line\nbreak",
                                                  "tab\t", "\xc5\xbe" "ival", "\xe2\x82\xac", "'", "#hash", "<lt>", "x"};
  std::string s;
  for (std::size_t i = uniform(rng, 0, 4); i > 0; --i) s += pick(rng, pieces);
  return s;
}

inline std::string randomLang(Rng& rng) {
  static const std::vector<std::string> langs = {"", "en", "en-GB", "EN", "sl", "de-AT"};
  return pick(rng, langs);
}

struct RandomOntologyOptions {
  std::size_t maxEntities = 50;
  double axiomDensity = 1.5;  // expected axioms per entity
};

// Random valid ontology: every axiom respects the kind rules of the model.
inline Ontology randomOntology(Rng& rng, const RandomOntologyOptions& opts = {}) {
  OntologyBuilder b;
  std::size_t total = uniform(rng, 0, opts.maxEntities);
  std::vector<Iri> classes, objectProps, dataProps, individuals;
  for (std::size_t i = 0; i < total; ++i) {
    switch (uniform(rng, 0, 9)) {
      case 0:
      case 1:
      case 2:
      case 3: classes.push_back(iri("C" + std::to_string(i))); b.addClass(classes.back()); break;
      case 4:
      case 5: objectProps.push_back(iri("op" + std::to_string(i))); b.addObjectProperty(objectProps.back()); break;
      case 6: dataProps.push_back(iri("dp" + std::to_string(i))); b.addDataProperty(dataProps.back()); break;
      default: individuals.push_back(iri("x" + std::to_string(i))); b.addIndividual(individuals.back());
    }
  }
  std::vector<Iri> entities = classes;
  entities.insert(entities.end(), objectProps.begin(), objectProps.end());
  entities.insert(entities.end(), dataProps.begin(), dataProps.end());
  entities.insert(entities.end(), individuals.begin(), individuals.end());
  if (entities.empty()) return b.build();

  std::vector<Iri> props = objectProps;
  props.insert(props.end(), dataProps.begin(), dataProps.end());
  auto literal = [&] { return Literal{randomText(rng), randomLang(rng), ""}; };

  std::size_t axioms = static_cast<std::size_t>(opts.axiomDensity * static_cast<double>(entities.size()));
  for (std::size_t k = uniform(rng, 0, axioms); k > 0; --k) {
    Axiom a;
    switch (uniform(rng, 0, 13)) {
      case 0:
      case 1:
        if (classes.empty()) continue;
        a = subClassOf(pick(rng, classes), pick(rng, classes));
        break;
      case 2:
        if (classes.empty()) continue;
        a = pairAxiom(chance(rng, 0.5) ? AxiomKind::DisjointClasses : AxiomKind::EquivalentClasses,
                      pick(rng, classes), pick(rng, classes));
        break;
      case 3: {
        if (props.empty()) continue;
        const auto& p = pick(rng, props);
        const auto& pool = std::find(objectProps.begin(), objectProps.end(), p) != objectProps.end() ? objectProps
                                                                                                      : dataProps;
        a = chance(rng, 0.8) ? subPropertyOf(p, pick(rng, pool)) : pairAxiom(AxiomKind::EquivalentProperties, p, pick(rng, pool));
        break;
      }
      case 4:
        if (objectProps.empty()) continue;
        a = pairAxiom(AxiomKind::InverseOf, pick(rng, objectProps), pick(rng, objectProps));
        break;
      case 5:
        if (props.empty() || classes.empty()) continue;
        a = domainOf(pick(rng, props), pick(rng, classes));
        break;
      case 6:
        if (objectProps.empty() || classes.empty()) continue;
        a = rangeOf(pick(rng, objectProps), pick(rng, classes));
        break;
      case 7:
        if (dataProps.empty()) continue;
        a = rangeOf(pick(rng, dataProps), Iri(vocab::xsd(chance(rng, 0.5) ? "string" : "integer")));
        break;
      case 8:
      case 9:
        if (individuals.empty() || classes.empty()) continue;
        a = typeAssertion(pick(rng, individuals), pick(rng, classes));
        break;
      case 10:
        if (individuals.empty()) continue;
        if (!objectProps.empty() && chance(rng, 0.6)) {
          a = propertyAssertion(pick(rng, individuals), pick(rng, objectProps), pick(rng, individuals));
        } else if (!dataProps.empty()) {
          Literal v = literal();
          if (chance(rng, 0.3)) v = Literal{std::to_string(uniform(rng, 0, 99)), "", vocab::xsd("integer")};
          a = propertyAssertion(pick(rng, individuals), pick(rng, dataProps), v);
        } else {
          continue;
        }
        break;
      case 11:
        if (classes.empty() || props.empty()) continue;
        a = cardinality(chance(rng, 0.5) ? AxiomKind::MinCardinality : AxiomKind::MaxCardinality,
                        pick(rng, classes), pick(rng, props), static_cast<unsigned>(uniform(rng, 0, 3)));
        break;
      default: {
        Literal v = literal();
        a = chance(rng, 0.5) ? label(pick(rng, entities), v.text, v.lang) : comment(pick(rng, entities), v.text, v.lang);
      }
    }
    b.add(a);
    if (chance(rng, 0.05)) b.add(a);  // duplicate occurrence
  }
  return b.build();
}

// Random condition tree: depth <= maxDepth, at most maxLeaves leaves, leaf
// check ids "leaf.<n>". Raw weights are returned keyed by node path, with a
// share of exact zeros.
struct RandomTree {
  ConditionTree tree;
  WeightProfile profile;
};

inline RandomTree randomTree(Rng& rng, std::size_t maxDepth = 4, std::size_t maxLeaves = 30) {
  RandomTree out;
  std::size_t leaves = 0;
  std::size_t counter = 0;
  // Each aggregate gets 1-4 children; the budget keeps the leaf count bounded.
  std::vector<std::pair<std::size_t, std::size_t>> frontier{{ConditionTree::root(), 0}};
  std::vector<std::size_t> aggregates;
  while (!frontier.empty()) {
    auto [node, depth] = frontier.back();
    frontier.pop_back();
    std::size_t children = uniform(rng, 1, 4);
    for (std::size_t c = 0; c < children; ++c) {
      bool leaf = depth + 1 >= maxDepth || leaves + frontier.size() + 1 >= maxLeaves || chance(rng, 0.45);
      std::string name = "n" + std::to_string(counter++);
      if (leaf) {
        out.tree.addLeaf(node, name, "leaf." + std::to_string(leaves++));
      } else {
        frontier.emplace_back(out.tree.addAggregate(node, name), depth + 1);
      }
    }
  }
  if (leaves > maxLeaves) return randomTree(rng, maxDepth, maxLeaves);
  out.profile.phase = Phase::BusinessVocabulary;
  for (const auto& n : out.tree.nodes()) {
    if (!n.parent) continue;
    double w = chance(rng, 0.1) ? 0.0 : std::uniform_real_distribution<double>(0.01, 5.0)(rng);
    out.profile.weights[n.path] = w;
  }
  // Guarantee each sibling group a positive weight.
  for (const auto& n : out.tree.nodes()) {
    if (n.children.empty()) continue;
    double sum = 0.0;
    for (auto c : n.children) sum += out.profile.weights[out.tree.node(c).path];
    if (sum == 0.0) out.profile.weights[out.tree.node(n.children.front()).path] = 1.0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Oracles

// Flat weighted sum: leaf weight recomputed from raw weights root-down.
inline double flatSumOracle(const ConditionTree& tree, const WeightProfile& profile,
                            const std::map<std::string, double>& scores) {
  double total = 0.0;
  for (const auto& n : tree.nodes()) {
    if (!n.isLeaf()) continue;
    double w = 1.0;
    const ConditionNode* cur = &n;
    while (cur->parent) {
      const auto& parent = tree.node(*cur->parent);
      double sum = 0.0;
      for (auto c : parent.children) sum += profile.raw(tree.node(c).path);
      w *= profile.raw(cur->path) / sum;
      cur = &parent;
    }
    total += w * scores.at(n.checkId);
  }
  return total;
}

// Boolean adjacency matrix of a digraph over node indices 0..n-1.
using Matrix = std::vector<std::vector<bool>>;

// Warshall closure: m[i][j] iff a path of >= 1 edges leads from i to j.
inline Matrix closureOracle(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  return m;
}

// Nodes on some directed cycle, by plain DFS from each node back to itself.
inline std::set<std::size_t> onCycleOracle(const Matrix& m) {
  const std::size_t n = m.size();
  std::set<std::size_t> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{s};
    bool back = false;
    while (!stack.empty() && !back) {
      auto v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w) {
        if (!m[v][w]) continue;
        if (w == s) {
          back = true;
          break;
        }
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    if (back) out.insert(s);
  }
  return out;
}

// Maximal bicliques (|L| >= minLeft, |R| >= minRight) by trying every pair
// of subsets and keeping the complete ones no single vertex can extend.
inline std::set<std::pair<std::set<std::size_t>, std::set<std::size_t>>> bicliqueOracle(
    std::size_t nl, std::size_t nr, const std::set<std::pair<std::size_t, std::size_t>>& edges,
    std::size_t minLeft = 2, std::size_t minRight = 2) {
  std::set<std::pair<std::set<std::size_t>, std::set<std::size_t>>> out;
  auto members = [](std::uint32_t mask, std::size_t n) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.insert(i);
    return s;
  };
  for (std::uint32_t lm = 1; lm < (1u << nl); ++lm) {
    auto L = members(lm, nl);
    if (L.size() < minLeft) continue;
    for (std::uint32_t rm = 1; rm < (1u << nr); ++rm) {
      auto R = members(rm, nr);
      if (R.size() < minRight) continue;
      bool complete = true;
      for (auto l : L)
        for (auto r : R)
          if (!edges.contains({l, r})) complete = false;
      if (!complete) continue;
      bool extendable = false;
      for (std::size_t l = 0; l < nl && !extendable; ++l) {
        if (L.contains(l)) continue;
        bool all = true;
        for (auto r : R) all = all && edges.contains({l, r});
        extendable = all;
      }
      for (std::size_t r = 0; r < nr && !extendable; ++r) {
        if (R.contains(r)) continue;
        bool all = true;
        for (auto l : L) all = all && edges.contains({l, r});
        extendable = all;
      }
      if (!extendable) out.emplace(L, R);
    }
  }
  return out;
}

// Sibling pairs and disjointness recommendations computed from raw parent
// links and type assertions.
struct DisjointOracleResult {
  std::set<std::pair<Iri, Iri>> siblings;
  std::set<std::pair<Iri, Iri>> recommended;
};

inline DisjointOracleResult disjointOracle(const std::vector<Iri>& classes,
                                           const std::vector<std::pair<Iri, Iri>>& subClassLinks,  // child, parent
                                           const std::vector<std::pair<Iri, Iri>>& types,         // individual, class
                                           const std::set<std::pair<Iri, Iri>>& asserted) {
  DisjointOracleResult out;
  for (const auto& parent : classes) {
    std::vector<Iri> children;
    for (const auto& [c, p] : subClassLinks)
      if (p == parent && std::find(children.begin(), children.end(), c) == children.end()) children.push_back(c);
    for (std::size_t i = 0; i < children.size(); ++i)
      for (std::size_t j = 0; j < children.size(); ++j)
        if (children[i] < children[j]) out.siblings.emplace(children[i], children[j]);
  }
  // Instances of C: individuals typed by some class whose ancestor set contains C.
  auto ancestorsOrSelf = [&](const Iri& c) {
    std::set<Iri> seen{c};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& [child, parent] : subClassLinks)
        if (seen.contains(child) && seen.insert(parent).second) grew = true;
    }
    return seen;
  };
  std::map<Iri, std::set<Iri>> extent;
  for (const auto& [x, c] : types)
    for (const auto& a : ancestorsOrSelf(c)) extent[a].insert(x);
  for (const auto& [a, b] : out.siblings) {
    const auto& ea = extent[a];
    const auto& eb = extent[b];
    if (ea.empty() || eb.empty()) continue;
    bool overlap = false;
    for (const auto& x : ea) overlap = overlap || eb.contains(x);
    if (overlap || asserted.contains({a, b}) || asserted.contains({b, a})) continue;
    out.recommended.emplace(a, b);
  }
  return out;
}

// Everything an evaluation produced, as one comparable string.
inline std::string fingerprint(const EvaluationResult& e) {
  nlohmann::ordered_json j;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", e.oc);
  j["oc"] = buf;
  for (const auto& n : e.nodes) {
    std::snprintf(buf, sizeof buf, "%.17g", n.price.value_or(-1.0));
    j["nodes"].push_back({n.path, buf});
  }
  for (const auto& [id, r] : e.leafResults) {
    std::snprintf(buf, sizeof buf, "%.17g", r.score);
    nlohmann::ordered_json findings = nlohmann::ordered_json::array();
    for (const auto& f : r.findings) {
      std::vector<std::string> subjects;
      for (const auto& s : f.subjects) subjects.push_back(s.str());
      findings.push_back({f.kind, subjects, f.suggestion, f.informational});
    }
    j["leaves"][id] = {buf, findings};
  }
  return j.dump();
}

// ---------------------------------------------------------------------------
// Minimal JSON-Schema subset validator: type, properties, required,
// additionalProperties (bool), items, enum, minimum, maximum, minItems.

inline bool schemaTypeMatches(const nlohmann::json& v, const std::string& type) {
  if (type == "object") return v.is_object();
  if (type == "array") return v.is_array();
  if (type == "string") return v.is_string();
  if (type == "number") return v.is_number();
  if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
  if (type == "boolean") return v.is_boolean();
  if (type == "null") return v.is_null();
  return false;
}

inline void validateSchema(const nlohmann::json& v, const nlohmann::json& schema, const std::string& at,
                           std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    bool ok = false;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) ok = ok || schemaTypeMatches(v, t.get<std::string>());
    } else {
      ok = schemaTypeMatches(v, schema["type"].get<std::string>());
    }
    if (!ok) {
      errors.push_back(at + ": type mismatch, expected " + schema["type"].dump());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == v;
    if (!found) errors.push_back(at + ": value " + v.dump() + " not in enum");
  }
  if (v.is_number()) {
    double d = v.get<double>();
    if (schema.contains("minimum") && d < schema["minimum"].get<double>()) errors.push_back(at + ": below minimum");
    if (schema.contains("maximum") && d > schema["maximum"].get<double>()) errors.push_back(at + ": above maximum");
  }
  if (v.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!v.contains(k.get<std::string>())) errors.push_back(at + ": missing key " + k.get<std::string>());
    const auto props = schema.value("properties", nlohmann::json::object());
    for (const auto& [k, child] : v.items()) {
      if (props.contains(k)) {
        validateSchema(child, props[k], at + "/" + k, errors);
      } else if (schema.contains("additionalProperties") && schema["additionalProperties"] == false) {
        errors.push_back(at + ": unexpected key " + k);
      }
    }
  }
  if (v.is_array()) {
    if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>())
      errors.push_back(at + ": too few items");
    if (schema.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i)
        validateSchema(v[i], schema["items"], at + "/" + std::to_string(i), errors);
  }
}

}  // namespace oceval::testing

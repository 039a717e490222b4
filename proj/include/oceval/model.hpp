#pragma once

// In-memory ontology snapshot: classes, properties, individuals and the
// asserted axiom multiset. Built once through OntologyBuilder, then read-only.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oceval {

class Iri {
 public:
  Iri() = default;
  explicit Iri(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const Iri&, const Iri&) = default;
  friend bool operator==(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

inline Iri operator""_iri(const char* s, std::size_t n) { return Iri(std::string(s, n)); }

enum class EntityKind { Class, ObjectProperty, DataProperty, Individual };

inline std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "class";
    case EntityKind::ObjectProperty: return "object property";
    case EntityKind::DataProperty: return "data property";
    case EntityKind::Individual: return "individual";
  }
  return "?";
}

inline bool isProperty(EntityKind kind) {
  return kind == EntityKind::ObjectProperty || kind == EntityKind::DataProperty;
}

struct Entity {
  Iri iri;
  EntityKind kind = EntityKind::Class;

  friend auto operator<=>(const Entity&, const Entity&) = default;
};

struct Individual {
  Iri iri;
  std::set<Iri> types;

  friend bool operator==(const Individual&, const Individual&) = default;
};

// Opaque literal: no datatype reasoning is performed.
struct Literal {
  std::string text;
  std::string lang;      // empty when untagged
  std::string datatype;  // full IRI, empty for plain literals

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

// Declaration order doubles as the serialization order.
enum class AxiomKind {
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  SubPropertyOf,
  EquivalentProperties,
  InverseOf,
  Domain,
  Range,
  TypeAssertion,
  PropertyAssertion,
  MinCardinality,
  MaxCardinality,
  Label,
  Comment,
};

inline std::string_view to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::EquivalentClasses: return "EquivalentClasses";
    case AxiomKind::DisjointClasses: return "DisjointClasses";
    case AxiomKind::SubPropertyOf: return "SubPropertyOf";
    case AxiomKind::EquivalentProperties: return "EquivalentProperties";
    case AxiomKind::InverseOf: return "InverseOf";
    case AxiomKind::Domain: return "Domain";
    case AxiomKind::Range: return "Range";
    case AxiomKind::TypeAssertion: return "TypeAssertion";
    case AxiomKind::PropertyAssertion: return "PropertyAssertion";
    case AxiomKind::MinCardinality: return "MinCardinality";
    case AxiomKind::MaxCardinality: return "MaxCardinality";
    case AxiomKind::Label: return "Label";
    case AxiomKind::Comment: return "Comment";
  }
  return "?";
}

// Pair axioms whose two sides are interchangeable; stored with subject <= object.
inline bool isSymmetric(AxiomKind kind) {
  return kind == AxiomKind::EquivalentClasses || kind == AxiomKind::DisjointClasses ||
         kind == AxiomKind::EquivalentProperties || kind == AxiomKind::InverseOf;
}

inline bool isHierarchy(AxiomKind kind) {
  return kind == AxiomKind::SubClassOf || kind == AxiomKind::SubPropertyOf ||
         kind == AxiomKind::TypeAssertion;
}

inline bool isAnnotation(AxiomKind kind) {
  return kind == AxiomKind::Label || kind == AxiomKind::Comment;
}

// Field usage by kind:
//   pair kinds, Domain, Range, TypeAssertion : subject, object
//   PropertyAssertion                        : subject, property, object | literal
//   Min/MaxCardinality                       : subject (class), property, cardinality
//   Label, Comment                           : subject, literal
struct Axiom {
  AxiomKind kind = AxiomKind::SubClassOf;
  Iri subject;
  Iri property;
  Iri object;
  std::optional<Literal> literal;
  std::optional<unsigned> cardinality;

  friend auto operator<=>(const Axiom&, const Axiom&) = default;
  friend bool operator==(const Axiom&, const Axiom&) = default;

  bool mentions(const Iri& iri) const {
    return subject == iri || object == iri || property == iri;
  }
};

inline Axiom normalized(Axiom axiom) {
  if (isSymmetric(axiom.kind) && axiom.object < axiom.subject) std::swap(axiom.subject, axiom.object);
  return axiom;
}

inline Axiom subClassOf(Iri sub, Iri super) {
  return {AxiomKind::SubClassOf, std::move(sub), {}, std::move(super), std::nullopt, std::nullopt};
}
inline Axiom subPropertyOf(Iri sub, Iri super) {
  return {AxiomKind::SubPropertyOf, std::move(sub), {}, std::move(super), std::nullopt, std::nullopt};
}
inline Axiom pairAxiom(AxiomKind kind, Iri a, Iri b) {
  return normalized({kind, std::move(a), {}, std::move(b), std::nullopt, std::nullopt});
}
inline Axiom domainOf(Iri property, Iri cls) {
  return {AxiomKind::Domain, std::move(property), {}, std::move(cls), std::nullopt, std::nullopt};
}
inline Axiom rangeOf(Iri property, Iri cls) {
  return {AxiomKind::Range, std::move(property), {}, std::move(cls), std::nullopt, std::nullopt};
}
inline Axiom typeAssertion(Iri individual, Iri cls) {
  return {AxiomKind::TypeAssertion, std::move(individual), {}, std::move(cls), std::nullopt,
          std::nullopt};
}
inline Axiom propertyAssertion(Iri subject, Iri property, Iri object) {
  return {AxiomKind::PropertyAssertion, std::move(subject), std::move(property), std::move(object),
          std::nullopt, std::nullopt};
}
inline Axiom propertyAssertion(Iri subject, Iri property, Literal value) {
  return {AxiomKind::PropertyAssertion, std::move(subject), std::move(property), {},
          std::move(value), std::nullopt};
}
inline Axiom cardinality(AxiomKind kind, Iri cls, Iri property, unsigned n) {
  return {kind, std::move(cls), std::move(property), {}, std::nullopt, n};
}
inline Axiom label(Iri subject, std::string text, std::string lang = "en") {
  return {AxiomKind::Label, std::move(subject), {}, {}, Literal{std::move(text), std::move(lang), {}},
          std::nullopt};
}
inline Axiom comment(Iri subject, std::string text, std::string lang = "en") {
  return {AxiomKind::Comment, std::move(subject), {}, {}, Literal{std::move(text), std::move(lang), {}},
          std::nullopt};
}

class LookupError : public std::out_of_range {
 public:
  explicit LookupError(const Iri& iri)
      : std::out_of_range("unknown IRI: " + iri.str()), iri_(iri) {}
  const Iri& iri() const { return iri_; }

 private:
  Iri iri_;
};

class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class InstanceMode { Direct, Inherited };

struct ElementCounts {
  std::size_t classes = 0;
  std::size_t properties = 0;
  std::size_t axioms = 0;
  std::size_t individuals = 0;

  friend bool operator==(const ElementCounts&, const ElementCounts&) = default;
};

class OntologyBuilder;

class Ontology {
 public:
  Ontology() = default;

  const std::set<Iri>& classes() const { return classes_; }
  const std::set<Iri>& objectProperties() const { return objectProperties_; }
  const std::set<Iri>& dataProperties() const { return dataProperties_; }
  const std::map<Iri, Individual>& individuals() const { return individuals_; }

  // Distinct axioms in sorted order.
  const std::vector<Axiom>& axioms() const { return axioms_; }

  // Extra occurrences beyond the first, for axioms asserted more than once.
  const std::map<Axiom, std::size_t>& duplicates() const { return duplicates_; }

  std::size_t occurrences(const Axiom& axiom) const {
    auto it = duplicates_.find(axiom);
    return 1 + (it == duplicates_.end() ? 0 : it->second);
  }

  std::vector<Iri> properties() const {
    std::vector<Iri> out(objectProperties_.begin(), objectProperties_.end());
    out.insert(out.end(), dataProperties_.begin(), dataProperties_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t propertyCount() const { return objectProperties_.size() + dataProperties_.size(); }

  std::vector<Entity> entities() const {
    std::vector<Entity> out;
    for (const auto& c : classes_) out.push_back({c, EntityKind::Class});
    for (const auto& p : objectProperties_) out.push_back({p, EntityKind::ObjectProperty});
    for (const auto& p : dataProperties_) out.push_back({p, EntityKind::DataProperty});
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<EntityKind> kindOf(const Iri& iri) const {
    if (classes_.contains(iri)) return EntityKind::Class;
    if (objectProperties_.contains(iri)) return EntityKind::ObjectProperty;
    if (dataProperties_.contains(iri)) return EntityKind::DataProperty;
    if (individuals_.contains(iri)) return EntityKind::Individual;
    return std::nullopt;
  }

  bool isDeclared(const Iri& iri) const { return kindOf(iri).has_value(); }
  bool isClass(const Iri& iri) const { return classes_.contains(iri); }
  bool isProperty(const Iri& iri) const {
    return objectProperties_.contains(iri) || dataProperties_.contains(iri);
  }

  ElementCounts counts() const {
    std::size_t total = axioms_.size();
    for (const auto& [axiom, extra] : duplicates_) total += extra;
    return {classes_.size(), propertyCount(), total, individuals_.size()};
  }

  // Axioms the IRI is the subject of; symmetric pair axioms count for both sides.
  std::vector<Axiom> assertedAxioms(const Iri& iri) const {
    return collect(iri, [](const Axiom&) { return true; });
  }

  // assertedAxioms without SubClassOf axioms.
  std::vector<Axiom> assertedAxiomsWithoutSubClass(const Iri& iri) const {
    return collect(iri, [](const Axiom& a) { return a.kind != AxiomKind::SubClassOf; });
  }

  std::vector<Axiom> axiomsOfKind(AxiomKind kind) const {
    std::vector<Axiom> out;
    auto [lo, hi] = kindRange(kind);
    out.assign(axioms_.begin() + lo, axioms_.begin() + hi);
    return out;
  }

  std::set<Iri> directSubClasses(const Iri& cls) const { return lookup(subClasses_, requireClass(cls)); }
  std::set<Iri> directSuperClasses(const Iri& cls) const {
    return lookup(superClasses_, requireClass(cls));
  }
  std::set<Iri> directSubProperties(const Iri& p) const {
    return lookup(subProperties_, requireProperty(p));
  }
  std::set<Iri> directSuperProperties(const Iri& p) const {
    return lookup(superProperties_, requireProperty(p));
  }

  // Transitive subclasses, excluding the class itself unless it lies on a cycle.
  std::set<Iri> allSubClasses(const Iri& cls) const { return closure(subClasses_, requireClass(cls)); }
  std::set<Iri> allSuperClasses(const Iri& cls) const {
    return closure(superClasses_, requireClass(cls));
  }

  std::set<Iri> instancesOf(const Iri& cls, InstanceMode mode) const {
    requireClass(cls);
    std::set<Iri> out = lookup(directInstances_, cls);
    if (mode == InstanceMode::Inherited) {
      for (const auto& sub : closure(subClasses_, cls)) {
        const auto& more = lookup(directInstances_, sub);
        out.insert(more.begin(), more.end());
      }
    }
    return out;
  }

  // Asserted types plus all their superclasses.
  std::set<Iri> inheritedTypes(const Iri& individual) const {
    auto it = individuals_.find(individual);
    if (it == individuals_.end()) throw LookupError(individual);
    std::set<Iri> out = it->second.types;
    for (const auto& t : it->second.types) {
      auto sup = closure(superClasses_, t);
      out.insert(sup.begin(), sup.end());
    }
    return out;
  }

  std::set<Iri> domainsOf(const Iri& p) const { return lookup(domains_, requireProperty(p)); }
  std::set<Iri> rangesOf(const Iri& p) const { return lookup(ranges_, requireProperty(p)); }

  bool areDisjoint(const Iri& a, const Iri& b) const {
    return disjointPairs_.contains(a < b ? std::pair{a, b} : std::pair{b, a});
  }
  const std::set<std::pair<Iri, Iri>>& disjointPairs() const { return disjointPairs_; }

  // PropertyAssertion axioms with this subject.
  std::vector<Axiom> assertionsAbout(const Iri& individual) const {
    std::vector<Axiom> out;
    for (std::size_t i : lookup(subjectIndex_, individual))
      if (axioms_[i].kind == AxiomKind::PropertyAssertion) out.push_back(axioms_[i]);
    return out;
  }

  std::size_t assertionCount(const Iri& property) const {
    auto it = assertionCounts_.find(property);
    return it == assertionCounts_.end() ? 0 : it->second;
  }

  friend bool operator==(const Ontology& a, const Ontology& b) {
    return a.classes_ == b.classes_ && a.objectProperties_ == b.objectProperties_ &&
           a.dataProperties_ == b.dataProperties_ && a.individuals_ == b.individuals_ &&
           a.axioms_ == b.axioms_ && a.duplicates_ == b.duplicates_;
  }

 private:
  friend class OntologyBuilder;

  template <class Pred>
  std::vector<Axiom> collect(const Iri& iri, Pred pred) const {
    if (!isDeclared(iri)) throw LookupError(iri);
    std::vector<Axiom> out;
    for (std::size_t i : lookup(subjectIndex_, iri))
      if (pred(axioms_[i])) out.push_back(axioms_[i]);
    return out;
  }

  const Iri& requireClass(const Iri& iri) const {
    if (!classes_.contains(iri)) throw LookupError(iri);
    return iri;
  }
  const Iri& requireProperty(const Iri& iri) const {
    if (!isProperty(iri)) throw LookupError(iri);
    return iri;
  }

  template <class V>
  static const V& lookup(const std::map<Iri, V>& index, const Iri& key) {
    static const V empty{};
    auto it = index.find(key);
    return it == index.end() ? empty : it->second;
  }

  static std::set<Iri> closure(const std::map<Iri, std::set<Iri>>& edges, const Iri& start) {
    std::set<Iri> seen;
    std::vector<Iri> stack(lookup(edges, start).begin(), lookup(edges, start).end());
    while (!stack.empty()) {
      Iri next = std::move(stack.back());
      stack.pop_back();
      if (!seen.insert(next).second) continue;
      for (const auto& n : lookup(edges, next))
        if (!seen.contains(n)) stack.push_back(n);
    }
    return seen;
  }

  std::pair<std::size_t, std::size_t> kindRange(AxiomKind kind) const {
    auto lo = std::partition_point(axioms_.begin(), axioms_.end(),
                                   [&](const Axiom& a) { return a.kind < kind; });
    auto hi = std::partition_point(lo, axioms_.end(), [&](const Axiom& a) { return a.kind == kind; });
    return {static_cast<std::size_t>(lo - axioms_.begin()),
            static_cast<std::size_t>(hi - axioms_.begin())};
  }

  void index();

  std::set<Iri> classes_;
  std::set<Iri> objectProperties_;
  std::set<Iri> dataProperties_;
  std::map<Iri, Individual> individuals_;
  std::vector<Axiom> axioms_;
  std::map<Axiom, std::size_t> duplicates_;

  // Derived indices.
  std::map<Iri, std::vector<std::size_t>> subjectIndex_;
  std::map<Iri, std::set<Iri>> subClasses_, superClasses_;
  std::map<Iri, std::set<Iri>> subProperties_, superProperties_;
  std::map<Iri, std::set<Iri>> directInstances_;
  std::map<Iri, std::set<Iri>> domains_, ranges_;
  std::map<Iri, std::size_t> assertionCounts_;
  std::set<std::pair<Iri, Iri>> disjointPairs_;
};

inline void Ontology::index() {
  for (std::size_t i = 0; i < axioms_.size(); ++i) {
    const Axiom& a = axioms_[i];
    subjectIndex_[a.subject].push_back(i);
    if (isSymmetric(a.kind) && a.object != a.subject) subjectIndex_[a.object].push_back(i);
    switch (a.kind) {
      case AxiomKind::SubClassOf:
        subClasses_[a.object].insert(a.subject);
        superClasses_[a.subject].insert(a.object);
        break;
      case AxiomKind::SubPropertyOf:
        subProperties_[a.object].insert(a.subject);
        superProperties_[a.subject].insert(a.object);
        break;
      case AxiomKind::TypeAssertion:
        directInstances_[a.object].insert(a.subject);
        individuals_[a.subject].types.insert(a.object);
        break;
      case AxiomKind::Domain: domains_[a.subject].insert(a.object); break;
      case AxiomKind::Range: ranges_[a.subject].insert(a.object); break;
      case AxiomKind::PropertyAssertion: ++assertionCounts_[a.property]; break;
      case AxiomKind::DisjointClasses: disjointPairs_.emplace(a.subject, a.object); break;
      default: break;
    }
  }
}

// Collects declarations and axioms, then validates and freezes them into an
// Ontology. Axioms are normalized on insert; repeats are counted.
class OntologyBuilder {
 public:
  OntologyBuilder& declare(const Iri& iri, EntityKind kind) {
    if (iri.empty()) throw ModelError("empty IRI");
    auto existing = declared_.find(iri);
    if (existing != declared_.end() && existing->second != kind)
      throw ModelError("IRI " + iri.str() + " declared as both " +
                       std::string(to_string(existing->second)) + " and " +
                       std::string(to_string(kind)));
    declared_[iri] = kind;
    return *this;
  }
  OntologyBuilder& addClass(const Iri& iri) { return declare(iri, EntityKind::Class); }
  OntologyBuilder& addObjectProperty(const Iri& iri) { return declare(iri, EntityKind::ObjectProperty); }
  OntologyBuilder& addDataProperty(const Iri& iri) { return declare(iri, EntityKind::DataProperty); }
  OntologyBuilder& addIndividual(const Iri& iri) { return declare(iri, EntityKind::Individual); }

  OntologyBuilder& add(Axiom axiom) {
    ++counts_[normalized(std::move(axiom))];
    return *this;
  }

  std::optional<EntityKind> kindOf(const Iri& iri) const {
    auto it = declared_.find(iri);
    if (it == declared_.end()) return std::nullopt;
    return it->second;
  }

  // Throws ModelError on the first violated invariant.
  Ontology build() const {
    Ontology o;
    for (const auto& [iri, kind] : declared_) {
      switch (kind) {
        case EntityKind::Class: o.classes_.insert(iri); break;
        case EntityKind::ObjectProperty: o.objectProperties_.insert(iri); break;
        case EntityKind::DataProperty: o.dataProperties_.insert(iri); break;
        case EntityKind::Individual: o.individuals_[iri] = Individual{iri, {}}; break;
      }
    }
    for (const auto& [axiom, count] : counts_) {
      validate(axiom);
      o.axioms_.push_back(axiom);
      if (count > 1) o.duplicates_[axiom] = count - 1;
    }
    o.index();
    return o;
  }

 private:
  void expect(const Axiom& a, const Iri& iri, std::initializer_list<EntityKind> kinds,
              std::string_view role) const {
    auto kind = kindOf(iri);
    if (!kind) throw ModelError(std::string(to_string(a.kind)) + ": undeclared " + std::string(role) +
                                " " + iri.str());
    for (auto k : kinds)
      if (*kind == k) return;
    throw ModelError(std::string(to_string(a.kind)) + ": " + iri.str() + " is a " +
                     std::string(to_string(*kind)) + ", not a valid " + std::string(role));
  }

  void validate(const Axiom& a) const {
    using K = EntityKind;
    switch (a.kind) {
      case AxiomKind::SubClassOf:
      case AxiomKind::EquivalentClasses:
      case AxiomKind::DisjointClasses:
        expect(a, a.subject, {K::Class}, "class");
        expect(a, a.object, {K::Class}, "class");
        break;
      case AxiomKind::SubPropertyOf:
      case AxiomKind::EquivalentProperties:
        expect(a, a.subject, {K::ObjectProperty, K::DataProperty}, "property");
        expect(a, a.object, {*kindOf(a.subject)}, "property of the same kind");
        break;
      case AxiomKind::InverseOf:
        expect(a, a.subject, {K::ObjectProperty}, "object property");
        expect(a, a.object, {K::ObjectProperty}, "object property");
        break;
      case AxiomKind::Domain:
        expect(a, a.subject, {K::ObjectProperty, K::DataProperty}, "property");
        expect(a, a.object, {K::Class}, "class");
        break;
      case AxiomKind::Range:
        expect(a, a.subject, {K::ObjectProperty, K::DataProperty}, "property");
        // Data property ranges name datatypes, which are not declared entities.
        if (kindOf(a.subject) == K::ObjectProperty) {
          expect(a, a.object, {K::Class}, "class");
        } else if (a.object.empty() || kindOf(a.object)) {
          throw ModelError("Range: invalid datatype for " + a.subject.str());
        }
        break;
      case AxiomKind::TypeAssertion:
        expect(a, a.subject, {K::Individual}, "individual");
        expect(a, a.object, {K::Class}, "class");
        break;
      case AxiomKind::PropertyAssertion:
        expect(a, a.subject, {K::Individual}, "individual");
        expect(a, a.property, {K::ObjectProperty, K::DataProperty}, "property");
        if (kindOf(a.property) == K::ObjectProperty) {
          if (a.literal) throw ModelError("PropertyAssertion: object property with literal value");
          expect(a, a.object, {K::Individual}, "individual");
        } else if (!a.literal) {
          throw ModelError("PropertyAssertion: data property without literal value");
        }
        break;
      case AxiomKind::MinCardinality:
      case AxiomKind::MaxCardinality:
        expect(a, a.subject, {K::Class}, "class");
        expect(a, a.property, {K::ObjectProperty, K::DataProperty}, "property");
        if (!a.cardinality) throw ModelError("cardinality axiom without value");
        break;
      case AxiomKind::Label:
      case AxiomKind::Comment:
        expect(a, a.subject, {K::Class, K::ObjectProperty, K::DataProperty, K::Individual},
               "entity");
        if (!a.literal) throw ModelError("annotation without literal");
        break;
    }
  }

  std::map<Iri, EntityKind> declared_;
  std::map<Axiom, std::size_t> counts_;
};

}  // namespace oceval

template <>
struct std::hash<oceval::Iri> {
  std::size_t operator()(const oceval::Iri& iri) const noexcept {
    return std::hash<std::string>{}(iri.str());
  }
};

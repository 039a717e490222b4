#pragma once

// Graph structures and algorithms used by the semantic checks. Everything is
// templated on the node type so tests can drive the algorithms with ints.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "oceval/model.hpp"

namespace oceval::graph {

template <class Node>
struct Digraph {
  std::set<Node> nodes;
  std::set<std::pair<Node, Node>> edges;

  void addNode(const Node& n) { nodes.insert(n); }
  void addEdge(const Node& from, const Node& to) {
    nodes.insert(from);
    nodes.insert(to);
    edges.emplace(from, to);
  }
};

template <class Node>
struct UndirectedGraph {
  std::set<Node> nodes;
  std::set<std::pair<Node, Node>> edges;  // stored with first <= second

  void addNode(const Node& n) { nodes.insert(n); }
  void addEdge(const Node& a, const Node& b) {
    nodes.insert(a);
    nodes.insert(b);
    edges.emplace(std::min(a, b), std::max(a, b));
  }
};

template <class Left, class Right>
struct BipartiteGraph {
  std::set<Left> left;
  std::set<Right> right;
  std::set<std::pair<Left, Right>> edges;

  void addEdge(const Left& l, const Right& r) {
    left.insert(l);
    right.insert(r);
    edges.emplace(l, r);
  }
  bool hasEdge(const Left& l, const Right& r) const { return edges.contains({l, r}); }
};

namespace detail {

// Dense index over a node set, so algorithms can work on adjacency vectors.
template <class Node>
struct Indexed {
  std::vector<Node> nodes;
  std::map<Node, std::size_t> index;
  std::vector<std::vector<std::size_t>> out;

  explicit Indexed(const Digraph<Node>& g) : nodes(g.nodes.begin(), g.nodes.end()) {
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
    out.resize(nodes.size());
    for (const auto& [a, b] : g.edges) out[index.at(a)].push_back(index.at(b));
  }
};

}  // namespace detail

// Strongly connected components in Tarjan order, iterative so deep
// hierarchies do not exhaust the stack.
template <class Node>
std::vector<std::set<Node>> stronglyConnectedComponents(const Digraph<Node>& g) {
  detail::Indexed<Node> ix(g);
  const std::size_t n = ix.nodes.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, kUnvisited), low(n, 0);
  std::vector<bool> onStack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::set<Node>> components;
  std::size_t counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    order[root] = low[root] = counter++;
    stack.push_back(root);
    onStack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < ix.out[f.node].size()) {
        std::size_t w = ix.out[f.node][f.next++];
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          onStack[w] = true;
          frames.push_back({w, 0});
        } else if (onStack[w]) {
          low[f.node] = std::min(low[f.node], order[w]);
        }
        continue;
      }
      std::size_t v = f.node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      if (low[v] == order[v]) {
        std::set<Node> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[w] = false;
          component.insert(ix.nodes[w]);
        } while (w != v);
        components.push_back(std::move(component));
      }
    }
  }
  return components;
}

// Node sets lying on a cycle: every SCC with two or more nodes, plus each
// self-loop node as a singleton. Sorted for determinism.
template <class Node>
std::vector<std::set<Node>> cycles(const Digraph<Node>& g) {
  std::vector<std::set<Node>> out;
  for (auto& scc : stronglyConnectedComponents(g)) {
    if (scc.size() >= 2) {
      out.push_back(std::move(scc));
    } else {
      const Node& only = *scc.begin();
      if (g.edges.contains({only, only})) out.push_back(std::move(scc));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Kahn's algorithm; nullopt when the graph has a cycle (including self-loops).
template <class Node>
std::optional<std::vector<Node>> topologicalSort(const Digraph<Node>& g) {
  detail::Indexed<Node> ix(g);
  std::vector<std::size_t> indegree(ix.nodes.size(), 0);
  for (const auto& targets : ix.out)
    for (auto t : targets) ++indegree[t];
  std::vector<std::size_t> ready;
  for (std::size_t i = ix.nodes.size(); i-- > 0;)
    if (indegree[i] == 0) ready.push_back(i);
  std::vector<Node> out;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    out.push_back(ix.nodes[v]);
    for (auto t : ix.out[v])
      if (--indegree[t] == 0) ready.push_back(t);
  }
  if (out.size() != ix.nodes.size()) return std::nullopt;
  return out;
}

// Transitive closure: (a, b) present iff a path of one or more edges leads from a to b.
template <class Node>
std::set<std::pair<Node, Node>> reachability(const Digraph<Node>& g) {
  detail::Indexed<Node> ix(g);
  std::set<std::pair<Node, Node>> out;
  std::vector<char> seen(ix.nodes.size());
  for (std::size_t s = 0; s < ix.nodes.size(); ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<std::size_t> stack(ix.out[s].begin(), ix.out[s].end());
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      if (seen[v]) continue;
      seen[v] = 1;
      out.emplace(ix.nodes[s], ix.nodes[v]);
      for (auto w : ix.out[v])
        if (!seen[w]) stack.push_back(w);
    }
  }
  return out;
}

// Whether `to` is reachable from `from` without using the edge (skipFrom, skipTo).
template <class Node>
bool reachableWithout(const Digraph<Node>& g, const Node& from, const Node& to, const Node& skipFrom,
                      const Node& skipTo) {
  std::map<Node, std::vector<Node>> adj;
  for (const auto& [a, b] : g.edges)
    if (!(a == skipFrom && b == skipTo)) adj[a].push_back(b);
  std::set<Node> seen;
  std::vector<Node> stack{from};
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& w : it->second) {
      if (w == to) return true;
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return false;
}

// Connected components, largest first; ties broken by smallest member.
template <class Node>
std::vector<std::set<Node>> connectedComponents(const UndirectedGraph<Node>& g) {
  std::vector<Node> nodes(g.nodes.begin(), g.nodes.end());
  std::map<Node, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : g.edges) {
    auto ra = find(index.at(a)), rb = find(index.at(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::set<Node>> groups;
  for (std::size_t i = 0; i < nodes.size(); ++i) groups[find(i)].insert(nodes[i]);
  std::vector<std::set<Node>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

template <class Left, class Right>
struct Biclique {
  std::set<Left> left;
  std::set<Right> right;

  friend auto operator<=>(const Biclique&, const Biclique&) = default;
};

struct BicliqueOptions {
  std::size_t minLeft = 2;
  std::size_t minRight = 2;
  // Bound on the number of distinct right-hand neighbourhood intersections
  // explored; 2^16 equals the full power set of 16 candidate properties.
  std::size_t maxCandidates = std::size_t{1} << 16;
};

class BicliqueLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximal bicliques (L, R) with |L| >= minLeft and |R| >= minRight.
//
// Every maximal biclique has R equal to the intersection of the
// neighbourhoods of its left vertices, so enumerating the intersection-closed
// family generated by the left neighbourhoods and pairing each set with its
// common neighbours yields exactly the maximal ones. Sets smaller than
// minRight are pruned early since intersecting only shrinks them.
template <class Left, class Right>
std::vector<Biclique<Left, Right>> enumerateMaximalBicliques(const BipartiteGraph<Left, Right>& g,
                                                             const BicliqueOptions& opts = {}) {
  std::map<Left, std::set<Right>> neighbours;
  for (const auto& [l, r] : g.edges) neighbours[l].insert(r);

  std::set<std::set<Right>> family;
  for (const auto& [l, adj] : neighbours) {
    if (adj.size() < opts.minRight) continue;
    std::vector<std::set<Right>> fresh;
    for (const auto& existing : family) {
      std::set<Right> meet;
      std::set_intersection(existing.begin(), existing.end(), adj.begin(), adj.end(),
                            std::inserter(meet, meet.end()));
      if (meet.size() >= opts.minRight) fresh.push_back(std::move(meet));
    }
    family.insert(adj);
    for (auto& s : fresh) family.insert(std::move(s));
    if (family.size() > opts.maxCandidates)
      throw BicliqueLimitExceeded("biclique search exceeded candidate limit");
  }

  std::vector<Biclique<Left, Right>> out;
  for (const auto& rightSet : family) {
    Biclique<Left, Right> b;
    b.right = rightSet;
    for (const auto& [l, adj] : neighbours)
      if (std::includes(adj.begin(), adj.end(), rightSet.begin(), rightSet.end())) b.left.insert(l);
    if (b.left.size() >= opts.minLeft) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Derived ontology graphs.

inline Digraph<Iri> classHierarchyGraph(const Ontology& o) {
  Digraph<Iri> g;
  for (const auto& c : o.classes()) g.addNode(c);
  for (const auto& a : o.axiomsOfKind(AxiomKind::SubClassOf)) g.addEdge(a.subject, a.object);
  return g;
}

inline Digraph<Iri> propertyHierarchyGraph(const Ontology& o) {
  Digraph<Iri> g;
  for (const auto& p : o.properties()) g.addNode(p);
  for (const auto& a : o.axiomsOfKind(AxiomKind::SubPropertyOf)) g.addEdge(a.subject, a.object);
  return g;
}

// Classes linked by subclass axioms, by object properties (domain to range),
// and by equivalence or disjointness axioms.
inline UndirectedGraph<Iri> conceptGraph(const Ontology& o) {
  UndirectedGraph<Iri> g;
  for (const auto& c : o.classes()) g.addNode(c);
  for (const auto& a : o.axioms()) {
    if (a.kind == AxiomKind::SubClassOf || a.kind == AxiomKind::EquivalentClasses ||
        a.kind == AxiomKind::DisjointClasses)
      g.addEdge(a.subject, a.object);
  }
  for (const auto& p : o.objectProperties()) {
    for (const auto& d : o.domainsOf(p))
      for (const auto& r : o.rangesOf(p)) g.addEdge(d, r);
  }
  return g;
}

// Class-property links: a property attaches to each class named as its domain.
inline BipartiteGraph<Iri, Iri> classPropertyGraph(const Ontology& o) {
  BipartiteGraph<Iri, Iri> g;
  for (const auto& a : o.axiomsOfKind(AxiomKind::Domain)) g.addEdge(a.object, a.subject);
  return g;
}

}  // namespace oceval::graph

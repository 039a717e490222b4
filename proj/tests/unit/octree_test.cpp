#include <gtest/gtest.h>

#include "test_support.hpp"

namespace oceval {
namespace {

using checks::LeafResult;

// Two-level tree: root -> {g1 -> {a, b}, c}.
ConditionTree smallTree() {
  ConditionTree t;
  auto g1 = t.addAggregate(ConditionTree::root(), "g1");
  t.addLeaf(g1, "a", "leaf.a");
  t.addLeaf(g1, "b", "leaf.b");
  t.addLeaf(ConditionTree::root(), "c", "leaf.c");
  return t;
}

auto scoresFn(std::map<std::string, double> scores) {
  return [scores](const std::string& id) { return LeafResult{id, scores.at(id), {}}; };
}

TEST(ConditionTree, PathsAndLookup) {
  auto t = smallTree();
  EXPECT_EQ(t.nodes().size(), 5u);
  ASSERT_TRUE(t.find("oc/g1/b"));
  EXPECT_EQ(t.node(*t.find("oc/g1/b")).checkId, "leaf.b");
  EXPECT_FALSE(t.find("oc/g2"));
  EXPECT_EQ(t.leaves().size(), 3u);
}

TEST(ConditionTree, RejectsMalformedStructure) {
  ConditionTree t;
  auto leaf = t.addLeaf(ConditionTree::root(), "x", "leaf.x");
  EXPECT_THROW(t.addLeaf(leaf, "y", "leaf.y"), std::invalid_argument);
  EXPECT_THROW(t.addLeaf(ConditionTree::root(), "z", "leaf.x"), std::invalid_argument);
  EXPECT_THROW(t.addLeaf(ConditionTree::root(), "x", "leaf.q"), std::invalid_argument);
  EXPECT_THROW(t.addAggregate(ConditionTree::root(), "a/b"), std::invalid_argument);
  EXPECT_THROW(t.addLeaf(ConditionTree::root(), "w", ""), std::invalid_argument);
  t.addAggregate(ConditionTree::root(), "empty");
  EXPECT_THROW(t.validate(), std::invalid_argument);
}

TEST(WeightProfile, ValidationErrors) {
  auto t = smallTree();
  EXPECT_THROW((WeightProfile{Phase::BusinessVocabulary, {{"oc/nope", 1.0}}}.validate(t)), ProfileError);
  EXPECT_THROW((WeightProfile{Phase::BusinessVocabulary, {{"oc/c", -0.2}}}.validate(t)), ProfileError);
  EXPECT_THROW((WeightProfile{Phase::BusinessVocabulary, {{"oc", 2.0}}}.validate(t)), ProfileError);
  EXPECT_THROW((WeightProfile{Phase::BusinessVocabulary, {{"oc/g1/a", 0.0}, {"oc/g1/b", 0.0}}}.validate(t)),
               ProfileError);
  EXPECT_NO_THROW((WeightProfile{Phase::BusinessVocabulary, {{"oc/g1/a", 0.0}}}.validate(t)));
}

TEST(Evaluate, ThreeLeafExample) {
  // Weights 0.5/0.3/0.2 under one parent, scores 1, 0.5, 0.
  ConditionTree t;
  t.addLeaf(ConditionTree::root(), "a", "leaf.a");
  t.addLeaf(ConditionTree::root(), "b", "leaf.b");
  t.addLeaf(ConditionTree::root(), "c", "leaf.c");
  WeightProfile p{Phase::TaxonomyDefinition, {{"oc/a", 0.5}, {"oc/b", 0.3}, {"oc/c", 0.2}}};
  auto r = evaluateWith(t, p, scoresFn({{"leaf.a", 1.0}, {"leaf.b", 0.5}, {"leaf.c", 0.0}}));
  EXPECT_NEAR(r.oc, 0.65, 1e-12);
  EXPECT_EQ(r.phase, Phase::TaxonomyDefinition);
}

TEST(Evaluate, NestedWeightsMultiply) {
  auto t = smallTree();
  WeightProfile p{Phase::BusinessVocabulary, {{"oc/g1", 3.0}, {"oc/c", 1.0}, {"oc/g1/a", 1.0}, {"oc/g1/b", 3.0}}};
  auto r = evaluateWith(t, p, scoresFn({{"leaf.a", 1.0}, {"leaf.b", 0.0}, {"leaf.c", 1.0}}));
  EXPECT_NEAR(r.oc, 0.75 * 0.25 + 0.25, 1e-12);
  auto w = r.relativeWeights();
  EXPECT_NEAR(w.at("oc/g1/a"), 0.1875, 1e-12);
  EXPECT_NEAR(w.at("oc/g1/b"), 0.5625, 1e-12);
  EXPECT_NEAR(w.at("oc/c"), 0.25, 1e-12);
  ASSERT_TRUE(r.node("oc/g1"));
  EXPECT_NEAR(*r.node("oc/g1")->price, 0.25, 1e-12);
}

TEST(Evaluate, ZeroWeightSubtreeIsNotExecuted) {
  auto t = smallTree();
  WeightProfile p{Phase::BusinessVocabulary, {{"oc/g1", 0.0}}};
  std::set<std::string> requested;
  auto r = evaluateWith(t, p, [&](const std::string& id) {
    requested.insert(id);
    return LeafResult{id, 0.4, {}};
  });
  EXPECT_EQ(requested, std::set<std::string>{"leaf.c"});
  EXPECT_NEAR(r.oc, 0.4, 1e-12);
  EXPECT_FALSE(r.node("oc/g1")->price);
  EXPECT_FALSE(r.node("oc/g1/a")->price);
  EXPECT_EQ(r.leafResults.size(), 1u);
}

TEST(Evaluate, RecursiveEqualsFlatSumOnRandomTrees) {
  testing::Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    auto [tree, profile] = testing::randomTree(rng);
    std::map<std::string, double> scores;
    for (auto leaf : tree.leaves())
      scores[tree.node(leaf).checkId] = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    auto r = evaluateWith(tree, profile, scoresFn(scores));
    EXPECT_NEAR(r.oc, testing::flatSumOracle(tree, profile, scores), 1e-9);
    double sum = 0.0;
    for (const auto& [path, w] : relativeWeights(tree, profile)) sum += w;
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(Evaluate, OcIsWithinUnitInterval) {
  testing::Rng rng(9);
  auto tree = defaultTree();
  auto profiles = builtinProfiles();
  for (int i = 0; i < 30; ++i) {
    auto o = testing::randomOntology(rng);
    for (const auto& [phase, profile] : profiles) {
      auto r = evaluate(tree, profile, o, {false});
      EXPECT_GE(r.oc, 0.0);
      EXPECT_LE(r.oc, 1.0);
    }
  }
}

TEST(Evaluate, ParallelMatchesSequential) {
  testing::Rng rng(10);
  auto tree = defaultTree();
  auto profiles = builtinProfiles();
  for (int i = 0; i < 20; ++i) {
    auto o = testing::randomOntology(rng);
    const auto& profile = profiles.at(kAllPhases[i % kAllPhases.size()]);
    auto a = evaluate(tree, profile, o, {true});
    auto b = evaluate(tree, profile, o, {false});
    EXPECT_EQ(testing::fingerprint(a), testing::fingerprint(b));
    EXPECT_EQ(a.counts, o.counts());
  }
}

TEST(DefaultTree, BindsEveryCheckOnce) {
  auto t = defaultTree();
  EXPECT_NO_THROW(t.validate());
  std::set<std::string> bound;
  for (auto leaf : t.leaves()) bound.insert(t.node(leaf).checkId);
  std::set<std::string> registered;
  for (const auto& c : checks::registry()) registered.insert(std::string(c.id));
  EXPECT_EQ(bound, registered);
}

TEST(BuiltinProfiles, CoverEveryPhaseAndValidate) {
  auto t = defaultTree();
  auto profiles = builtinProfiles();
  ASSERT_EQ(profiles.size(), kAllPhases.size());
  for (const auto& [phase, p] : profiles) {
    EXPECT_EQ(p.phase, phase);
    EXPECT_NO_THROW(p.validate(t));
    double total = 0.0;
    for (auto s : kSublevels) total += sublevelShare(t, p, s);
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(BuiltinProfiles, SublevelTrends) {
  auto t = defaultTree();
  auto p = builtinProfiles();
  auto share = [&](Phase ph, std::string_view s) { return sublevelShare(t, p.at(ph), s); };
  for (auto s : {"redundancy", "consistency", "anomaly"}) {
    EXPECT_EQ(share(Phase::BusinessVocabulary, s), 0.0) << s;
    EXPECT_EQ(share(Phase::ExampleEnumeration, s), 0.0) << s;
    EXPECT_GT(share(Phase::TaxonomyDefinition, s), 0.0) << s;
  }
  EXPECT_GT(share(Phase::DetailDescription, "redundancy"), share(Phase::BinaryRelations, "redundancy"));
  // Post-development ranks description, redundancy and anomaly above the rest.
  auto post = [&](std::string_view s) { return share(Phase::PostDevelopment, s); };
  for (auto top : {"description", "redundancy", "anomaly"})
    for (auto low : {"partition", "consistency"}) EXPECT_GT(post(top), post(low)) << top << " vs " << low;
}

TEST(Phase, ParseAndOrder) {
  EXPECT_EQ(parsePhase("2.3"), Phase::TaxonomyDefinition);
  EXPECT_EQ(parsePhase("taxonomy-definition"), Phase::TaxonomyDefinition);
  EXPECT_EQ(parsePhase("post"), Phase::PostDevelopment);
  EXPECT_FALSE(parsePhase("2.7"));
  EXPECT_EQ(nextPhase(Phase::DetailDescription), Phase::RestrictionsAndRules);
  EXPECT_FALSE(nextPhase(Phase::PostDevelopment));
  EXPECT_EQ(phaseLabel(Phase::RestrictionsAndRules), "2.6 restrictions-and-rules");
}

}  // namespace
}  // namespace oceval

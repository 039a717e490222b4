#include <gtest/gtest.h>

#include "test_support.hpp"

namespace oceval {
namespace {

using checks::LeafResult;

EvaluationResult randomEvaluation(testing::Rng& rng) {
  auto [tree, profile] = testing::randomTree(rng);
  std::map<std::string, double> scores;
  for (auto leaf : tree.leaves()) {
    double s = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (testing::chance(rng, 0.2)) s = 1.0;
    scores[tree.node(leaf).checkId] = s;
  }
  return evaluateWith(tree, profile, [&](const std::string& id) { return LeafResult{id, scores.at(id), {}}; });
}

TEST(Advisor, GainsSumToMissingCompleteness) {
  testing::Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    auto eval = randomEvaluation(rng);
    double sum = 0.0;
    for (const auto& a : recommendImprovements(eval)) sum += a.gain;
    EXPECT_NEAR(sum, (1.0 - eval.oc) * 100.0, 1e-6);
  }
}

TEST(Advisor, ActionGainIsWeightTimesShortfall) {
  testing::Rng rng(78);
  for (int i = 0; i < 50; ++i) {
    auto eval = randomEvaluation(rng);
    for (const auto& a : recommendImprovements(eval)) {
      const auto* node = eval.leafFor(a.checkId);
      ASSERT_NE(node, nullptr);
      double expected = node->relativeWeight * (1.0 - eval.leafScore(a.checkId));
      EXPECT_EQ(a.gain, expected * 100.0);
      EXPECT_NEAR(projectGain(eval, a.checkId) - eval.oc, expected, 1e-12);
    }
  }
}

TEST(Advisor, SortedByGainAndSkipsPerfectOrUnweighted) {
  ConditionTree t;
  t.addLeaf(ConditionTree::root(), "a", "leaf.a");
  t.addLeaf(ConditionTree::root(), "b", "leaf.b");
  t.addLeaf(ConditionTree::root(), "c", "leaf.c");
  t.addLeaf(ConditionTree::root(), "d", "leaf.d");
  WeightProfile p{Phase::BinaryRelations, {{"oc/a", 1}, {"oc/b", 2}, {"oc/c", 1}, {"oc/d", 0}}};
  std::map<std::string, double> s{{"leaf.a", 0.5}, {"leaf.b", 0.5}, {"leaf.c", 1.0}, {"leaf.d", 0.0}};
  auto eval = evaluateWith(t, p, [&](const std::string& id) { return LeafResult{id, s.at(id), {}}; });
  auto actions = recommendImprovements(eval);
  ASSERT_EQ(actions.size(), 2u);
  EXPECT_EQ(actions[0].checkId, "leaf.b");
  EXPECT_EQ(actions[1].checkId, "leaf.a");
  EXPECT_NEAR(actions[0].gain, 25.0, 1e-12);
  EXPECT_NEAR(actions[1].gain, 12.5, 1e-12);
  EXPECT_EQ(projectGain(eval, "leaf.c"), eval.oc);
  EXPECT_THROW(projectGain(eval, "leaf.zzz"), std::invalid_argument);
}

TEST(Advisor, ActionsCarryFindingsAndHeadlines) {
  auto eval = evaluate(defaultTree(), builtinProfiles().at(Phase::TaxonomyDefinition),
                       testing::chainBuilder().build());
  auto actions = recommendImprovements(eval);
  auto it = std::find_if(actions.begin(), actions.end(),
                         [](const auto& a) { return a.checkId == checks::ids::kChainOfInheritance; });
  ASSERT_NE(it, actions.end());
  EXPECT_EQ(it->description, "Collapse chains of inheritance");
  EXPECT_EQ(it->findings.size(), 1u);
}

TEST(Gate, ThresholdSemantics) {
  EXPECT_TRUE(gatePhase(0.913, Phase::DetailDescription).advance);
  EXPECT_EQ(gatePhase(0.913, Phase::DetailDescription).nextPhase, Phase::RestrictionsAndRules);
  EXPECT_FALSE(gatePhase(0.765, Phase::DetailDescription).advance);
  EXPECT_TRUE(gatePhase(0.80, Phase::DetailDescription).advance);
  EXPECT_FALSE(gatePhase(0.99, Phase::PostDevelopment).advance);
  EXPECT_TRUE(gatePhase(0.5, Phase::BusinessVocabulary, 0.5).advance);
  EXPECT_THROW(gatePhase(0.5, Phase::BusinessVocabulary, 0.0), std::invalid_argument);
  EXPECT_THROW(gatePhase(0.5, Phase::BusinessVocabulary, 1.5), std::invalid_argument);
}

TEST(Gate, FixturesHitTargetValues) {
  auto tree = defaultTree();
  auto profiles = loadProfiles(testing::dataPath("gate_profile.json"), tree);
  auto high = evaluate(tree, profiles.at(Phase::DetailDescription),
                       testing::parseOrThrow(testing::readText(testing::dataPath("gate_913.ttl"))));
  auto low = evaluate(tree, profiles.at(Phase::DetailDescription),
                      testing::parseOrThrow(testing::readText(testing::dataPath("gate_765.ttl"))));
  EXPECT_NEAR(high.oc, 0.913, 0.0005);
  EXPECT_NEAR(low.oc, 0.765, 0.0005);
  EXPECT_TRUE(gatePhase(high, Phase::DetailDescription).advance);
  EXPECT_FALSE(gatePhase(low, Phase::DetailDescription).advance);
}

TEST(Placement, ScansUntilFirstFailingPhase) {
  auto tree = defaultTree();
  auto profiles = builtinProfiles();
  auto o = testing::chainBuilder().build();
  auto placed = placePhaseDetailed(o, tree, profiles);
  ASSERT_FALSE(placed.scanned.empty());
  for (std::size_t i = 0; i + 1 < placed.scanned.size(); ++i) EXPECT_GE(placed.scanned[i].second, kDefaultThreshold);
  if (placed.phase != Phase::PostDevelopment) {
    EXPECT_EQ(placed.scanned.back().first, placed.phase);
    EXPECT_LT(placed.scanned.back().second, kDefaultThreshold);
  }
  for (const auto& [phase, oc] : placed.scanned)
    EXPECT_NEAR(oc, evaluate(tree, profiles.at(phase), o).oc, 1e-12);
  EXPECT_EQ(placePhase(Ontology{}, tree, profiles), Phase::BusinessVocabulary);
}

TEST(Placement, LowThresholdReachesPostDevelopment) {
  auto tree = defaultTree();
  auto placed = placePhaseDetailed(testing::chainBuilder().build(), tree, builtinProfiles(), 0.01);
  EXPECT_EQ(placed.phase, Phase::PostDevelopment);
  EXPECT_EQ(placed.scanned.size(), 6u);
}

}  // namespace
}  // namespace oceval

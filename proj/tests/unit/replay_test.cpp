#include <gtest/gtest.h>

#include "test_support.hpp"

namespace oceval {
namespace {

std::vector<ReplayRecord> libraryReplay() {
  return replay(loadSnapshots(testing::dataPath("replay12")), defaultTree(), builtinProfiles());
}

TEST(Replay, LoadsSnapshotsInNameOrder) {
  auto snapshots = loadSnapshots(testing::dataPath("replay12"));
  ASSERT_EQ(snapshots.size(), 12u);
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%02zu.ttl", i + 1);
    EXPECT_EQ(std::filesystem::path(snapshots[i].name).filename().string(), name);
    EXPECT_FALSE(snapshots[i].document.empty());
  }
  EXPECT_THROW(loadSnapshots(testing::dataPath("no_such_dir")), std::runtime_error);
}

TEST(Replay, CountsNeverDecrease) {
  auto records = libraryReplay();
  ASSERT_EQ(records.size(), 12u);
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto& a = records[i - 1].counts;
    const auto& b = records[i].counts;
    EXPECT_GE(b.classes, a.classes) << i;
    EXPECT_GE(b.properties, a.properties) << i;
    EXPECT_GE(b.axioms, a.axioms) << i;
    EXPECT_GE(b.individuals, a.individuals) << i;
  }
}

TEST(Replay, ScoreDropsRightAfterEachTransition) {
  auto records = libraryReplay();
  std::size_t transitions = 0;
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    if (!records[i].gateFired) continue;
    ++transitions;
    EXPECT_LT(records[i + 1].oc, records[i].oc) << "after iteration " << records[i].iteration;
    EXPECT_EQ(records[i + 1].phase, *nextPhase(records[i].phase));
  }
  EXPECT_GE(transitions, 2u);
}

TEST(Replay, PhaseOnlyMovesAfterGate) {
  auto records = libraryReplay();
  EXPECT_EQ(records.front().phase, Phase::BusinessVocabulary);
  for (std::size_t i = 0; i + 1 < records.size(); ++i) {
    EXPECT_EQ(records[i].gateFired, records[i].oc >= kDefaultThreshold && nextPhase(records[i].phase).has_value());
    if (!records[i].gateFired) {
      EXPECT_EQ(records[i + 1].phase, records[i].phase);
    }
  }
}

TEST(Replay, MatchesDirectEvaluation) {
  auto snapshots = loadSnapshots(testing::dataPath("replay12"));
  auto records = libraryReplay();
  auto tree = defaultTree();
  auto profiles = builtinProfiles();
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto eval = evaluate(tree, profiles.at(records[i].phase), testing::parseOrThrow(snapshots[i].document));
    EXPECT_EQ(eval.oc, records[i].oc);
    EXPECT_EQ(eval.counts, records[i].counts);
  }
}

TEST(Replay, CsvFormat) {
  std::vector<ReplayRecord> records{{1, Phase::BusinessVocabulary, 0.91234, {3, 1, 10, 0}, true},
                                    {2, Phase::ExampleEnumeration, 0.5, {4, 2, 12, 1}, false}};
  EXPECT_EQ(replayCsv(records),
            "iteration,phase,oc,classes,properties,axioms,individuals,gate_fired\n"
            "1,2.1,0.9123,3,1,10,0,true\n"
            "2,2.2,0.5000,4,2,12,1,false\n");
}

TEST(Replay, BadSnapshotReportsIteration) {
  std::vector<Snapshot> snapshots{{"a.ttl", testing::kPrelude + ":A a owl:Class ."},
                                  {"b.ttl", testing::kPrelude + ":A a owl:Class ;; ]"}};
  try {
    replay(snapshots, defaultTree(), builtinProfiles());
    FAIL() << "expected ReplayError";
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.iteration(), 2u);
    EXPECT_EQ(e.source(), "b.ttl");
    EXPECT_FALSE(e.diagnostics().empty());
    EXPECT_NE(std::string(e.what()).find("snapshot 2 (b.ttl) does not parse"), std::string::npos);
  }
}

TEST(Replay, EmptyInputGivesNoRecords) {
  EXPECT_TRUE(replay(std::vector<std::string>{}, defaultTree(), builtinProfiles()).empty());
}

}  // namespace
}  // namespace oceval

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace nclp;
using nlohmann::json;

namespace {

NCLPartition example_two() {
  return validate_ncl(12, {{1, 4, 6, 9}, {2, 3}, {4, 5}, {6, 7, 8}, {10, 11}, {11, 12}});
}

}  // namespace

TEST(Render, IsolatedPoints) { EXPECT_EQ(render_partition(NCPartition::zero(3)), "1   2   3\n"); }

TEST(Render, LinkedBlocksStepDown) {
  EXPECT_EQ(render_partition(validate_ncl(3, {{1, 2}, {2, 3}})),
            "+---+\n"
            "|   +---+\n"
            "1   2   3\n");
  EXPECT_EQ(render_partition(NCLPartition::one(3)),
            "+---+---+\n"
            "1   2   3\n");
}

TEST(Render, ExampleTwoTopology) {
  EXPECT_EQ(render_partition(example_two()),
            "+-----------+-------+-----------+   +---+\n"
            "|   +---+   +---+   +---+---+   |   |   +---+\n"
            "1   2   3   4   5   6   7   8   9   10  11  12\n");
}

TEST(Render, NestedBlocksSitLower) {
  EXPECT_EQ(render_partition(validate_nc(4, {{1, 4}, {2, 3}})),
            "+-----------+\n"
            "|   +---+   |\n"
            "1   2   3   4\n");
}

TEST(Render, BicolorChain) {
  const BicolorPlanarTree chain{{{solid, BicolorPlanarTree{{{dashed, {}}}}}}};
  EXPECT_EQ(render_tree(chain), "o\n|\no\n:\no\n");
}

TEST(Render, BusMarksColors) {
  const BicolorPlanarTree mixed{{{solid, {}}, {dashed, {}}}};
  EXPECT_EQ(render_tree(mixed), "o...\n|  :\no  o\n");
  EXPECT_EQ(render_tree(elementary_tree(3)), "o--+\n|  |\no  o\n");
}

TEST(Render, Deterministic) {
  for (const auto& b : enumerate_bicolor(4)) EXPECT_EQ(render_tree(b), render_tree(b));
}

TEST(Json, PartitionRoundtrip) {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& pi : enumerate_ncl(n)) {
      EXPECT_EQ(io::linked_partition_from_json(json::parse(io::to_json(pi).dump())), pi);
    }
    for (const auto& gamma : enumerate_nc(n)) EXPECT_EQ(io::partition_from_json(io::to_json(gamma)), gamma);
  }
  EXPECT_THROW(io::partition_from_json(json::parse(R"({"n":3})")), Error);
  EXPECT_THROW(io::partition_from_json(json::parse(R"({"n":4,"blocks":[[1,3],[2,4]]})")), Error);
}

TEST(Json, TreeRoundtrip) {
  for (const auto& t : enumerate_planar_trees(6)) {
    const json j = json::parse(io::to_json(t).dump());
    EXPECT_FALSE(io::has_colors(j) && vertex_count(t) > 1);
    EXPECT_EQ(io::planar_tree_from_json(j), t);
  }
  for (const auto& b : enumerate_bicolor(4)) {
    const json j = json::parse(io::to_json(b).dump());
    EXPECT_EQ(io::bicolor_tree_from_json(j), b);
  }
  EXPECT_THROW(io::bicolor_tree_from_json(json::parse(R"({"children":[{"color":0,"tree":{"children":[]}},
                                                          {"color":1,"tree":{"children":[]}}]})")),
               Error);
}

TEST(Json, SeriesRoundtrip) {
  for (const auto& v : random_corpus(3, 20, 6)) {
    const MomentSequence m(v);
    EXPECT_EQ(io::series_from_json(json::parse(io::to_json(m).dump())), v);
    EXPECT_EQ(io::rationals_from_json(io::rationals_to_json(v)), v);
  }
  EXPECT_EQ(io::series_from_json(json::parse(R"(["1", 2, "-3/6"])")), oracle::rationals({"1", "2", "-1/2"}));
  EXPECT_THROW(io::series_from_json(json::parse(R"({"order":3,"coeffs":["1"]})")), Error);
  EXPECT_THROW(io::series_from_json(json::parse(R"([1.5])")), Error);
}

TEST(Json, ScenarioRoundtrip) {
  const json in = json::parse(R"({"algebras": {"X": {"cumulants": ["1","1","1"]}, "Y": {"cumulants": ["2","1","0"]}}})");
  const Scenario s = io::scenario_from_json(in);
  EXPECT_EQ(io::to_json(s), in);
  EXPECT_EQ(s.generator("Y")[1], 2);
}

TEST(Json, ReportsSerialize) {
  const auto r = verify_t_multiplicativity(MomentSequence(oracle::rationals({"1", "2", "5"})),
                                           MomentSequence(oracle::rationals({"2", "5", "14"})), 3);
  const json j = io::to_json(r);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(j.at("t_via_cumulants"), json::parse(R"(["2","5/2","3/8"])"));
}

TEST(Verification, CountsSuitePasses) {
  const auto report = run_verification("counts");
  EXPECT_TRUE(report.passed());
  EXPECT_GE(report.entries.size(), 40u);
}

TEST(Verification, DeterministicForSeed) {
  VerifyOptions options;
  options.samples = 20;
  options.seed = 99;
  const auto a = to_json(run_verification("theorem", options)).dump();
  const auto b = to_json(run_verification("theorem", options)).dump();
  EXPECT_EQ(a, b);
}

TEST(Verification, EntriesSortedBySuiteThenParams) {
  VerifyOptions options;
  options.samples = 10;
  const auto report = run_verification("all", options);
  EXPECT_TRUE(report.passed());
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const auto& a = report.entries[i - 1];
    const auto& b = report.entries[i];
    EXPECT_TRUE(a.suite < b.suite || (a.suite == b.suite && a.params.dump() <= b.params.dump()));
  }
}

TEST(Verification, CorruptedKrewerasIsCaughtWithWitness) {
  VerifyOptions options;
  options.kreweras = [](const NCPartition& gamma) {
    const NCPartition k = kreweras(gamma);
    if (k.block_count() < 2) return k;
    auto blocks = k.blocks();
    blocks[0].insert(blocks[0].end(), blocks[1].begin(), blocks[1].end());
    std::sort(blocks[0].begin(), blocks[0].end());
    blocks.erase(blocks.begin() + 1);
    return NCPartition::canonical(k.size(), blocks);
  };
  const auto report = run_verification("kreweras", options);
  EXPECT_FALSE(report.passed());
  const auto failing = std::find_if(report.entries.begin(), report.entries.end(), [](auto& e) { return !e.pass; });
  ASSERT_NE(failing, report.entries.end());
  EXPECT_TRUE(failing->witness.contains("gamma"));
  EXPECT_TRUE(failing->witness.contains("kreweras"));
}

TEST(Verification, UnknownSuite) { EXPECT_THROW(run_verification("nope"), Error); }

TEST(Verification, CorpusShape) {
  const auto c = random_corpus(7, 200, 8);
  ASSERT_EQ(c.size(), 200u);
  for (const auto& v : c) {
    ASSERT_EQ(v.size(), 8u);
    EXPECT_NE(v[0], 0);
    for (const auto& x : v) {
      EXPECT_LE(abs(numerator(x)), 9);
      EXPECT_LE(denominator(x), 5);
    }
  }
  EXPECT_EQ(random_corpus(7, 5, 3), random_corpus(7, 5, 3));
  EXPECT_NE(random_corpus(7, 5, 3), random_corpus(8, 5, 3));
}

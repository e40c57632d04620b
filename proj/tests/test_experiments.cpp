#include <gtest/gtest.h>

#include "lpt/lpt.hpp"

using namespace lpt;

TEST(RunItems, MergesInIndexOrderForAnyThreadCount) {
    auto body = [](std::size_t i, ItemResult& item) {
        check_le("demo", static_cast<double>(i), 100.0, [] { return std::string(); });
        item.csv = std::to_string(i * i);
        if (i == 7) throw InputError("boom");
    };
    ExperimentOutcome one = run_items("demo", 20, 1, body);
    ExperimentOutcome four = run_items("demo", 20, 4, body);
    EXPECT_EQ(one.csv_rows, four.csv_rows);
    ASSERT_EQ(one.csv_rows.size(), 20u);
    EXPECT_EQ(one.csv_rows[3], "9");
    ASSERT_EQ(one.errors.size(), 1u);
    EXPECT_EQ(one.errors[0], "item 7: boom");
    EXPECT_EQ(one.log.summarize().at("demo").digest, four.log.summarize().at("demo").digest);
    EXPECT_FALSE(one.passed());
}

TEST(RunItems, FailedCheckIsRecordedNotThrown) {
    ExperimentOutcome out = run_items("demo", 3, 2, [](std::size_t i, ItemResult&) {
        check_le("demo", static_cast<double>(i), 1.0, [] { return std::string("w"); });
    });
    EXPECT_EQ(out.log.failures(), 1u);
    EXPECT_TRUE(out.errors.empty());
}

TEST(Sweep, SmallOrdersPassBothKinds) {
    for (Kind kind : {Kind::Path, Kind::Cycle}) {
        SweepOptions opt;
        opt.kind = kind;
        opt.max_order = 5;
        ExperimentOutcome out = sweep_exhaustive(opt);
        EXPECT_TRUE(out.passed()) << to_string(kind);
        const std::size_t expected = kind == Kind::Path ? 1 + 2 + 6 + 21 : 1 + 3 + 10;
        EXPECT_EQ(out.csv_rows.size(), expected);
        EXPECT_EQ(out.log.summarize().at("sweep.certificate").count, expected);
    }
}

TEST(Sweep, CsvRowShape) {
    SweepOptions opt;
    opt.min_order = 3;
    opt.max_order = 3;
    ExperimentOutcome out = sweep_exhaustive(opt);
    ASSERT_EQ(out.csv_rows.size(), 2u);
    for (const auto& row : out.csv_rows) EXPECT_EQ(std::count(row.begin(), row.end(), ','), 10);
    // P3 and K3 both have a common vertex on every longest path.
    EXPECT_NE(out.csv_rows[0].find(",single-vertex,"), std::string::npos);
}

TEST(Sweep, ForcedConstructionReachesSociety) {
    SweepOptions opt;
    opt.kind = Kind::Cycle;
    opt.max_order = 5;
    opt.force_construction = true;
    ExperimentOutcome out = sweep_exhaustive(opt);
    EXPECT_GT(out.summary["case2_runs"].get<int>(), 0);
    EXPECT_GT(out.log.summarize().count("case2.adhesion"), 0u);
}

TEST(Experiments, MatchingOracleOnSmallInstances) {
    ExperimentOutcome out = matching_experiment(3, 30, 10, 10, 2);
    EXPECT_TRUE(out.passed());
    EXPECT_EQ(out.log.summarize().at("matching.oracle").count, 30u);
}

TEST(Experiments, MatchingOracleExamples) {
    // Two parallel paths with three rungs: a zigzag path uses every rung.
    MatchingInstance inst = make_matching_instance(Path{{0, 1, 2}}, Path{{3, 4, 5}}, {{0, 3}, {1, 4}, {2, 5}});
    EXPECT_EQ(matching_path_oracle(inst), 3);
}

TEST(Experiments, CubicAgainstOracle) {
    ExperimentOutcome out = cubic_experiment(5, 20, 14, 2);
    EXPECT_TRUE(out.passed());
    EXPECT_EQ(out.log.summarize().at("cubic.oracle").count, 20u);
}

TEST(Experiments, DistantPairsSmall) {
    ExperimentOutcome out = distant_pairs_experiment(8, 3, 5);
    EXPECT_TRUE(out.passed());
    EXPECT_GT(out.summary["placements"].get<long long>(), 100);
    EXPECT_EQ(out.summary["extremal_sums"]["3"].get<long long>(), 5);
}

TEST(Experiments, InequalityChunks) {
    ExperimentOutcome out = inequality_experiment(9, 2500, 3);
    EXPECT_TRUE(out.passed());
    EXPECT_EQ(out.log.summarize().at("inequality").count, 2500u);
}

TEST(Experiments, DecompositionSmall) {
    ExperimentOutcome out = decomposition_experiment(11, 10, 12, 10, 10, 2);
    EXPECT_TRUE(out.passed());
    EXPECT_EQ(out.log.summarize().at("tutte.valid").count, 10u);
    EXPECT_EQ(out.log.summarize().at("linear.adhesion").count, 10u);
}

TEST(Experiments, VtCorpusSmall) {
    auto corpus = vt_corpus(8);
    EXPECT_EQ(corpus.back().name, "petersen");
    ExperimentOutcome out = vt_experiment(corpus, 2);
    EXPECT_TRUE(out.passed());
    EXPECT_EQ(out.items.size(), corpus.size());
}

TEST(Report, RoundTripAndSchema) {
    RunReport rep;
    rep.command = "demo";
    merge_outcome(rep, inequality_experiment(1, 10));
    const std::string text = dump_report(rep);
    auto j = parse_report(text);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["result"]["inequality"]["samples"].get<int>(), 10);
    EXPECT_THROW(parse_report("{\"schema\":\"other\"}"), InputError);
    EXPECT_THROW(parse_report("not json"), InputError);
}

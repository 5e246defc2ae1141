// The inequality-check registry: per-check evaluation, instance generation,
// randomized campaigns, the exhaustive small-group sweep, and the prime
// comparison table.

#include <gtest/gtest.h>

#include "unicov/constructions.hpp"
#include "unicov/verify.hpp"

using namespace unicov;

TEST(Registry, ThirtyChecksRegistered) {
  const auto ids = all_check_ids();
  ASSERT_EQ(ids.size(), 30u);
  EXPECT_EQ(ids.front(), "V01");
  EXPECT_EQ(ids.back(), "V30");
  for (const std::string& id : ids) {
    EXPECT_NO_THROW(find_check(id));
  }
  EXPECT_THROW(find_check("V31"), std::invalid_argument);
  EXPECT_THROW(find_check("bogus"), std::invalid_argument);
}

TEST(Registry, EvaluatorErrorsBecomeFailedResults) {
  // malformed instance: the evaluator throws, run_check reports a failure
  const CheckResult r = run_check("V01", Json::object());
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.skipped);
  EXPECT_NE(r.note.find("exception"), std::string::npos);
}

TEST(Registry, InstanceGenerationIsDeterministic) {
  for (const std::string& id : all_check_ids()) {
    Rng r1(12345);
    Rng r2(12345);
    EXPECT_EQ(make_instance(id, r1).dump(), make_instance(id, r2).dump())
        << id;
  }
}

TEST(Registry, SkipAccounting) {
  // V28 demands |A| >= 2 and a density premise
  const CheckResult tiny =
      run_check("V28", Json{{"group", "Z7"}, {"a", Json::array({1})}});
  EXPECT_TRUE(tiny.skipped);
  const CheckResult sparse =
      run_check("V28", Json{{"group", "Z11"}, {"a", Json::array({1, 2})}});
  EXPECT_TRUE(sparse.skipped);  // (11-3)*2 = 16 <= 22
  const CheckResult dense = run_check(
      "V28", Json{{"group", "Z11"}, {"a", Json::array({1, 2, 3, 5, 7, 8})}});
  EXPECT_FALSE(dense.skipped);
  EXPECT_TRUE(dense.holds);
}

TEST(Campaign, SmallRunPassesEverything) {
  const CampaignReport rep = run_campaign(all_check_ids(), 40, 1, 4);
  EXPECT_EQ(rep.failed, 0u);
  EXPECT_EQ(rep.evaluated, 30u * 40u);
  EXPECT_EQ(rep.passed + rep.skipped, rep.evaluated);
  // every check produced at least one non-skipped verdict at this size
  for (const std::string& id : all_check_ids()) {
    const CheckTally& t = rep.per_check.at(id);
    EXPECT_GT(t.passed + t.failed, 0u) << id << " always skipped";
    EXPECT_EQ(t.failed, 0u) << id;
    EXPECT_EQ(t.passed + t.failed + t.skipped, 40u) << id;
  }
  EXPECT_TRUE(rep.failures.empty());
}

TEST(Campaign, DeterministicAcrossParallelism) {
  const std::vector<std::string> ids = {"V01", "V04", "V07", "V10", "V23"};
  const CampaignReport serial = run_campaign(ids, 25, 99, 1);
  const CampaignReport threaded = run_campaign(ids, 25, 99, 8);
  Json a = campaign_to_json(serial);
  Json b = campaign_to_json(threaded);
  a.erase("wall_seconds");
  b.erase("wall_seconds");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Campaign, SubsetRunsOnlyRequestedChecks) {
  const CampaignReport rep = run_campaign({"V02", "V17"}, 10, 5, 1);
  EXPECT_EQ(rep.per_check.size(), 2u);
  EXPECT_EQ(rep.evaluated, 20u);
  EXPECT_THROW(run_campaign({"V99"}, 5, 0, 1), std::invalid_argument);
}

TEST(ExhaustiveCore, FrozenCountsOnZ8) {
  const CampaignReport rep = run_exhaustive_core(parse_group("Z8"));
  EXPECT_EQ(rep.failed, 0u);
  EXPECT_EQ(rep.skipped, 0u);
  // 254 proper nonempty masks, each: V02 + V03 + 36 V09 pairs + V23 + V26
  EXPECT_EQ(rep.evaluated, 254u * 40u);
  EXPECT_EQ(rep.suite, "core");
}

TEST(ExhaustiveCore, MinimalGroupAndBounds) {
  const CampaignReport z2 = run_exhaustive_core(parse_group("Z2"));
  EXPECT_EQ(z2.failed, 0u);
  // two singleton masks x (V02+V03+V09+V23+V26) = 2 * 7... V09 pairs: with
  // |G|=2 there are 3 unordered shift pairs; total per mask = 2+3+2 = 7
  EXPECT_EQ(z2.evaluated, 14u);
  EXPECT_THROW(run_exhaustive_core(parse_group("Z16")), std::invalid_argument);
  EXPECT_THROW(run_exhaustive_core(parse_group("Z1")), std::invalid_argument);
}

TEST(ExhaustiveCore, ProductGroupSweep) {
  const CampaignReport rep = run_exhaustive_core(parse_group("Z2^3"));
  EXPECT_EQ(rep.failed, 0u);
  EXPECT_EQ(rep.skipped, 0u);
}

TEST(DensityRanges, MultCoverLogBarrier) {
  // cov_mult of the complement of A-A, against the log-density floor,
  // exhaustively over small primes and |A| in {2,3}
  for (const std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    const Group g = make_group({static_cast<std::uint32_t>(p)});
    std::vector<Elem> elems(p);
    for (Elem i = 0; i < p; ++i) elems[i] = i;
    for (Elem i = 0; i < p; ++i) {
      for (Elem j = i + 1; j < p; ++j) {
        const CheckResult r2 = run_check(
            "V30", Json{{"group", group_to_string(g)},
                        {"a", Json::array({i, j})}});
        ASSERT_TRUE(r2.holds || r2.skipped) << r2.note;
        for (Elem k = j + 1; k < p; ++k) {
          const CheckResult r3 = run_check(
              "V30", Json{{"group", group_to_string(g)},
                          {"a", Json::array({i, j, k})}});
          ASSERT_TRUE(r3.holds || r3.skipped) << r3.note;
        }
      }
    }
  }
}

TEST(Table, StructureAndAssertions) {
  const TableReport rep =
      table_experiment({11}, {"random", "qr", "interval"}, 3);
  // 8 derived sets x 2 operations x 3 families
  EXPECT_EQ(rep.rows.size(), 48u);
  std::uint64_t asserted = 0;
  for (const TableRow& row : rep.rows) {
    EXPECT_EQ(row.p, 11u);
    EXPECT_TRUE(row.op == "+" || row.op == "x");
    if (row.asserted) {
      ++asserted;
      EXPECT_TRUE(row.holds) << row.family << " " << row.set_label;
      EXPECT_EQ(row.op, "+");
    }
  }
  EXPECT_EQ(asserted, 6u);  // two asserted cells per family
  EXPECT_TRUE(rep.all_asserted_hold);
  EXPECT_EQ(rep.seed, 3u);
}

TEST(Table, CsvShape) {
  const TableReport rep = table_experiment({11}, {"qr"}, 0);
  const std::string csv = table_to_csv(rep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "p,family,set,op,value,optimal,predicted_class,asserted,holds,note");
  // header + 16 rows
  std::uint64_t lines = 0;
  for (char c : csv) lines += c == '\n';
  EXPECT_EQ(lines, 17u);
}

TEST(Table, RejectsBadInputs) {
  EXPECT_THROW(table_experiment({9}, {"qr"}, 0), std::invalid_argument);
  EXPECT_THROW(table_experiment({3}, {"qr"}, 0), std::invalid_argument);
  EXPECT_THROW(table_experiment({11}, {"mystery"}, 0), std::invalid_argument);
}

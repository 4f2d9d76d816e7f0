// Copyright 2026 The cloudmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "cloudmatch/catalog.hpp"
#include "cloudmatch/codec.hpp"
#include "cloudmatch/errors.hpp"
#include "cloudmatch/recommend.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ranking.hpp"
#include "test_util.hpp"

namespace cloudmatch {
namespace {

UsageScenario Scenario(const std::string& name) {
  return DecodeScenario(nlohmann::json::parse(cmtest::ReadFixture("scenarios/" + name + ".json")));
}

TEST(Recommend, PersistentStorageNeedsAttachableOffer) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("ec2_attach.json"));
  const auto recs = Recommend(c, Scenario("persistent_5gb"));
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].compute_id, "ec2-micro");
  EXPECT_EQ(*recs[0].storage_id, "ebs");
  EXPECT_EQ(recs[0].rank, 1u);
  EXPECT_TRUE(Recommend(c, Scenario("persistent_2048gb")).empty());
}

TEST(Recommend, InfeasibleIsEmpty) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("provider_catalog.json"));
  EXPECT_TRUE(Recommend(c, Scenario("infeasible")).empty());
}

TEST(Recommend, AllZeroCostsNothing) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("provider_catalog.json"));
  UsageScenario s = Scenario("all_zero");
  s.currency = "USD";
  const auto recs = Recommend(c, s, kUnboundedTopK);
  ASSERT_FALSE(recs.empty());
  for (const auto& r : recs) EXPECT_EQ(r.quote.breakdown.total, 0.0);
}

TEST(Recommend, MixedCurrencies) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("provider_catalog.json"));
  EXPECT_THROW(Recommend(c, Scenario("all_zero")), CurrencyError);
  UsageScenario s = Scenario("all_zero");
  s.currency = "AUD";
  for (const auto& r : Recommend(c, s, kUnboundedTopK)) EXPECT_EQ(r.quote.breakdown.currency, "AUD");
}

TEST(Recommend, TopK) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("provider_catalog.json"));
  const UsageScenario s = Scenario("web_app");
  EXPECT_THROW(Recommend(c, s, 0), QueryError);
  const auto all = Recommend(c, s, kUnboundedTopK);
  const auto two = Recommend(c, s, 2);
  ASSERT_GE(all.size(), 2u);
  ASSERT_EQ(two.size(), 2u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].rank, i + 1);
    if (i > 0) EXPECT_LE(all[i - 1].quote.breakdown.total, all[i].quote.breakdown.total);
    EXPECT_EQ(all[i].catalog_version, c.version);
  }
  EXPECT_EQ(two[1].compute_id, all[1].compute_id);
}

TEST(Recommend, PersistentWithoutSize) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("ec2_attach.json"));
  UsageScenario s;
  s.persistent_storage_required = true;
  EXPECT_THROW(Recommend(c, s), QueryError);
}

TEST(Recommend, MatchesOracle) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 120; ++iter) {
    cmtest::GLimits limits;
    limits.max_per_kind = 8;
    limits.mixed_currency = iter % 5 == 0;
    const auto gen = cmtest::RandomCatalog(rng, limits);
    const auto scenario_gen = cmtest::RandomScenario(rng, gen);
    const Catalog c = LoadCatalog(gen.ToJson().dump());
    const UsageScenario s = DecodeScenario(scenario_gen.ToJson());
    const auto expected = cmtest::OracleRecommend(gen, scenario_gen);
    if (expected.currency_conflict) {
      EXPECT_THROW(Recommend(c, s, kUnboundedTopK), CurrencyError) << "iteration " << iter;
      continue;
    }
    const auto diff = cmtest::RankingDiff(Recommend(c, s, kUnboundedTopK), expected);
    ASSERT_EQ(diff, "") << "iteration " << iter << " scenario " << scenario_gen.ToJson().dump();
  }
}

}  // namespace
}  // namespace cloudmatch

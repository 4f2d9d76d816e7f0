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

#include <algorithm>
#include <set>

#include "cloudmatch/catalog.hpp"
#include "cloudmatch/codec.hpp"
#include "cloudmatch/validation.hpp"
#include "expectations.hpp"
#include "test_util.hpp"

namespace cloudmatch {
namespace {

ComputeOffer GoodCompute() {
  ComputeOffer c;
  c.id = "good";
  c.provider = "Acme";
  c.name = "Good";
  c.locations = {*ParseLocation("Europe")};
  PricePlan plan;
  plan.cost_per_period = *ParsePriceUnit("USD/hour", 0.1);
  c.plans = {plan};
  return c;
}

StorageOffer GoodStorage() {
  StorageOffer s;
  s.id = "store";
  s.provider = "Acme";
  s.size_max = {10, Unit::GB};
  s.locations = {*ParseLocation("Europe")};
  PricePlan plan;
  plan.billing_unit = BillingUnit::PerGbMonth;
  plan.period_length = {1, Unit::Month};
  plan.cost_per_period = *ParsePriceUnit("USD/GB-month", 0.1);
  s.plans = {plan};
  return s;
}

bool Has(const ValidationReport& report, std::string_view constraint) {
  return std::any_of(report.begin(), report.end(), [&](const Violation& v) { return v.constraint == constraint; });
}

TEST(ConfigurationParameters, FifteenSymbols) {
  std::set<std::string_view> symbols;
  for (const auto& binding : ConfigurationParameters()) symbols.insert(binding.symbol);
  EXPECT_EQ(symbols.size(), 15u);
  for (const auto& c : cmtest::kInvalidCorpus) EXPECT_TRUE(symbols.count(c.symbol)) << c.symbol;
}

TEST(ValidateOffer, GoodOffersPass) {
  EXPECT_TRUE(ValidateOffer(GoodCompute()).empty());
  EXPECT_TRUE(ValidateOffer(GoodStorage()).empty());
}

TEST(ValidateOffer, InvalidCorpusOneViolationEach) {
  const CatalogDocument doc = DecodeCatalogDocument(cmtest::ReadFixture("invalid_offers.json"));
  std::vector<DecodedOffer> all = doc.compute;
  all.insert(all.end(), doc.storage.begin(), doc.storage.end());
  all.insert(all.end(), doc.network.begin(), doc.network.end());
  ASSERT_EQ(all.size(), cmtest::kInvalidCorpus.size());
  for (const auto& expected : cmtest::kInvalidCorpus) {
    const auto it = std::find_if(all.begin(), all.end(),
                                 [&](const DecodedOffer& d) { return IdOf(d.offer) == expected.offer_id; });
    ASSERT_NE(it, all.end()) << expected.offer_id;
    ValidationReport report = it->schema_violations;
    const ValidationReport semantic = ValidateOffer(it->offer);
    report.insert(report.end(), semantic.begin(), semantic.end());
    ASSERT_EQ(report.size(), 1u) << expected.offer_id;
    EXPECT_EQ(report[0].field, expected.field);
    EXPECT_EQ(report[0].constraint, expected.constraint);
  }
}

TEST(ValidateOffer, StructuralRules) {
  ComputeOffer c = GoodCompute();
  c.plans[0].plan_type = PlanType::Prepaid;
  c.plans[0].cost_per_period = *ParsePriceUnit("USD", 10);
  const auto prepaid = ValidateOffer(c);
  EXPECT_TRUE(Has(prepaid, "Prepaid requires hasCapacity"));
  EXPECT_TRUE(Has(prepaid, "Prepaid requires CostOverLimit"));

  c = GoodCompute();
  c.plans[0].billing_unit = BillingUnit::PerGbMonth;
  EXPECT_TRUE(Has(ValidateOffer(c), "billingUnit in {PerHour, PerRamHour}"));

  c = GoodCompute();
  c.plans.clear();
  EXPECT_TRUE(Has(ValidateOffer(c), "at least one price plan"));

  c = GoodCompute();
  RegionalPrice rp{{*ParseLocation("Europe")}, *ParsePriceUnit("USD/hour", 0.2)};
  c.plans[0].regional_prices = {rp, rp};
  EXPECT_TRUE(Has(ValidateOffer(c), "regionalPrices locations unique"));

  c = GoodCompute();
  c.plans[0].cost_per_period.currency = "EUR";
  c.plans.push_back(GoodCompute().plans[0]);
  EXPECT_TRUE(Has(ValidateOffer(c), "single currency per offer (EUR)"));

  StorageOffer s = GoodStorage();
  s.size_min = {20, Unit::GB};
  EXPECT_TRUE(Has(ValidateOffer(s), "StorageSizeMin <= StorageSizeMax"));
  s = GoodStorage();
  s.size_min = {512, Unit::MB};
  s.size_max = {1, Unit::GB};
  EXPECT_TRUE(ValidateOffer(s).empty());

  s = GoodStorage();
  s.attachable_to = {"ec2-*"};
  EXPECT_TRUE(Has(ValidateOffer(s), "attachableTo requires NetworkStorage or BlockStorage"));
  s.kind = StorageKind::BlockStorage;
  EXPECT_TRUE(ValidateOffer(s).empty());

  s = GoodStorage();
  s.request_pricing = {{{RequestVerb::PUT}, RequestCategory::Upload, FeeStatus::Charged, std::nullopt}};
  EXPECT_TRUE(Has(ValidateOffer(s), "Charged rule requires CostPerRequest"));
  s.request_pricing = {{{RequestVerb::PUT}, RequestCategory::Upload, FeeStatus::Free, std::nullopt},
                       {{RequestVerb::PUT, RequestVerb::GET}, RequestCategory::Other, FeeStatus::Free, std::nullopt}};
  EXPECT_TRUE(Has(ValidateOffer(s), "RequestType appears in at most one rule"));

  s = GoodStorage();
  s.plans[0].plan_type = PlanType::ReducedRedundancy;
  EXPECT_TRUE(ValidateOffer(s).empty());
}

TEST(ValidateOffer, DimensionsChecked) {
  ComputeOffer c = GoodCompute();
  c.memory = {1, Unit::GHz};
  EXPECT_FALSE(ValidateOffer(c).empty());
  c = GoodCompute();
  c.plans[0].period_length = {1, Unit::GB};
  EXPECT_FALSE(ValidateOffer(c).empty());
}

TEST(LoadCatalog, RejectsWholeCorpus) {
  try {
    LoadCatalog(cmtest::ReadFixture("invalid_offers.json"));
    FAIL() << "expected rejection";
  } catch (const RejectedOfferError& e) {
    EXPECT_EQ(e.offers().size(), cmtest::kInvalidCorpus.size());
  }
}

TEST(LoadCatalog, FixturesLoadCleanly) {
  for (const char* name : {"provider_catalog.json", "two_offers.json", "ec2_attach.json"}) {
    EXPECT_NO_THROW(LoadCatalog(cmtest::ReadFixture(name))) << name;
  }
}

}  // namespace
}  // namespace cloudmatch

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

// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "cloudmatch/api.hpp"
#include "cloudmatch/catalog.hpp"
#include "cloudmatch/codec.hpp"
#include "cloudmatch/cost.hpp"
#include "cloudmatch/errors.hpp"
#include "cloudmatch/matching.hpp"
#include "cloudmatch/normalization.hpp"
#include "cloudmatch/ontology.hpp"
#include "cloudmatch/recommend.hpp"
#include "cloudmatch/validation.hpp"
#include "expectations.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "ranking.hpp"
#include "test_util.hpp"

namespace {

using namespace cloudmatch;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Tolerances and budgets.
constexpr double kMemoryTarget = 0.599;
constexpr double kMemoryTol = 0.0005;
constexpr double kProrationRelTol = 1e-9;
constexpr int kProrationTriples = 1000;
constexpr double kProrationBudgetS = 1.0;
constexpr int kOracleCatalogs = 100;
constexpr int kOracleMaxPerKind = 20;
constexpr int kOracleMaxPlans = 3;
constexpr double kOracleBudgetS = 30.0;
constexpr int kMatchCatalogs = 100;
constexpr int kMatchMaxPerKind = 16;  // three kinds, at most 48 offers
constexpr int kMatchQueriesPerCatalog = 9;
constexpr double kMatchBudgetS = 10.0;
constexpr int kMergeInputs = 1000;
constexpr double kMergeBudgetS = 1.0;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Check(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double Seconds(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Catalog Fixture(const std::string& name) { return LoadCatalog(cmtest::ReadFixture(name)); }

Outcome UnitConversion() {
  Outcome o;
  const double gb = ConvertQuantity({613, Unit::MB}, Unit::GB).value;
  o.Check(std::abs(gb - kMemoryTarget) <= kMemoryTol, "613 MB -> " + std::to_string(gb) + " GB");
  const double loaded = Fixture("two_offers.json").FindCompute("offer-a")->memory.value;
  o.Check(std::abs(loaded - kMemoryTarget) <= kMemoryTol, "loaded offer-a memory " + std::to_string(loaded));
  o.detail = o.pass ? "613 MB = " + FormatDecimal(gb) + " GB" : o.detail;
  return o;
}

Outcome RamHours() {
  Outcome o;
  for (const double gb : {2.0, 1.0}) {
    ComputeOffer offer;
    offer.id = "vm";
    offer.provider = "P";
    offer.memory = {gb, Unit::GB};
    PricePlan plan;
    plan.billing_unit = BillingUnit::PerRamHour;
    plan.cost_per_period = *ParsePriceUnit("USD/RAM-hour", 0.08);
    offer.plans = {plan};
    const auto cost = ComputeCost(offer, offer.plans[0], 1.0, 1);
    const bool exact = cost.line_items.size() == 1 && cost.line_items[0].quantity == gb &&
                       cost.line_items[0].unit == "RAM-hour";
    o.Check(exact, FormatDecimal(gb) + " GB for 1 h did not bill exactly " + FormatDecimal(gb) + " RAM-hours");
  }
  return o;
}

Outcome Proration() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> gb_dist(0.001, 10000.0), rate_dist(0.0001, 5.0), days_dist(0.01, 31.0);
  for (int i = 0; i < kProrationTriples; ++i) {
    StorageOffer s;
    s.id = "store";
    s.provider = "P";
    s.size_max = {1e9, Unit::GB};
    PricePlan plan;
    plan.billing_unit = BillingUnit::PerGbMonth;
    plan.cost_per_period = *ParsePriceUnit("USD/GB-month", rate_dist(rng));
    s.plans = {plan};
    const double g = gb_dist(rng);
    const double d = days_dist(rng);
    const double full = StorageCost(s, s.plans[0], g, 31.0).total;
    const double half = StorageCost(s, s.plans[0], 2 * g, 15.5).total;
    const double scaled = StorageCost(s, s.plans[0], g * 31.0 / d, d).total;
    const double tol = kProrationRelTol * std::max(std::abs(full), 1e-300);
    o.Check(std::abs(half - full) <= tol, "2g over 15.5 days != g over 31 days at triple " + std::to_string(i));
    o.Check(std::abs(scaled - full) <= tol, "g*31/d over d days != g over 31 days at triple " + std::to_string(i));
  }
  const double t = Seconds(start);
  o.Check(t < kProrationBudgetS, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(kProrationTriples) + " triples in " + std::to_string(t) + " s";
  return o;
}

Outcome Attachability() {
  Outcome o;
  const Catalog c = Fixture("ec2_attach.json");
  using Pair = std::pair<std::string, std::string>;
  const auto pairs = [&](const char* scenario) {
    std::set<Pair> out;
    const auto s = DecodeScenario(json::parse(cmtest::ReadFixture(std::string("scenarios/") + scenario)));
    for (const auto& rec : Recommend(c, s, kUnboundedTopK)) out.insert({rec.compute_id, rec.storage_id.value_or("")});
    return out;
  };
  o.Check(pairs("persistent_5gb.json") == std::set<Pair>{{"ec2-micro", "ebs"}}, "5 GB scenario set differs");
  o.Check(pairs("persistent_2048gb.json").empty(), "2048 GB scenario is not empty");
  std::set<Pair> direct5, direct2048;
  for (const auto& [comp, stor] : AttachablePairs(c, MatchQuery{}, 5)) direct5.insert({comp.id, stor.id});
  for (const auto& [comp, stor] : AttachablePairs(c, MatchQuery{}, 2048)) direct2048.insert({comp.id, stor.id});
  o.Check(direct5 == std::set<Pair>{{"ec2-micro", "ebs"}}, "attachable pairs at 5 GB differ");
  o.Check(direct2048.empty(), "attachable pairs at 2048 GB not empty");
  return o;
}

Outcome RequestCategoryCorpus() {
  Outcome o;
  const Catalog c = Fixture("provider_catalog.json");
  int zero_checks = 0;
  for (const auto& e : cmtest::kRequestCategories) {
    const StorageOffer* offer = c.FindStorage(e.storage_id);
    if (offer == nullptr) {
      o.Check(false, "missing storage " + std::string(e.storage_id));
      continue;
    }
    const RequestVerb verb = *ParseVerb(e.verb);
    const RequestCharge charge = CategorizeRequest(*offer, verb);
    const std::string where = std::string(e.storage_id) + " " + std::string(e.verb);
    o.Check(ToString(charge.category) == e.category, where + " category " + std::string(ToString(charge.category)));
    o.Check(ToString(charge.fee_status) == e.fee_status, where + " fee " + std::string(ToString(charge.fee_status)));
    if (charge.fee_status != FeeStatus::Charged) {
      ++zero_checks;
      o.Check(RequestCost(*offer, {{verb, 1000000}}).total == 0.0, where + " contributes a nonzero cost");
    }
  }
  o.Check(zero_checks > 0, "no Free/Unspecified rows checked");
  if (o.pass) o.detail = std::to_string(cmtest::kRequestCategories.size()) + " rows";
  return o;
}

Outcome RecommendOracle() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(20120901);
  int conflicts = 0;
  std::size_t bundles = 0;
  for (int i = 0; i < kOracleCatalogs; ++i) {
    cmtest::GLimits limits;
    limits.max_per_kind = kOracleMaxPerKind;
    limits.max_plans = kOracleMaxPlans;
    limits.mixed_currency = i % 10 == 9;
    const auto gen = cmtest::RandomCatalog(rng, limits);
    const auto sgen = cmtest::RandomScenario(rng, gen);
    const auto expected = cmtest::OracleRecommend(gen, sgen);
    const Catalog c = LoadCatalog(gen.ToJson().dump());
    const UsageScenario s = DecodeScenario(sgen.ToJson());
    if (expected.currency_conflict) {
      ++conflicts;
      bool threw = false;
      try {
        Recommend(c, s, kUnboundedTopK);
      } catch (const CurrencyError&) {
        threw = true;
      }
      o.Check(threw, "catalog " + std::to_string(i) + ": mixed currencies were ranked together");
      continue;
    }
    const auto actual = Recommend(c, s, kUnboundedTopK);
    bundles += actual.size();
    const std::string diff = cmtest::RankingDiff(actual, expected);
    o.Check(diff.empty(), "catalog " + std::to_string(i) + ": " + diff);
  }
  const double t = Seconds(start);
  o.Check(t < kOracleBudgetS, "took " + std::to_string(t) + " s");
  if (o.pass) {
    o.detail = std::to_string(kOracleCatalogs) + " catalogs, " + std::to_string(bundles) + " bundles, " +
               std::to_string(conflicts) + " currency conflicts, " + std::to_string(t) + " s";
  }
  return o;
}

Outcome MatchOracle() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(613);
  std::size_t rows = 0;
  for (int i = 0; i < kMatchCatalogs; ++i) {
    cmtest::GLimits limits;
    limits.max_per_kind = kMatchMaxPerKind;
    const auto gen = cmtest::RandomCatalog(rng, limits);
    const Catalog c = LoadCatalog(gen.ToJson().dump());
    o.Check(c.OfferCount() <= 50, "catalog has more than 50 offers");
    for (int q = 0; q < kMatchQueriesPerCatalog; ++q) {
      const auto query = cmtest::RandomQuery(rng, gen);
      const auto expected = cmtest::OracleMatch(gen, query);
      std::vector<std::string> actual;
      const auto table = api::OfferTable(c, api::ParseOfferParams(*ParseOfferKind(query.kind), query.params));
      for (const auto& row : table.rows) actual.push_back(std::get<std::string>(row.at(0)));
      rows += actual.size();
      o.Check(actual == expected, "catalog " + std::to_string(i) + " query " + json(query.params).dump());
    }
  }
  const double t = Seconds(start);
  o.Check(t < kMatchBudgetS, "took " + std::to_string(t) + " s");
  if (o.pass) {
    o.detail = std::to_string(kMatchCatalogs * kMatchQueriesPerCatalog) + " queries, " + std::to_string(rows) +
               " rows, " + std::to_string(t) + " s";
  }
  return o;
}

Outcome RegionalMerge() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(31);
  std::vector<Location> pool;
  for (const char* text : {"NorthAmerica", "NorthAmerica:us-east-1", "NorthAmerica:us-west-2", "SouthAmerica",
                           "Europe", "Europe:eu-west-1", "Asia", "Asia:ap-southeast-1", "Africa", "Australia",
                           "Australia:syd"}) {
    pool.push_back(*ParseLocation(text));
  }
  for (int i = 0; i < kMergeInputs; ++i) {
    std::vector<Location> locs = pool;
    std::shuffle(locs.begin(), locs.end(), rng);
    locs.resize(std::uniform_int_distribution<std::size_t>(0, locs.size())(rng));
    std::vector<std::pair<Location, Price>> input;
    for (const auto& l : locs) {
      input.push_back({l, *ParsePriceUnit("USD/hour", std::uniform_int_distribution<int>(0, 4)(rng) / 8.0)});
    }
    const auto merged = MergeRegionalPrices(input);
    std::set<std::pair<Location, double>> in, out;
    std::set<double> prices;
    std::size_t members = 0;
    for (const auto& [l, p] : input) in.insert({l, p.amount});
    for (const auto& group : merged) {
      o.Check(prices.insert(group.price.amount).second, "equal prices left in separate groups");
      o.Check(!group.locations.empty(), "empty group");
      for (const auto& l : group.locations) out.insert({l, group.price.amount});
      members += group.locations.size();
    }
    o.Check(members == input.size() && in == out, "membership changed at input " + std::to_string(i));
  }
  const double t = Seconds(start);
  o.Check(t < kMergeBudgetS, "took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(kMergeInputs) + " inputs in " + std::to_string(t) + " s";
  return o;
}

Outcome Ontology() {
  Outcome o;
  const Catalog c = Fixture("provider_catalog.json");
  const std::string cocoon(kCocoonNamespace);
  std::vector<cmtest::Triple> triples;
  try {
    triples = cmtest::ParseTurtle(ExportOntology(c));
  } catch (const std::exception& e) {
    o.Check(false, std::string("Turtle does not parse: ") + e.what());
    return o;
  }
  std::set<std::string> typed;
  std::size_t attach = 0;
  for (const auto& t : triples) {
    if (t.predicate == cmtest::kRdfType && t.subject.rfind("_:", 0) != 0 &&
        (t.object == cocoon + "Compute" || t.object == cocoon + "Storage" || t.object == cocoon + "Network")) {
      typed.insert(t.subject);
    }
    if (t.predicate == cocoon + "isAttachable") ++attach;
  }
  o.Check(typed.size() == c.OfferCount(),
          std::to_string(typed.size()) + " typed individuals for " + std::to_string(c.OfferCount()) + " offers");
  o.Check(attach > 0, "no isAttachable links");
  if (o.pass) {
    o.detail = std::to_string(typed.size()) + " individuals, " + std::to_string(attach) + " isAttachable links";
  }
  return o;
}

Outcome OfferValidationCorpus() {
  Outcome o;
  const CatalogDocument doc = DecodeCatalogDocument(cmtest::ReadFixture("invalid_offers.json"));
  std::vector<DecodedOffer> all = doc.compute;
  all.insert(all.end(), doc.storage.begin(), doc.storage.end());
  all.insert(all.end(), doc.network.begin(), doc.network.end());
  o.Check(all.size() == cmtest::kInvalidCorpus.size(), "corpus size " + std::to_string(all.size()));
  for (const auto& expected : cmtest::kInvalidCorpus) {
    const auto it = std::find_if(all.begin(), all.end(),
                                 [&](const DecodedOffer& d) { return IdOf(d.offer) == expected.offer_id; });
    if (it == all.end()) {
      o.Check(false, "missing " + std::string(expected.offer_id));
      continue;
    }
    ValidationReport report = it->schema_violations;
    const ValidationReport semantic = ValidateOffer(it->offer);
    report.insert(report.end(), semantic.begin(), semantic.end());
    o.Check(report.size() == 1 && report[0].field == expected.field && report[0].constraint == expected.constraint,
            std::string(expected.offer_id) + " not rejected with " + std::string(expected.constraint));
  }
  bool rejected = false;
  try {
    LoadCatalog(cmtest::ReadFixture("invalid_offers.json"));
  } catch (const RejectedOfferError& e) {
    rejected = e.offers().size() == cmtest::kInvalidCorpus.size();
  }
  o.Check(rejected, "loading the corpus did not reject all offers");
  for (const char* name : {"provider_catalog.json", "two_offers.json", "ec2_attach.json"}) {
    try {
      LoadCatalog(cmtest::ReadFixture(name));
    } catch (const std::exception& e) {
      o.Check(false, std::string(name) + ": " + e.what());
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"unit-conversion-613mb", UnitConversion},
      {"ram-hour-semantics", RamHours},
      {"proration-invariance", Proration},
      {"attachability-worked-example", Attachability},
      {"request-categorization-table", RequestCategoryCorpus},
      {"recommend-oracle-equivalence", RecommendOracle},
      {"matching-oracle", MatchOracle},
      {"regional-merging", RegionalMerge},
      {"ontology-export", Ontology},
      {"offer-validation-corpus", OfferValidationCorpus},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "PASS " : "FAIL ") << name;
    if (!outcome.detail.empty()) std::cout << " (" << outcome.detail << ")";
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}

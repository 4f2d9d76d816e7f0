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

#ifndef CLOUDMATCH_COST_HPP_
#define CLOUDMATCH_COST_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cloudmatch/model.hpp"

namespace cloudmatch {

struct LineItem {
  std::string label;
  double quantity = 0.0;
  std::string unit;
  double rate = 0.0;
  double amount = 0.0;
};

struct CostBreakdown {
  std::string currency;
  std::vector<LineItem> line_items;
  double total = 0.0;

  void Add(LineItem item);
  // Appends another breakdown's items. Throws CurrencyError on mismatch.
  void Append(const CostBreakdown& other);
};

// Rate charged at `location`: the lowest regional price whose location
// covers it (or is covered by it), else the plan's base price.
double EffectiveRate(const PricePlan& plan, const std::optional<Location>& location);

// PerHour: instances x billed hours x rate. PerRamHour: instances x memory
// GB x billed hours x rate. Billed hours are rounded up to whole hours
// unless the plan says otherwise. Prepaid: ceil(hours / period) period fees
// plus overage beyond included capacity x periods at CostOverLimit; nothing
// is charged when there is no usage.
// Throws PlanMismatchError when `plan` is not one of the offer's compute
// plans, InvalidInputError on negative inputs.
CostBreakdown ComputeCost(const ComputeOffer& offer, const PricePlan& plan, double hours, std::int64_t instance_count,
                          const std::optional<Location>& location = std::nullopt);

// gb x (days / month length) x rate per GB-month. Prepaid plans meter
// GB-months against included capacity x periods. Throws CapacityError when
// a nonzero gb falls outside the offer's size bounds.
CostBreakdown StorageCost(const StorageOffer& offer, const PricePlan& plan, double gb, double days,
                          const std::optional<Location>& location = std::nullopt);

CostBreakdown RequestCost(const StorageOffer& offer, const std::map<RequestVerb, std::uint64_t>& counts);

CostBreakdown TransferCost(const NetworkOffer& network, double in_gb, double out_gb);

// Members may be absent; compute is required by the recommender but not
// here.
struct Bundle {
  const ComputeOffer* compute = nullptr;
  const StorageOffer* storage = nullptr;
  const NetworkOffer* network = nullptr;
};

struct BundleQuote {
  CostBreakdown breakdown;
  std::optional<std::size_t> compute_plan;
  std::optional<std::size_t> storage_plan;
};

// Prices every member for the scenario, choosing per member the plan with
// the lowest cost (first plan on ties). Throws CurrencyError when members
// are priced in different currencies.
BundleQuote BundleCost(const Bundle& bundle, const UsageScenario& scenario);

struct SavingsOption {
  std::string label;
  std::string provider;
  CostBreakdown breakdown;
};

struct SavingsEntry {
  std::string label;
  std::string provider;
  double total = 0.0;
  double delta = 0.0;
};

// Ascending by total, ties by provider then label; delta is the distance
// to the cheapest option. Throws InvalidInputError on empty input and
// CurrencyError on mixed currencies.
std::vector<SavingsEntry> Savings(const std::vector<SavingsOption>& options);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_COST_HPP_

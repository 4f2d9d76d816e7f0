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

#include "cloudmatch/cost.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "cloudmatch/errors.hpp"
#include "cloudmatch/normalization.hpp"
#include "cloudmatch/units.hpp"

namespace cloudmatch {

namespace {

void RequireNonNegative(const char* what, double value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidInputError(std::string(what) + " must be a finite value >= 0, got " + FormatDecimal(value));
  }
}

template <typename T>
void RequirePlanOf(const T& offer, const PricePlan& plan) {
  if (std::find(offer.plans.begin(), offer.plans.end(), plan) == offer.plans.end()) {
    throw PlanMismatchError("plan does not belong to offer " + offer.id);
  }
}

// Whole started periods, or none when nothing is used.
double StartedPeriods(double duration, double period_length, double usage) {
  if (usage <= 0.0 || duration <= 0.0) return 0.0;
  return std::ceil(duration / period_length);
}

void AddPrepaid(CostBreakdown& out, const std::string& prefix, const PricePlan& plan, double periods, double usage,
                const std::string& usage_unit, const std::optional<Location>& location) {
  const double fee = EffectiveRate(plan, location);
  out.Add({prefix + "prepaid periods", periods, "period", fee, periods * fee});
  const double included = plan.included_capacity ? plan.included_capacity->value * periods : 0.0;
  const double overage = std::max(0.0, usage - included);
  const double over_rate = plan.cost_over_limit ? plan.cost_over_limit->amount : 0.0;
  out.Add({prefix + "overage", overage, usage_unit, over_rate, overage * over_rate});
}

}  // namespace

void CostBreakdown::Add(LineItem item) {
  total += item.amount;
  line_items.push_back(std::move(item));
}

void CostBreakdown::Append(const CostBreakdown& other) {
  if (currency.empty()) {
    currency = other.currency;
  } else if (!other.currency.empty() && other.currency != currency) {
    throw CurrencyError("cannot combine " + currency + " and " + other.currency + " costs");
  }
  for (const auto& item : other.line_items) Add(item);
}

double EffectiveRate(const PricePlan& plan, const std::optional<Location>& location) {
  // Cheapest matching entry, so the result does not depend on how
  // regional prices were grouped.
  std::optional<double> best;
  if (location) {
    for (const auto& entry : plan.regional_prices) {
      for (const auto& loc : entry.locations) {
        if ((loc.Covers(*location) || location->Covers(loc)) && (!best || entry.price.amount < *best)) {
          best = entry.price.amount;
        }
      }
    }
  }
  return best.value_or(plan.cost_per_period.amount);
}

CostBreakdown ComputeCost(const ComputeOffer& offer, const PricePlan& plan, double hours, std::int64_t instance_count,
                          const std::optional<Location>& location) {
  RequirePlanOf(offer, plan);
  if (plan.billing_unit != BillingUnit::PerHour && plan.billing_unit != BillingUnit::PerRamHour) {
    throw PlanMismatchError("compute offer " + offer.id + " has a " + std::string(ToString(plan.billing_unit)) +
                            " plan");
  }
  RequireNonNegative("hours", hours);
  if (instance_count < 0) throw InvalidInputError("instance_count must be >= 0");

  CostBreakdown out;
  out.currency = plan.cost_per_period.currency;
  const double billed_hours = plan.hour_rounding == HourRounding::Ceil ? std::ceil(hours) : hours;
  const double instances = static_cast<double>(instance_count);
  const bool ram_hours = plan.billing_unit == BillingUnit::PerRamHour;
  const double usage = ram_hours ? instances * offer.memory.value * billed_hours : instances * billed_hours;
  const std::string unit = ram_hours ? "RAM-hour" : "instance-hour";
  const std::string prefix = "compute " + offer.id + ": ";

  if (plan.plan_type == PlanType::Prepaid) {
    AddPrepaid(out, prefix, plan, StartedPeriods(billed_hours, plan.period_length.value, usage), usage, unit,
               location);
  } else {
    const double rate = EffectiveRate(plan, location);
    out.Add({prefix + unit + "s", usage, unit, rate, usage * rate});
  }
  return out;
}

CostBreakdown StorageCost(const StorageOffer& offer, const PricePlan& plan, double gb, double days,
                          const std::optional<Location>& location) {
  RequirePlanOf(offer, plan);
  if (plan.billing_unit != BillingUnit::PerGbMonth) {
    throw PlanMismatchError("storage offer " + offer.id + " has a " + std::string(ToString(plan.billing_unit)) +
                            " plan");
  }
  RequireNonNegative("gb", gb);
  RequireNonNegative("days", days);
  if (gb != 0.0 && (gb < offer.size_min.value || gb > offer.size_max.value)) {
    throw CapacityError(FormatDecimal(gb) + " GB is outside the bounds of " + offer.id + " [" +
                        FormatDecimal(offer.size_min.value) + ", " + FormatDecimal(offer.size_max.value) + "] GB");
  }

  CostBreakdown out;
  out.currency = plan.cost_per_period.currency;
  const double months = days / static_cast<double>(plan.month_length_days);
  const std::string prefix = "storage " + offer.id + ": ";
  if (plan.plan_type == PlanType::Prepaid) {
    const double usage = gb * months;
    AddPrepaid(out, prefix, plan, StartedPeriods(days, plan.period_length.value, usage), usage, "GB-month", location);
  } else {
    const double rate = EffectiveRate(plan, location);
    out.Add({prefix + "GB-months", gb * months, "GB-month", rate, gb * months * rate});
  }
  return out;
}

CostBreakdown RequestCost(const StorageOffer& offer, const std::map<RequestVerb, std::uint64_t>& counts) {
  CostBreakdown out;
  if (!offer.plans.empty()) out.currency = offer.plans.front().cost_per_period.currency;
  for (const auto& [verb, count] : counts) {
    const RequestCharge charge = CategorizeRequest(offer, verb);
    const double n = static_cast<double>(count);
    out.Add({"requests " + offer.id + ": " + std::string(ToString(verb)) + " (" +
                 std::string(ToString(charge.category)) + ", " + std::string(ToString(charge.fee_status)) + ")",
             n, "request", charge.cost_per_request, n * charge.cost_per_request});
  }
  return out;
}

CostBreakdown TransferCost(const NetworkOffer& network, double in_gb, double out_gb) {
  RequireNonNegative("transfer_in_gb", in_gb);
  RequireNonNegative("transfer_out_gb", out_gb);
  CostBreakdown out;
  out.currency = network.cost_data_transfer_out.currency;
  const std::string prefix = "network " + network.id + ": ";
  out.Add({prefix + "transfer in", in_gb, "GB", network.cost_data_transfer_in.amount,
           in_gb * network.cost_data_transfer_in.amount});
  out.Add({prefix + "transfer out", out_gb, "GB", network.cost_data_transfer_out.amount,
           out_gb * network.cost_data_transfer_out.amount});
  return out;
}

BundleQuote BundleCost(const Bundle& bundle, const UsageScenario& scenario) {
  BundleQuote quote;
  if (bundle.compute != nullptr) {
    std::optional<CostBreakdown> best;
    for (std::size_t i = 0; i < bundle.compute->plans.size(); ++i) {
      auto cost = ComputeCost(*bundle.compute, bundle.compute->plans[i], scenario.compute_hours,
                              scenario.instance_count, scenario.location);
      if (!best || cost.total < best->total) {
        best = std::move(cost);
        quote.compute_plan = i;
      }
    }
    if (best) quote.breakdown.Append(*best);
  }
  if (bundle.storage != nullptr) {
    std::optional<CostBreakdown> best;
    for (std::size_t i = 0; i < bundle.storage->plans.size(); ++i) {
      auto cost = StorageCost(*bundle.storage, bundle.storage->plans[i], scenario.storage_gb,
                              scenario.storage_duration_days, scenario.location);
      if (!best || cost.total < best->total) {
        best = std::move(cost);
        quote.storage_plan = i;
      }
    }
    if (best) quote.breakdown.Append(*best);
    quote.breakdown.Append(RequestCost(*bundle.storage, scenario.request_counts));
  }
  if (bundle.network != nullptr) {
    quote.breakdown.Append(TransferCost(*bundle.network, scenario.transfer_in_gb, scenario.transfer_out_gb));
  }
  return quote;
}

std::vector<SavingsEntry> Savings(const std::vector<SavingsOption>& options) {
  if (options.empty()) throw InvalidInputError("savings needs at least one option");
  const std::string& currency = options.front().breakdown.currency;
  for (const auto& o : options) {
    if (o.breakdown.currency != currency) {
      throw CurrencyError("cannot compare " + currency + " and " + o.breakdown.currency + " totals");
    }
  }
  std::vector<SavingsEntry> entries;
  entries.reserve(options.size());
  for (const auto& o : options) entries.push_back({o.label, o.provider, o.breakdown.total, 0.0});
  std::sort(entries.begin(), entries.end(), [](const SavingsEntry& a, const SavingsEntry& b) {
    return std::tie(a.total, a.provider, a.label) < std::tie(b.total, b.provider, b.label);
  });
  const double cheapest = entries.front().total;
  for (auto& e : entries) e.delta = e.total - cheapest;
  return entries;
}

}  // namespace cloudmatch

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

#include "cloudmatch/validation.hpp"

#include <array>
#include <cmath>
#include <set>
#include <string>

#include "cloudmatch/normalization.hpp"

namespace cloudmatch {

namespace {

constexpr std::array<ParameterBinding, 15> kParameters{{
    {"Core", "ComputeOffer", "cores"},
    {"CPUClockSpeed", "ComputeOffer", "clock_speed"},
    {"hasMemory", "ComputeOffer", "memory"},
    {"hasCapacity", "PricePlan", "included_capacity"},
    {"Location", "Location", "continent"},
    {"CostPerPeriod", "PricePlan", "cost_per_period"},
    {"PeriodLength", "PricePlan", "period_length"},
    {"CostOverLimit", "PricePlan", "cost_over_limit"},
    {"PlanType", "PricePlan", "plan_type"},
    {"StorageSizeMin", "StorageOffer", "size_min"},
    {"StorageSizeMax", "StorageOffer", "size_max"},
    {"RequestType", "RequestFeeRule", "verbs"},
    {"CostPerRequest", "RequestFeeRule", "cost_per_request"},
    {"CostDataTransferIn", "NetworkOffer", "cost_data_transfer_in"},
    {"CostDataTransferOut", "NetworkOffer", "cost_data_transfer_out"},
}};

class Checker {
 public:
  void Add(std::string field, std::string constraint, std::string observed) {
    report_.push_back({std::move(field), std::move(constraint), std::move(observed)});
  }

  // value must be finite and pass `ok`.
  template <typename Pred>
  void Value(const std::string& field, double value, const char* constraint, Pred ok) {
    if (!std::isfinite(value) || !ok(value)) Add(field, constraint, FormatDecimal(value));
  }

  void Dim(const std::string& field, const Quantity& q, Dimension want, const char* what) {
    if (DimensionOf(q.unit) != want) Add(field + ".unit", std::string("unit is ") + what, std::string(ToString(q.unit)));
  }

  void Basis(const std::string& field, const Price& p, PriceBasis want) {
    if (p.basis != want) {
      Add(field + ".unit", "price is quoted per " + std::string(ToString(want)), FormatPriceUnit(p));
    }
  }

  void Currency(const std::string& field, const Price& p) {
    if (currency_.empty()) {
      currency_ = p.currency;
    } else if (p.currency != currency_) {
      Add(field + ".unit", "single currency per offer (" + currency_ + ")", p.currency);
    }
  }

  ValidationReport Take() { return std::move(report_); }

 private:
  ValidationReport report_;
  std::string currency_;
};

const auto kNonNegative = [](double v) { return v >= 0.0; };
const auto kPositive = [](double v) { return v > 0.0; };

void CheckCommon(Checker& c, const std::string& id, const std::string& provider) {
  if (!IsValidOfferId(id)) c.Add("id", "id matches [a-z0-9-]+", id);
  if (provider.empty()) c.Add("provider", "provider is set", "");
}

void CheckPlan(Checker& c, const PricePlan& plan, OfferKind kind, const std::string& path) {
  if (kind == OfferKind::Compute && plan.plan_type == PlanType::ReducedRedundancy) {
    c.Add(path + ".plan_type", "PlanType in {PayAsYouGo, Prepaid}", std::string(ToString(plan.plan_type)));
  }

  const bool billing_ok = kind == OfferKind::Compute
                              ? (plan.billing_unit == BillingUnit::PerHour || plan.billing_unit == BillingUnit::PerRamHour)
                              : plan.billing_unit == BillingUnit::PerGbMonth;
  if (!billing_ok) {
    c.Add(path + ".billing_unit",
          kind == OfferKind::Compute ? "billingUnit in {PerHour, PerRamHour}" : "billingUnit in {PerGbMonth}",
          std::string(ToString(plan.billing_unit)));
  }

  const bool prepaid = plan.plan_type == PlanType::Prepaid;
  const PriceBasis fee_basis = prepaid ? PriceBasis::Flat : RateBasis(plan.billing_unit);

  c.Value(path + ".cost_per_period", plan.cost_per_period.amount, "CostPerPeriod >= 0", kNonNegative);
  c.Basis(path + ".cost_per_period", plan.cost_per_period, fee_basis);
  c.Currency(path + ".cost_per_period", plan.cost_per_period);

  c.Value(path + ".period_length", plan.period_length.value, "PeriodLength > 0", kPositive);
  c.Dim(path + ".period_length", plan.period_length, Dimension::Time, "a time unit");

  if (plan.included_capacity) {
    c.Value(path + ".included_capacity", plan.included_capacity->value, "hasCapacity >= 0", kNonNegative);
    const Dimension want = kind == OfferKind::Storage             ? Dimension::Size
                           : plan.billing_unit == BillingUnit::PerHour ? Dimension::Time
                                                                       : Dimension::Count;
    const char* what = want == Dimension::Size ? "a size unit" : want == Dimension::Time ? "a time unit" : "count";
    c.Dim(path + ".included_capacity", *plan.included_capacity, want, what);
  } else if (prepaid) {
    c.Add(path + ".included_capacity", "Prepaid requires hasCapacity", "missing");
  }

  if (plan.cost_over_limit) {
    c.Value(path + ".cost_over_limit", plan.cost_over_limit->amount, "CostOverLimit >= 0", kNonNegative);
    c.Basis(path + ".cost_over_limit", *plan.cost_over_limit, RateBasis(plan.billing_unit));
    c.Currency(path + ".cost_over_limit", *plan.cost_over_limit);
  } else if (prepaid) {
    c.Add(path + ".cost_over_limit", "Prepaid requires CostOverLimit", "missing");
  }

  std::set<Location> seen;
  for (std::size_t i = 0; i < plan.regional_prices.size(); ++i) {
    const auto& entry = plan.regional_prices[i];
    const std::string entry_path = path + ".regional_prices[" + std::to_string(i) + "]";
    if (entry.locations.empty()) c.Add(entry_path + ".locations", "regional price names a location", "[]");
    for (const auto& loc : entry.locations) {
      if (!seen.insert(loc).second) {
        c.Add(entry_path + ".locations", "regionalPrices locations unique", ToString(loc));
      }
    }
    c.Value(entry_path + ".price", entry.price.amount, "CostPerPeriod >= 0", kNonNegative);
    c.Basis(entry_path + ".price", entry.price, fee_basis);
    c.Currency(entry_path + ".price", entry.price);
  }

  if (plan.month_length_days < 1) {
    c.Add(path + ".month_length_days", "monthLengthDays >= 1", std::to_string(plan.month_length_days));
  }
}

void CheckPlans(Checker& c, const std::vector<PricePlan>& plans, OfferKind kind) {
  if (plans.empty()) c.Add("plans", "at least one price plan", "[]");
  for (std::size_t i = 0; i < plans.size(); ++i) {
    CheckPlan(c, plans[i], kind, "plans[" + std::to_string(i) + "]");
  }
}

ValidationReport Check(const ComputeOffer& o) {
  Checker c;
  CheckCommon(c, o.id, o.provider);
  if (o.cores < 1) c.Add("cores", "Core >= 1", std::to_string(o.cores));
  c.Value("clock_speed", o.clock_speed.value, "CPUClockSpeed > 0", kPositive);
  c.Dim("clock_speed", o.clock_speed, Dimension::Frequency, "a frequency unit");
  c.Value("memory", o.memory.value, "hasMemory > 0", kPositive);
  c.Dim("memory", o.memory, Dimension::Size, "a size unit");
  if (o.local_storage) {
    c.Value("local_storage", o.local_storage->value, "hasLocalStorage >= 0", kNonNegative);
    c.Dim("local_storage", *o.local_storage, Dimension::Size, "a size unit");
  }
  for (std::size_t i = 0; i < o.supported_networks.size(); ++i) {
    if (!IsValidOfferId(o.supported_networks[i])) {
      c.Add("supported_networks[" + std::to_string(i) + "]", "id matches [a-z0-9-]+", o.supported_networks[i]);
    }
  }
  CheckPlans(c, o.plans, OfferKind::Compute);
  return c.Take();
}

ValidationReport Check(const StorageOffer& o) {
  Checker c;
  CheckCommon(c, o.id, o.provider);
  c.Value("size_min", o.size_min.value, "StorageSizeMin >= 0", kNonNegative);
  c.Dim("size_min", o.size_min, Dimension::Size, "a size unit");
  c.Value("size_max", o.size_max.value, "StorageSizeMax > 0", kPositive);
  c.Dim("size_max", o.size_max, Dimension::Size, "a size unit");
  if (DimensionOf(o.size_min.unit) == Dimension::Size && DimensionOf(o.size_max.unit) == Dimension::Size) {
    const double min_gb = ConvertQuantity(o.size_min, Unit::GB).value;
    const double max_gb = ConvertQuantity(o.size_max, Unit::GB).value;
    if (min_gb > max_gb) {
      c.Add("size_min", "StorageSizeMin <= StorageSizeMax", FormatDecimal(min_gb) + " GB > " + FormatDecimal(max_gb) + " GB");
    }
  }

  if (!o.attachable_to.empty() && o.kind != StorageKind::NetworkStorage && o.kind != StorageKind::BlockStorage) {
    c.Add("attachable_to", "attachableTo requires NetworkStorage or BlockStorage", std::string(ToString(o.kind)));
  }
  for (std::size_t i = 0; i < o.attachable_to.size(); ++i) {
    if (!IsValidAttachPattern(o.attachable_to[i])) {
      c.Add("attachable_to[" + std::to_string(i) + "]", "pattern over [a-z0-9-*?]", o.attachable_to[i]);
    }
  }

  std::set<RequestVerb> seen;
  for (std::size_t i = 0; i < o.request_pricing.size(); ++i) {
    const auto& rule = o.request_pricing[i];
    const std::string path = "request_pricing[" + std::to_string(i) + "]";
    if (rule.verbs.empty()) c.Add(path + ".verbs", "rule names at least one RequestType", "[]");
    for (const auto verb : rule.verbs) {
      if (!seen.insert(verb).second) {
        c.Add(path + ".verbs", "RequestType appears in at most one rule", std::string(ToString(verb)));
      }
    }
    if (rule.cost_per_request) {
      c.Value(path + ".cost_per_request", rule.cost_per_request->amount, "CostPerRequest >= 0", kNonNegative);
      c.Basis(path + ".cost_per_request", *rule.cost_per_request, PriceBasis::Request);
      c.Currency(path + ".cost_per_request", *rule.cost_per_request);
    } else if (rule.fee_status == FeeStatus::Charged) {
      c.Add(path + ".cost_per_request", "Charged rule requires CostPerRequest", "missing");
    }
  }

  CheckPlans(c, o.plans, OfferKind::Storage);
  return c.Take();
}

ValidationReport Check(const NetworkOffer& o) {
  Checker c;
  CheckCommon(c, o.id, o.provider);
  if (o.bandwidth) {
    c.Value("bandwidth", o.bandwidth->value, "hasBandwidth > 0", kPositive);
    c.Dim("bandwidth", *o.bandwidth, Dimension::Bandwidth, "a bandwidth unit");
  }
  c.Value("cost_data_transfer_in", o.cost_data_transfer_in.amount, "CostDataTransferIn >= 0", kNonNegative);
  c.Basis("cost_data_transfer_in", o.cost_data_transfer_in, PriceBasis::Gb);
  c.Currency("cost_data_transfer_in", o.cost_data_transfer_in);
  c.Value("cost_data_transfer_out", o.cost_data_transfer_out.amount, "CostDataTransferOut > 0", kPositive);
  c.Basis("cost_data_transfer_out", o.cost_data_transfer_out, PriceBasis::Gb);
  c.Currency("cost_data_transfer_out", o.cost_data_transfer_out);
  return c.Take();
}

}  // namespace

ValidationReport ValidateOffer(const Offer& offer) {
  return std::visit([](const auto& o) { return Check(o); }, offer);
}

std::span<const ParameterBinding> ConfigurationParameters() { return kParameters; }

}  // namespace cloudmatch

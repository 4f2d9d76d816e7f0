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

#include "cloudmatch/normalization.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "cloudmatch/errors.hpp"
#include "cloudmatch/validation.hpp"

namespace cloudmatch {

namespace {

constexpr std::array<ConversionRule, 7> kRules{{
    {Unit::MB, Unit::GB, 1.0 / 1024.0},
    {Unit::GB, Unit::TB, 1.0 / 1024.0},
    {Unit::ECU, Unit::GHz, 1.0},
    {Unit::Mbps, Unit::Gbps, 1.0 / 1000.0},
    {Unit::Hour, Unit::Day, 1.0 / 24.0},
    {Unit::Day, Unit::Month, 1.0 / kDefaultMonthLengthDays},
    // Keeps Count a (trivially connected) dimension of its own.
    {Unit::Count, Unit::Count, 1.0},
}};

constexpr double kEcuLowGhz = 1.0;
constexpr double kEcuHighGhz = 1.2;

// Factor f with 1 `from` = f `to`, found by walking the rule graph.
std::optional<double> PathFactor(Unit from, Unit to) {
  if (from == to) return 1.0;
  std::map<Unit, double> reached{{from, 1.0}};
  std::deque<Unit> queue{from};
  while (!queue.empty()) {
    const Unit at = queue.front();
    queue.pop_front();
    const double so_far = reached[at];
    for (const auto& rule : kRules) {
      std::optional<std::pair<Unit, double>> step;
      if (rule.from == at) step = {rule.to, so_far * rule.factor};
      if (rule.to == at) step = {rule.from, so_far / rule.factor};
      if (!step || reached.contains(step->first)) continue;
      if (step->first == to) return step->second;
      reached.emplace(*step);
      queue.push_back(step->first);
    }
  }
  return std::nullopt;
}

double ToGb(Unit size_unit) { return ConvertQuantity({1.0, size_unit}, Unit::GB).value; }

Quantity ConvertPeriod(const Quantity& q, Unit target, int month_length_days) {
  if (q.unit == Unit::Month) {
    return ConvertQuantity({q.value * month_length_days, Unit::Day}, target);
  }
  return ConvertQuantity(q, target);
}

std::vector<RegionalPrice> NormalizeRegional(const std::vector<RegionalPrice>& regional) {
  std::vector<std::pair<Location, Price>> flat;
  for (const auto& entry : regional) {
    const Price price = CanonicalPrice(entry.price);
    for (const auto& loc : entry.locations) flat.emplace_back(loc, price);
  }
  return MergeRegionalPrices(flat);
}

PricePlan NormalizePlan(const PricePlan& raw, OfferKind kind) {
  PricePlan plan = raw;
  plan.cost_per_period = CanonicalPrice(raw.cost_per_period);
  plan.period_length =
      ConvertPeriod(raw.period_length, kind == OfferKind::Compute ? Unit::Hour : Unit::Day, raw.month_length_days);
  if (raw.included_capacity) {
    const Dimension dim = DimensionOf(raw.included_capacity->unit);
    if (dim == Dimension::Size) {
      plan.included_capacity = ConvertQuantity(*raw.included_capacity, Unit::GB);
    } else if (dim == Dimension::Time) {
      plan.included_capacity = ConvertPeriod(*raw.included_capacity, Unit::Hour, raw.month_length_days);
    }
  }
  if (raw.cost_over_limit) plan.cost_over_limit = CanonicalPrice(*raw.cost_over_limit);
  plan.regional_prices = NormalizeRegional(raw.regional_prices);
  return plan;
}

std::vector<PricePlan> NormalizePlans(const std::vector<PricePlan>& plans, OfferKind kind) {
  std::vector<PricePlan> out;
  out.reserve(plans.size());
  for (const auto& plan : plans) out.push_back(NormalizePlan(plan, kind));
  return out;
}

Offer Convert(const ComputeOffer& raw) {
  ComputeOffer o = raw;
  if (raw.clock_speed.unit == Unit::ECU) {
    o.clock_speed = EcuToClockInterval(raw.clock_speed.value).low;
  } else {
    o.clock_speed = ConvertQuantity(raw.clock_speed, Unit::GHz);
  }
  o.memory = ConvertQuantity(raw.memory, Unit::GB);
  if (raw.local_storage) o.local_storage = ConvertQuantity(*raw.local_storage, Unit::GB);
  o.plans = NormalizePlans(raw.plans, OfferKind::Compute);
  return o;
}

Offer Convert(const StorageOffer& raw) {
  StorageOffer o = raw;
  o.size_min = ConvertQuantity(raw.size_min, Unit::GB);
  o.size_max = ConvertQuantity(raw.size_max, Unit::GB);
  for (auto& rule : o.request_pricing) {
    if (rule.cost_per_request) rule.cost_per_request = CanonicalPrice(*rule.cost_per_request);
  }
  o.plans = NormalizePlans(raw.plans, OfferKind::Storage);
  return o;
}

Offer Convert(const NetworkOffer& raw) {
  NetworkOffer o = raw;
  if (raw.bandwidth) o.bandwidth = ConvertQuantity(*raw.bandwidth, Unit::Mbps);
  o.cost_data_transfer_in = CanonicalPrice(raw.cost_data_transfer_in);
  o.cost_data_transfer_out = CanonicalPrice(raw.cost_data_transfer_out);
  return o;
}

}  // namespace

std::span<const ConversionRule> ConversionRules() { return kRules; }

Quantity ConvertQuantity(const Quantity& q, Unit target) {
  if (DimensionOf(q.unit) != DimensionOf(target)) {
    throw IncompatibleUnitsError("cannot convert " + std::string(ToString(q.unit)) + " to " +
                                 std::string(ToString(target)));
  }
  const auto factor = PathFactor(q.unit, target);
  if (!factor) {
    throw IncompatibleUnitsError("no conversion path from " + std::string(ToString(q.unit)) + " to " +
                                 std::string(ToString(target)));
  }
  return {q.value * *factor, target};
}

ClockInterval EcuToClockInterval(double ecus) {
  if (!std::isfinite(ecus) || ecus <= 0.0) {
    throw InvalidRatingError("ECU rating must be > 0 (CPUClockSpeed > 0), got " + FormatDecimal(ecus));
  }
  return {{kEcuLowGhz * ecus, Unit::GHz}, {kEcuHighGhz * ecus, Unit::GHz}};
}

RequestCharge CategorizeRequest(const Provider& provider, const StorageOffer& offer, RequestVerb verb) {
  if (offer.provider != provider.name) {
    throw std::invalid_argument("offer " + offer.id + " does not belong to provider " + provider.name);
  }
  return CategorizeRequest(offer, verb);
}

RequestCharge CategorizeRequest(const StorageOffer& offer, RequestVerb verb) {
  const RequestFeeRule* explicit_rule = nullptr;
  const RequestFeeRule* transaction_rule = nullptr;
  for (const auto& rule : offer.request_pricing) {
    if (rule.verbs.contains(verb)) explicit_rule = &rule;
    if (rule.verbs.contains(RequestVerb::TRANSACTION)) transaction_rule = &rule;
  }
  const RequestFeeRule* rule = explicit_rule ? explicit_rule : transaction_rule;
  if (rule == nullptr) return {};

  RequestCharge charge;
  charge.category = (explicit_rule != nullptr) ? rule->category : DefaultCategory(verb);
  charge.fee_status = rule->fee_status;
  if (rule->fee_status == FeeStatus::Charged && rule->cost_per_request) {
    charge.cost_per_request = CanonicalPrice(*rule->cost_per_request).amount;
  }
  return charge;
}

std::vector<RegionalPrice> MergeRegionalPrices(const std::vector<std::pair<Location, Price>>& entries) {
  std::set<Location> seen;
  std::vector<RegionalPrice> groups;
  for (const auto& [location, price] : entries) {
    if (!seen.insert(location).second) {
      throw DuplicateRegionError("duplicate regional price for " + ToString(location));
    }
    auto it = std::find_if(groups.begin(), groups.end(), [&](const RegionalPrice& g) { return g.price == price; });
    if (it == groups.end()) {
      groups.push_back({{location}, price});
    } else {
      it->locations.push_back(location);
    }
  }
  return groups;
}

Price CanonicalPrice(const Price& price) {
  Price out = price;
  double amount = price.amount / price.per;
  switch (price.basis) {
    case PriceBasis::RamHour:
    case PriceBasis::GbMonth:
    case PriceBasis::Gb:
      amount /= ToGb(price.size_unit);
      break;
    default:
      break;
  }
  out.amount = amount;
  out.per = 1.0;
  out.size_unit = Unit::GB;
  return out;
}

Offer NormalizeOffer(const Offer& raw) {
  if (auto report = ValidateOffer(raw); !report.empty()) {
    throw RejectedOfferError({{IdOf(raw), std::move(report)}});
  }
  Offer canonical = std::visit([](const auto& o) { return Convert(o); }, raw);
  if (auto report = ValidateOffer(canonical); !report.empty()) {
    throw RejectedOfferError({{IdOf(raw), std::move(report)}});
  }
  return canonical;
}

}  // namespace cloudmatch

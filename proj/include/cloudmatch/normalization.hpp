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

#ifndef CLOUDMATCH_NORMALIZATION_HPP_
#define CLOUDMATCH_NORMALIZATION_HPP_

#include <span>
#include <utility>
#include <vector>

#include "cloudmatch/model.hpp"
#include "cloudmatch/units.hpp"

namespace cloudmatch {

// Multiplicative edge in the unit conversion graph: 1 `from` = factor `to`.
struct ConversionRule {
  Unit from;
  Unit to;
  double factor;
};

// Sizes use the binary scale (1 GB = 1024 MB). ECU maps onto GHz with the
// conservative lower bound of its 1.0-1.2 GHz interval. Months are
// kDefaultMonthLengthDays long.
std::span<const ConversionRule> ConversionRules();

// Throws IncompatibleUnitsError when the units belong to different
// dimensions.
Quantity ConvertQuantity(const Quantity& q, Unit target);

struct ClockInterval {
  Quantity low;
  Quantity high;
};

// Throws InvalidRatingError for ratings <= 0 (or non-finite).
ClockInterval EcuToClockInterval(double ecus);

struct RequestCharge {
  RequestCategory category = RequestCategory::Other;
  FeeStatus fee_status = FeeStatus::Unspecified;
  double cost_per_request = 0.0;

  friend bool operator==(const RequestCharge&, const RequestCharge&) = default;
};

// An explicit rule for the verb wins over a TRANSACTION rule. Verbs billed
// through a TRANSACTION rule report their default category. Free and
// Unspecified rules cost nothing; no rule at all is (Other, Unspecified, 0).
// Expects `offer` to carry canonical prices.
RequestCharge CategorizeRequest(const Provider& provider, const StorageOffer& offer, RequestVerb verb);
RequestCharge CategorizeRequest(const StorageOffer& offer, RequestVerb verb);

// Groups locations sharing an identical price. Groups appear in the order
// their price first occurs and keep input order inside. Throws
// DuplicateRegionError when a location repeats.
std::vector<RegionalPrice> MergeRegionalPrices(const std::vector<std::pair<Location, Price>>& entries);

// Rescales to per-1 and per-GB denominators.
Price CanonicalPrice(const Price& price);

// Converts every quantity and price to canonical form and merges regional
// prices. Throws RejectedOfferError when the raw or the converted offer
// violates a constraint. Canonical offers are a fixed point.
Offer NormalizeOffer(const Offer& raw);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_NORMALIZATION_HPP_

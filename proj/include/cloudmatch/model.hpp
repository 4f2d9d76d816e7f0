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

#ifndef CLOUDMATCH_MODEL_HPP_
#define CLOUDMATCH_MODEL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cloudmatch/units.hpp"

namespace cloudmatch {

enum class Continent { NorthAmerica, SouthAmerica, Africa, Europe, Asia, Australia };

std::string_view ToString(Continent continent);
// Accepts both "NorthAmerica" and "North America".
std::optional<Continent> ParseContinent(std::string_view text);

struct Location {
  Continent continent = Continent::NorthAmerica;
  std::optional<std::string> region;

  // A continent-only location covers every region on that continent.
  bool Covers(const Location& other) const {
    return continent == other.continent && (!region || region == other.region);
  }

  friend auto operator<=>(const Location&, const Location&) = default;
};

std::string ToString(const Location& location);
// "Europe" or "Europe:eu-west-1".
std::optional<Location> ParseLocation(std::string_view text);

struct Provider {
  std::string name;
  std::string currency;
  // Canonical concept ("ComputeService") -> provider marketing name.
  std::map<std::string, std::string> terminology;
  std::optional<std::string> deployment_model;

  friend bool operator==(const Provider&, const Provider&) = default;
};

enum class PlanType { PayAsYouGo, Prepaid, ReducedRedundancy };
enum class BillingUnit { PerHour, PerRamHour, PerGbMonth, PerRequest, PerGbTransferred };
enum class HourRounding { Ceil, Exact };

std::string_view ToString(PlanType type);
std::string_view ToString(BillingUnit unit);
std::string_view ToString(HourRounding rounding);
std::optional<PlanType> ParsePlanType(std::string_view text);
std::optional<BillingUnit> ParseBillingUnit(std::string_view text);
std::optional<HourRounding> ParseHourRounding(std::string_view text);

// Price basis a plan's usage rate is quoted in.
PriceBasis RateBasis(BillingUnit unit);

constexpr int kDefaultMonthLengthDays = 31;

struct RegionalPrice {
  std::vector<Location> locations;
  Price price;

  friend bool operator==(const RegionalPrice&, const RegionalPrice&) = default;
};

struct PricePlan {
  PlanType plan_type = PlanType::PayAsYouGo;
  BillingUnit billing_unit = BillingUnit::PerHour;
  // Usage rate for metered plans, period fee for prepaid plans.
  Price cost_per_period;
  Quantity period_length{1.0, Unit::Hour};
  std::optional<Quantity> included_capacity;
  std::optional<Price> cost_over_limit;
  std::vector<RegionalPrice> regional_prices;
  int month_length_days = kDefaultMonthLengthDays;
  HourRounding hour_rounding = HourRounding::Ceil;

  friend bool operator==(const PricePlan&, const PricePlan&) = default;
};

enum class RequestVerb { PUT, COPY, POST, LIST, GET, HEAD, DELETE, SEARCH, TRANSACTION };
enum class RequestCategory { Upload, Download, Other };
enum class FeeStatus { Charged, Free, Unspecified };

inline constexpr RequestVerb kAllVerbs[] = {
    RequestVerb::PUT,  RequestVerb::COPY,   RequestVerb::POST,   RequestVerb::LIST,       RequestVerb::GET,
    RequestVerb::HEAD, RequestVerb::DELETE, RequestVerb::SEARCH, RequestVerb::TRANSACTION};

std::string_view ToString(RequestVerb verb);
std::string_view ToString(RequestCategory category);
std::string_view ToString(FeeStatus status);
std::optional<RequestVerb> ParseVerb(std::string_view text);
std::optional<RequestCategory> ParseRequestCategory(std::string_view text);
std::optional<FeeStatus> ParseFeeStatus(std::string_view text);

// Category a verb falls into when it is billed through a flat
// TRANSACTION rule.
RequestCategory DefaultCategory(RequestVerb verb);

struct RequestFeeRule {
  std::set<RequestVerb> verbs;
  RequestCategory category = RequestCategory::Other;
  FeeStatus fee_status = FeeStatus::Unspecified;
  std::optional<Price> cost_per_request;

  friend bool operator==(const RequestFeeRule&, const RequestFeeRule&) = default;
};

enum class AddressSize { Bits32, Bits64 };
std::string_view ToString(AddressSize size);
std::optional<AddressSize> ParseAddressSize(std::string_view text);

struct ComputeOffer {
  std::string id;
  std::string provider;
  std::string name;
  std::int64_t cores = 1;
  Quantity clock_speed{1.0, Unit::GHz};
  Quantity memory{1.0, Unit::GB};
  std::optional<AddressSize> memory_address_size;
  std::optional<Quantity> local_storage;
  std::optional<std::string> virtualization;
  bool clustered = false;
  std::vector<Location> locations;
  std::vector<std::string> supported_networks;
  std::vector<PricePlan> plans;

  friend bool operator==(const ComputeOffer&, const ComputeOffer&) = default;
};

enum class StorageKind { LocalStorage, NetworkStorage, BlockStorage, ObjectStorage };
std::string_view ToString(StorageKind kind);
std::optional<StorageKind> ParseStorageKind(std::string_view text);

struct StorageOffer {
  std::string id;
  std::string provider;
  std::string name;
  StorageKind kind = StorageKind::ObjectStorage;
  Quantity size_min{0.0, Unit::GB};
  Quantity size_max{1.0, Unit::GB};
  // Glob patterns ('*', '?') over compute offer ids.
  std::vector<std::string> attachable_to;
  std::vector<Location> locations;
  std::vector<RequestFeeRule> request_pricing;
  std::vector<PricePlan> plans;

  friend bool operator==(const StorageOffer&, const StorageOffer&) = default;
};

struct NetworkOffer {
  std::string id;
  std::string provider;
  std::string name;
  std::optional<Quantity> bandwidth;
  std::vector<std::string> protocols;
  Price cost_data_transfer_in;
  Price cost_data_transfer_out;
  std::vector<Location> locations;

  friend bool operator==(const NetworkOffer&, const NetworkOffer&) = default;
};

enum class OfferKind { Compute, Storage, Network };
std::string_view ToString(OfferKind kind);
std::optional<OfferKind> ParseOfferKind(std::string_view text);

using Offer = std::variant<ComputeOffer, StorageOffer, NetworkOffer>;

OfferKind KindOf(const Offer& offer);
const std::string& IdOf(const Offer& offer);
const std::string& ProviderOf(const Offer& offer);

enum class QosKind { MeasurableAttribute, UnmeasurableAttribute, Metric };
std::string_view ToString(QosKind kind);
std::optional<QosKind> ParseQosKind(std::string_view text);

struct QosTaxonomyEntry {
  std::string name;
  QosKind kind = QosKind::MeasurableAttribute;
  std::optional<std::string> parent;
  std::optional<std::string> linked_metric;

  friend bool operator==(const QosTaxonomyEntry&, const QosTaxonomyEntry&) = default;
};

struct UsageScenario {
  double compute_hours = 0.0;
  std::int64_t instance_count = 0;
  std::int64_t min_cores = 0;
  double min_memory_gb = 0.0;
  std::optional<double> min_clock_ghz;
  double storage_gb = 0.0;
  double storage_duration_days = 0.0;
  bool persistent_storage_required = false;
  std::map<RequestVerb, std::uint64_t> request_counts;
  double transfer_in_gb = 0.0;
  double transfer_out_gb = 0.0;
  std::optional<Location> location;
  std::optional<std::string> name_regex;
  // Restricts ranking to offers priced in this currency.
  std::optional<std::string> currency;
};

// Throws QueryError when a numeric field is negative or non-finite or the
// regex does not compile.
void ValidateScenario(const UsageScenario& scenario);

bool IsValidOfferId(std::string_view id);

// Glob match over offer ids: '*' matches any run, '?' one character.
bool GlobMatch(std::string_view pattern, std::string_view text);
bool IsValidAttachPattern(std::string_view pattern);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_MODEL_HPP_

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

#include "cloudmatch/model.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "cloudmatch/errors.hpp"
#include "cloudmatch/name_regex.hpp"

namespace cloudmatch {

namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

template <typename E, std::size_t N>
std::string_view Lookup(const NameTable<E, N>& table, E value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> ReverseLookup(const NameTable<E, N>& table, std::string_view text) {
  for (const auto& [e, name] : table) {
    if (name == text) return e;
  }
  return std::nullopt;
}

constexpr NameTable<Continent, 6> kContinents{{
    {Continent::NorthAmerica, "NorthAmerica"},
    {Continent::SouthAmerica, "SouthAmerica"},
    {Continent::Africa, "Africa"},
    {Continent::Europe, "Europe"},
    {Continent::Asia, "Asia"},
    {Continent::Australia, "Australia"},
}};

constexpr NameTable<PlanType, 3> kPlanTypes{{
    {PlanType::PayAsYouGo, "PayAsYouGo"},
    {PlanType::Prepaid, "Prepaid"},
    {PlanType::ReducedRedundancy, "ReducedRedundancy"},
}};

constexpr NameTable<BillingUnit, 5> kBillingUnits{{
    {BillingUnit::PerHour, "PerHour"},
    {BillingUnit::PerRamHour, "PerRamHour"},
    {BillingUnit::PerGbMonth, "PerGbMonth"},
    {BillingUnit::PerRequest, "PerRequest"},
    {BillingUnit::PerGbTransferred, "PerGbTransferred"},
}};

constexpr NameTable<HourRounding, 2> kHourRoundings{{
    {HourRounding::Ceil, "ceil"},
    {HourRounding::Exact, "exact"},
}};

constexpr NameTable<RequestVerb, 9> kVerbs{{
    {RequestVerb::PUT, "PUT"},
    {RequestVerb::COPY, "COPY"},
    {RequestVerb::POST, "POST"},
    {RequestVerb::LIST, "LIST"},
    {RequestVerb::GET, "GET"},
    {RequestVerb::HEAD, "HEAD"},
    {RequestVerb::DELETE, "DELETE"},
    {RequestVerb::SEARCH, "SEARCH"},
    {RequestVerb::TRANSACTION, "TRANSACTION"},
}};

constexpr NameTable<RequestCategory, 3> kCategories{{
    {RequestCategory::Upload, "Upload"},
    {RequestCategory::Download, "Download"},
    {RequestCategory::Other, "Other"},
}};

constexpr NameTable<FeeStatus, 3> kFeeStatuses{{
    {FeeStatus::Charged, "Charged"},
    {FeeStatus::Free, "Free"},
    {FeeStatus::Unspecified, "Unspecified"},
}};

constexpr NameTable<AddressSize, 2> kAddressSizes{{
    {AddressSize::Bits32, "32-bit"},
    {AddressSize::Bits64, "64-bit"},
}};

constexpr NameTable<StorageKind, 4> kStorageKinds{{
    {StorageKind::LocalStorage, "LocalStorage"},
    {StorageKind::NetworkStorage, "NetworkStorage"},
    {StorageKind::BlockStorage, "BlockStorage"},
    {StorageKind::ObjectStorage, "ObjectStorage"},
}};

constexpr NameTable<OfferKind, 3> kOfferKinds{{
    {OfferKind::Compute, "compute"},
    {OfferKind::Storage, "storage"},
    {OfferKind::Network, "network"},
}};

constexpr NameTable<QosKind, 3> kQosKinds{{
    {QosKind::MeasurableAttribute, "MeasurableAttribute"},
    {QosKind::UnmeasurableAttribute, "UnmeasurableAttribute"},
    {QosKind::Metric, "Metric"},
}};

std::string StripSpaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ') out += c;
  }
  return out;
}

}  // namespace

std::string_view ToString(Continent continent) { return Lookup(kContinents, continent); }

std::optional<Continent> ParseContinent(std::string_view text) {
  return ReverseLookup(kContinents, std::string_view(StripSpaces(text)));
}

std::string ToString(const Location& location) {
  std::string out(ToString(location.continent));
  if (location.region) out += ":" + *location.region;
  return out;
}

std::optional<Location> ParseLocation(std::string_view text) {
  const auto colon = text.find(':');
  const auto continent = ParseContinent(text.substr(0, colon));
  if (!continent) return std::nullopt;
  Location location{*continent, std::nullopt};
  if (colon != std::string_view::npos) {
    const auto region = text.substr(colon + 1);
    if (region.empty()) return std::nullopt;
    location.region = std::string(region);
  }
  return location;
}

std::string_view ToString(PlanType type) { return Lookup(kPlanTypes, type); }
std::string_view ToString(BillingUnit unit) { return Lookup(kBillingUnits, unit); }
std::string_view ToString(HourRounding rounding) { return Lookup(kHourRoundings, rounding); }
std::optional<PlanType> ParsePlanType(std::string_view text) { return ReverseLookup(kPlanTypes, text); }
std::optional<BillingUnit> ParseBillingUnit(std::string_view text) { return ReverseLookup(kBillingUnits, text); }
std::optional<HourRounding> ParseHourRounding(std::string_view text) {
  return ReverseLookup(kHourRoundings, text);
}

PriceBasis RateBasis(BillingUnit unit) {
  switch (unit) {
    case BillingUnit::PerHour:
      return PriceBasis::Hour;
    case BillingUnit::PerRamHour:
      return PriceBasis::RamHour;
    case BillingUnit::PerGbMonth:
      return PriceBasis::GbMonth;
    case BillingUnit::PerRequest:
      return PriceBasis::Request;
    case BillingUnit::PerGbTransferred:
      return PriceBasis::Gb;
  }
  return PriceBasis::Flat;
}

std::string_view ToString(RequestVerb verb) { return Lookup(kVerbs, verb); }
std::string_view ToString(RequestCategory category) { return Lookup(kCategories, category); }
std::string_view ToString(FeeStatus status) { return Lookup(kFeeStatuses, status); }
std::optional<RequestVerb> ParseVerb(std::string_view text) { return ReverseLookup(kVerbs, text); }
std::optional<RequestCategory> ParseRequestCategory(std::string_view text) {
  return ReverseLookup(kCategories, text);
}
std::optional<FeeStatus> ParseFeeStatus(std::string_view text) { return ReverseLookup(kFeeStatuses, text); }

RequestCategory DefaultCategory(RequestVerb verb) {
  switch (verb) {
    case RequestVerb::PUT:
    case RequestVerb::COPY:
    case RequestVerb::POST:
    case RequestVerb::LIST:
      return RequestCategory::Upload;
    case RequestVerb::GET:
    case RequestVerb::HEAD:
    case RequestVerb::SEARCH:
      return RequestCategory::Download;
    case RequestVerb::DELETE:
    case RequestVerb::TRANSACTION:
      return RequestCategory::Other;
  }
  return RequestCategory::Other;
}

std::string_view ToString(AddressSize size) { return Lookup(kAddressSizes, size); }
std::optional<AddressSize> ParseAddressSize(std::string_view text) { return ReverseLookup(kAddressSizes, text); }

std::string_view ToString(StorageKind kind) { return Lookup(kStorageKinds, kind); }
std::optional<StorageKind> ParseStorageKind(std::string_view text) { return ReverseLookup(kStorageKinds, text); }

std::string_view ToString(OfferKind kind) { return Lookup(kOfferKinds, kind); }
std::optional<OfferKind> ParseOfferKind(std::string_view text) { return ReverseLookup(kOfferKinds, text); }

OfferKind KindOf(const Offer& offer) { return static_cast<OfferKind>(offer.index()); }

const std::string& IdOf(const Offer& offer) {
  return std::visit([](const auto& o) -> const std::string& { return o.id; }, offer);
}

const std::string& ProviderOf(const Offer& offer) {
  return std::visit([](const auto& o) -> const std::string& { return o.provider; }, offer);
}

std::string_view ToString(QosKind kind) { return Lookup(kQosKinds, kind); }
std::optional<QosKind> ParseQosKind(std::string_view text) { return ReverseLookup(kQosKinds, text); }

void ValidateScenario(const UsageScenario& s) {
  const auto check = [](const char* field, double value) {
    if (!std::isfinite(value) || value < 0.0) {
      throw QueryError(std::string("scenario.") + field + " must be a finite value >= 0");
    }
  };
  check("compute_hours", s.compute_hours);
  check("instance_count", static_cast<double>(s.instance_count));
  check("min_cores", static_cast<double>(s.min_cores));
  check("min_memory_gb", s.min_memory_gb);
  if (s.min_clock_ghz) check("min_clock_ghz", *s.min_clock_ghz);
  check("storage_gb", s.storage_gb);
  check("storage_duration_days", s.storage_duration_days);
  check("transfer_in_gb", s.transfer_in_gb);
  check("transfer_out_gb", s.transfer_out_gb);
  if (s.name_regex) NameRegex{*s.name_regex};
}

bool IsValidOfferId(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')) return false;
  }
  return true;
}

bool GlobMatch(std::string_view pattern, std::string_view text) {
  std::size_t p = 0;
  std::size_t t = 0;
  std::size_t star = std::string_view::npos;
  std::size_t resume = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      resume = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++resume;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

bool IsValidAttachPattern(std::string_view pattern) {
  if (pattern.empty()) return false;
  for (char c : pattern) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '*' || c == '?')) return false;
  }
  return true;
}

}  // namespace cloudmatch

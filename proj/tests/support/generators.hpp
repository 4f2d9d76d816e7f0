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

#ifndef CLOUDMATCH_TESTS_SUPPORT_GENERATORS_HPP_
#define CLOUDMATCH_TESTS_SUPPORT_GENERATORS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

// Random catalogs in a plain model of their own. The JSON written for the
// library mixes raw units (MB, TB, "USD/1024 request") while the structs
// keep canonical values, so oracles never touch library types.
//
// All quantities are dyadic so every sum is exact in double precision and
// ties in totals are real ties.
namespace cmtest {

struct GLoc {
  std::string continent;
  std::string region;  // empty: whole continent

  bool Covers(const GLoc& other) const {
    return continent == other.continent && (region.empty() || region == other.region);
  }
  std::string Text() const { return region.empty() ? continent : continent + ":" + region; }
  friend bool operator==(const GLoc&, const GLoc&) = default;
};

struct GPlan {
  bool prepaid = false;
  bool ram_hours = false;    // compute only
  bool exact_hours = false;  // compute only
  double rate = 0.0;         // usage rate, or the period fee when prepaid
  double period = 1.0;       // hours (compute) or days (storage)
  double included = 0.0;
  double over = 0.0;
  std::vector<std::pair<std::vector<GLoc>, double>> regional;
  int style = 0;  // raw rendering choices, see ToJson
};

struct GRule {
  std::vector<std::string> verbs;
  std::string category;
  std::string fee_status;
  double cost = 0.0;  // per single request
};

struct GCompute {
  std::string id, provider, name;
  std::int64_t cores = 1;
  double clock_ghz = 1.0;
  double memory_gb = 1.0;
  std::optional<std::string> address_size;
  std::optional<double> local_gb;
  std::optional<std::string> virtualization;
  bool clustered = false;
  std::vector<GLoc> locations;
  std::vector<std::string> networks;
  std::vector<GPlan> plans;
  int style = 0;
};

struct GStorage {
  std::string id, provider, name, kind;
  double min_gb = 0.0;
  double max_gb = 1.0;
  std::vector<std::string> attachable_to;
  std::vector<GLoc> locations;
  std::vector<GRule> rules;
  std::vector<GPlan> plans;
  int style = 0;
};

struct GNetwork {
  std::string id, provider, name;
  std::optional<double> bandwidth_mbps;
  std::vector<std::string> protocols;
  double in = 0.0;
  double out = 0.0;
  std::vector<GLoc> locations;
  int style = 0;
};

struct GCatalog {
  std::vector<std::pair<std::string, std::string>> providers;  // name, currency
  std::vector<GCompute> compute;
  std::vector<GStorage> storage;
  std::vector<GNetwork> network;

  nlohmann::json ToJson() const;
  std::string Currency(const std::string& provider) const;
};

struct GLimits {
  int max_providers = 3;
  int max_per_kind = 20;
  int max_plans = 3;
  // Give each provider its own currency (exercises currency filtering).
  bool mixed_currency = false;
};

GCatalog RandomCatalog(std::mt19937_64& rng, const GLimits& limits);

struct GScenario {
  double hours = 0.0;
  std::int64_t instances = 1;
  std::int64_t min_cores = 0;
  double min_memory_gb = 0.0;
  std::optional<double> min_clock_ghz;
  double storage_gb = 0.0;
  double days = 0.0;
  bool persistent = false;
  std::map<std::string, std::uint64_t> requests;
  double in_gb = 0.0;
  double out_gb = 0.0;
  std::optional<GLoc> location;
  std::optional<std::string> name_regex;
  std::optional<std::string> currency;

  nlohmann::json ToJson() const;
};

GScenario RandomScenario(std::mt19937_64& rng, const GCatalog& catalog);

// A match query expressed with the HTTP parameter names.
struct GQuery {
  std::string kind;
  std::map<std::string, std::string> params;
};

GQuery RandomQuery(std::mt19937_64& rng, const GCatalog& catalog);

// Regexes the generated names are drawn to hit and miss.
const std::vector<std::string>& RegexPool();
const std::vector<std::string>& VerbPool();

}  // namespace cmtest

#endif  // CLOUDMATCH_TESTS_SUPPORT_GENERATORS_HPP_

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

#ifndef CLOUDMATCH_RECOMMEND_HPP_
#define CLOUDMATCH_RECOMMEND_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cloudmatch/catalog.hpp"
#include "cloudmatch/cost.hpp"
#include "cloudmatch/model.hpp"

namespace cloudmatch {

inline constexpr std::size_t kDefaultTopK = 10;
inline constexpr std::size_t kUnboundedTopK = std::numeric_limits<std::size_t>::max();

struct Recommendation {
  std::size_t rank = 0;
  std::string provider;
  std::string compute_id;
  std::optional<std::string> storage_id;
  std::optional<std::string> network_id;
  BundleQuote quote;
  std::int64_t catalog_version = 0;
};

// What a scenario asks each bundle to contain.
struct BundleShape {
  bool needs_storage = false;
  bool needs_network = false;
};

BundleShape ShapeOf(const UsageScenario& scenario);

// All same-provider bundles satisfying the scenario, unpriced and in
// catalog order. Storage is required when the scenario stores data or
// issues requests (attachable storage when persistence is required);
// network is required when any data is transferred and must be supported
// by the compute offer when it lists networks.
std::vector<Bundle> FeasibleBundles(const Catalog& view, const UsageScenario& scenario);

// Prices every feasible bundle and returns the cheapest `top_k`, ties by
// (provider, compute id, storage id, network id). Throws QueryError for an
// invalid scenario or top_k == 0 and CurrencyError when feasible bundles
// are priced in more than one currency (set scenario.currency to pick one).
std::vector<Recommendation> Recommend(const Catalog& view, const UsageScenario& scenario,
                                      std::size_t top_k = kDefaultTopK);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_RECOMMEND_HPP_

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

#include "cloudmatch/recommend.hpp"

#include <algorithm>
#include <tuple>

#include "cloudmatch/errors.hpp"
#include "cloudmatch/matching.hpp"

namespace cloudmatch {

namespace {

MatchQuery ComputeQueryFor(const UsageScenario& s) {
  MatchQuery q;
  q.kind = OfferKind::Compute;
  if (s.min_cores > 0) q.min_cores = s.min_cores;
  if (s.min_memory_gb > 0.0) q.min_memory_gb = s.min_memory_gb;
  q.min_clock_ghz = s.min_clock_ghz;
  q.location = s.location;
  q.name_regex = s.name_regex;
  return q;
}

bool Supports(const ComputeOffer& compute, const NetworkOffer& network) {
  if (network.provider != compute.provider) return false;
  if (compute.supported_networks.empty()) return true;
  return std::find(compute.supported_networks.begin(), compute.supported_networks.end(), network.id) !=
         compute.supported_networks.end();
}

}  // namespace

BundleShape ShapeOf(const UsageScenario& s) {
  BundleShape shape;
  const bool requests = std::any_of(s.request_counts.begin(), s.request_counts.end(),
                                    [](const auto& entry) { return entry.second > 0; });
  shape.needs_storage = s.persistent_storage_required || s.storage_gb > 0.0 || requests;
  shape.needs_network = s.transfer_in_gb > 0.0 || s.transfer_out_gb > 0.0;
  return shape;
}

std::vector<Bundle> FeasibleBundles(const Catalog& view, const UsageScenario& scenario) {
  ValidateScenario(scenario);
  if (scenario.persistent_storage_required && !(scenario.storage_gb > 0.0)) {
    throw QueryError("persistent storage requires storage_gb > 0");
  }
  const BundleShape shape = ShapeOf(scenario);
  const MatchQuery compute_query = ComputeQueryFor(scenario);
  const auto computes = MatchCompute(view, compute_query);

  MatchQuery storage_query;
  storage_query.kind = OfferKind::Storage;
  // Bounds apply only when data is stored; request-only usage fits any offer.
  if (scenario.storage_gb > 0.0) storage_query.size_gb = scenario.storage_gb;
  storage_query.location = scenario.location;
  const auto storages = shape.needs_storage ? MatchStorage(view, storage_query) : std::vector<StorageOffer>{};

  MatchQuery network_query;
  network_query.kind = OfferKind::Network;
  network_query.location = scenario.location;
  const auto networks = shape.needs_network ? MatchNetwork(view, network_query) : std::vector<NetworkOffer>{};

  const auto in_currency = [&](const std::string& provider) {
    if (!scenario.currency) return true;
    const Provider* p = view.FindProvider(provider);
    return p != nullptr && p->currency == *scenario.currency;
  };

  std::vector<Bundle> bundles;
  for (const auto& c : computes) {
    if (!in_currency(c.provider)) continue;
    const ComputeOffer* compute = view.FindCompute(c.id);

    std::vector<const StorageOffer*> storage_options;
    if (shape.needs_storage) {
      for (const auto& s : storages) {
        if (s.provider != c.provider) continue;
        if (scenario.persistent_storage_required && !CanAttach(s, c)) continue;
        storage_options.push_back(view.FindStorage(s.id));
      }
      if (storage_options.empty()) continue;
    } else {
      storage_options.push_back(nullptr);
    }

    std::vector<const NetworkOffer*> network_options;
    if (shape.needs_network) {
      for (const auto& n : networks) {
        if (Supports(c, n)) network_options.push_back(view.FindNetwork(n.id));
      }
      if (network_options.empty()) continue;
    } else {
      network_options.push_back(nullptr);
    }

    for (const StorageOffer* s : storage_options) {
      for (const NetworkOffer* n : network_options) bundles.push_back({compute, s, n});
    }
  }
  return bundles;
}

std::vector<Recommendation> Recommend(const Catalog& view, const UsageScenario& scenario, std::size_t top_k) {
  if (top_k == 0) throw QueryError("top_k must be >= 1");
  const auto bundles = FeasibleBundles(view, scenario);

  std::vector<Recommendation> recs;
  recs.reserve(bundles.size());
  for (const auto& bundle : bundles) {
    Recommendation rec;
    rec.provider = bundle.compute->provider;
    rec.compute_id = bundle.compute->id;
    if (bundle.storage) rec.storage_id = bundle.storage->id;
    if (bundle.network) rec.network_id = bundle.network->id;
    rec.quote = BundleCost(bundle, scenario);
    rec.catalog_version = view.version;
    recs.push_back(std::move(rec));
  }

  for (const auto& rec : recs) {
    if (rec.quote.breakdown.currency != recs.front().quote.breakdown.currency) {
      throw CurrencyError("feasible offers are priced in " + recs.front().quote.breakdown.currency + " and " +
                          rec.quote.breakdown.currency + "; set a currency to rank within one");
    }
  }

  const auto key = [](const Recommendation& r) {
    return std::make_tuple(r.quote.breakdown.total, std::cref(r.provider), std::cref(r.compute_id),
                           r.storage_id.value_or(""), r.network_id.value_or(""));
  };
  std::sort(recs.begin(), recs.end(), [&](const Recommendation& a, const Recommendation& b) { return key(a) < key(b); });
  if (recs.size() > top_k) recs.resize(top_k);
  for (std::size_t i = 0; i < recs.size(); ++i) recs[i].rank = i + 1;
  return recs;
}

}  // namespace cloudmatch

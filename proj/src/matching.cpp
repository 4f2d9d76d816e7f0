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

#include "cloudmatch/matching.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "cloudmatch/errors.hpp"
#include "cloudmatch/name_regex.hpp"

namespace cloudmatch {

namespace {

constexpr std::array<std::string_view, 12> kComputeColumns{
    "id",  "provider", "name", "cores", "clock_speed", "memory", "memory_address_size", "local_storage",
    "virtualization", "clustered", "locations", "supported_networks"};

constexpr std::array<std::string_view, 8> kStorageColumns{
    "id", "provider", "name", "kind", "size_min", "size_max", "attachable_to", "locations"};

constexpr std::array<std::string_view, 8> kNetworkColumns{
    "id", "provider", "name", "bandwidth", "protocols", "cost_data_transfer_in", "cost_data_transfer_out", "locations"};

std::string JoinLocations(const std::vector<Location>& locations) {
  std::string out;
  for (const auto& loc : locations) {
    if (!out.empty()) out += ",";
    out += ToString(loc);
  }
  return out;
}

std::string JoinStrings(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ",";
    out += item;
  }
  return out;
}

[[noreturn]] void UnknownColumn(OfferKind kind, std::string_view column) {
  throw QueryError("unknown " + std::string(ToString(kind)) + " column '" + std::string(column) + "'");
}

bool LocatedIn(const std::vector<Location>& locations, const std::optional<Location>& wanted) {
  if (!wanted) return true;
  return std::any_of(locations.begin(), locations.end(), [&](const Location& l) { return wanted->Covers(l); });
}

void RequireKind(const MatchQuery& query, OfferKind kind) {
  if (query.kind != kind) {
    throw QueryError("query targets " + std::string(ToString(query.kind)) + ", not " + std::string(ToString(kind)));
  }
}

void CheckSortKey(const MatchQuery& query) {
  if (!query.sort_key) return;
  const auto names = ColumnNames(query.kind);
  if (std::find(names.begin(), names.end(), *query.sort_key) == names.end()) {
    throw QueryError("unknown sort key '" + *query.sort_key + "' for " + std::string(ToString(query.kind)));
  }
}

template <typename T, typename Pred>
std::vector<T> Select(const std::vector<T>& offers, const MatchQuery& query, Pred accept) {
  CheckSortKey(query);
  std::optional<NameRegex> regex;
  if (query.name_regex) regex.emplace(*query.name_regex);

  std::vector<T> out;
  for (const auto& o : offers) {
    if (!LocatedIn(o.locations, query.location)) continue;
    if (regex && !regex->Matches(o.name)) continue;
    if (!accept(o)) continue;
    out.push_back(o);
  }

  // Decorate with the sort cell once per offer.
  std::vector<std::pair<Cell, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    keys.emplace_back(query.sort_key ? ColumnValue(out[i], *query.sort_key) : Cell{}, i);
  }
  const bool descending = query.order == SortOrder::Descending;
  std::sort(keys.begin(), keys.end(), [&](const auto& a, const auto& b) {
    if (CellLess(a.first, b.first)) return !descending;
    if (CellLess(b.first, a.first)) return descending;
    const T& x = out[a.second];
    const T& y = out[b.second];
    return std::tie(x.provider, x.id) < std::tie(y.provider, y.id);
  });
  std::vector<T> sorted;
  sorted.reserve(out.size());
  for (const auto& [cell, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace

std::span<const std::string_view> ColumnNames(OfferKind kind) {
  switch (kind) {
    case OfferKind::Compute:
      return kComputeColumns;
    case OfferKind::Storage:
      return kStorageColumns;
    case OfferKind::Network:
      return kNetworkColumns;
  }
  return {};
}

Cell ColumnValue(const ComputeOffer& o, std::string_view column) {
  if (column == "id") return o.id;
  if (column == "provider") return o.provider;
  if (column == "name") return o.name;
  if (column == "cores") return o.cores;
  if (column == "clock_speed") return o.clock_speed.value;
  if (column == "memory") return o.memory.value;
  if (column == "memory_address_size") {
    return o.memory_address_size ? Cell{std::string(ToString(*o.memory_address_size))} : Cell{};
  }
  if (column == "local_storage") return o.local_storage ? Cell{o.local_storage->value} : Cell{};
  if (column == "virtualization") return o.virtualization ? Cell{*o.virtualization} : Cell{};
  if (column == "clustered") return o.clustered;
  if (column == "locations") return JoinLocations(o.locations);
  if (column == "supported_networks") return JoinStrings(o.supported_networks);
  UnknownColumn(OfferKind::Compute, column);
}

Cell ColumnValue(const StorageOffer& o, std::string_view column) {
  if (column == "id") return o.id;
  if (column == "provider") return o.provider;
  if (column == "name") return o.name;
  if (column == "kind") return std::string(ToString(o.kind));
  if (column == "size_min") return o.size_min.value;
  if (column == "size_max") return o.size_max.value;
  if (column == "attachable_to") return JoinStrings(o.attachable_to);
  if (column == "locations") return JoinLocations(o.locations);
  UnknownColumn(OfferKind::Storage, column);
}

Cell ColumnValue(const NetworkOffer& o, std::string_view column) {
  if (column == "id") return o.id;
  if (column == "provider") return o.provider;
  if (column == "name") return o.name;
  if (column == "bandwidth") return o.bandwidth ? Cell{o.bandwidth->value} : Cell{};
  if (column == "protocols") return JoinStrings(o.protocols);
  if (column == "cost_data_transfer_in") return o.cost_data_transfer_in.amount;
  if (column == "cost_data_transfer_out") return o.cost_data_transfer_out.amount;
  if (column == "locations") return JoinLocations(o.locations);
  UnknownColumn(OfferKind::Network, column);
}

bool CellLess(const Cell& a, const Cell& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return a < b;
}

std::vector<ComputeOffer> MatchCompute(const Catalog& view, const MatchQuery& query) {
  RequireKind(query, OfferKind::Compute);
  return Select(view.compute, query, [&](const ComputeOffer& o) {
    if (query.min_cores && o.cores < *query.min_cores) return false;
    if (query.min_memory_gb && o.memory.value < *query.min_memory_gb) return false;
    if (query.min_clock_ghz && o.clock_speed.value < *query.min_clock_ghz) return false;
    return true;
  });
}

std::vector<StorageOffer> MatchStorage(const Catalog& view, const MatchQuery& query) {
  RequireKind(query, OfferKind::Storage);
  if (query.size_gb && !(*query.size_gb >= 0.0)) throw QueryError("size_gb must be >= 0");
  return Select(view.storage, query, [&](const StorageOffer& o) {
    if (query.size_gb && (*query.size_gb < o.size_min.value || *query.size_gb > o.size_max.value)) return false;
    return true;
  });
}

std::vector<NetworkOffer> MatchNetwork(const Catalog& view, const MatchQuery& query) {
  RequireKind(query, OfferKind::Network);
  return Select(view.network, query, [](const NetworkOffer&) { return true; });
}

bool CanAttach(const StorageOffer& storage, const ComputeOffer& compute) {
  if (storage.provider != compute.provider) return false;
  return std::any_of(storage.attachable_to.begin(), storage.attachable_to.end(),
                     [&](const std::string& pattern) { return GlobMatch(pattern, compute.id); });
}

std::vector<std::pair<ComputeOffer, StorageOffer>> AttachablePairs(const Catalog& view, const MatchQuery& compute_query,
                                                                   double storage_gb) {
  if (!(storage_gb > 0.0)) throw QueryError("storage size for attachable pairs must be > 0");
  const auto computes = MatchCompute(view, compute_query);
  MatchQuery storage_query;
  storage_query.kind = OfferKind::Storage;
  storage_query.size_gb = storage_gb;
  storage_query.location = compute_query.location;
  const auto storages = MatchStorage(view, storage_query);

  std::vector<std::pair<ComputeOffer, StorageOffer>> pairs;
  for (const auto& c : computes) {
    for (const auto& s : storages) {
      if (CanAttach(s, c)) pairs.emplace_back(c, s);
    }
  }
  return pairs;
}

}  // namespace cloudmatch

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

#ifndef CLOUDMATCH_CATALOG_HPP_
#define CLOUDMATCH_CATALOG_HPP_

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "cloudmatch/model.hpp"

namespace cloudmatch {

// The normalized offer store. A Catalog value is one version; writes build
// a new value and never touch an existing one.
struct Catalog {
  std::vector<Provider> providers;
  std::vector<ComputeOffer> compute;
  std::vector<StorageOffer> storage;
  std::vector<NetworkOffer> network;
  std::vector<QosTaxonomyEntry> qos;
  std::int64_t version = 0;

  const Provider* FindProvider(std::string_view name) const;
  const ComputeOffer* FindCompute(std::string_view id) const;
  const StorageOffer* FindStorage(std::string_view id) const;
  const NetworkOffer* FindNetwork(std::string_view id) const;
  std::optional<OfferKind> KindOfId(std::string_view id) const;
  std::size_t OfferCount() const { return compute.size() + storage.size() + network.size(); }

  // Content equality, ignoring version.
  bool SameContent(const Catalog& other) const;
};

// Immutable read view pinned to a single version.
using Snapshot = std::shared_ptr<const Catalog>;

// Parses, normalizes and validates a catalog document. All-or-nothing:
// throws ParseError, RejectedOfferError listing every invalid offer, or
// IntegrityError. The result has version 1.
Catalog LoadCatalog(std::string_view document);
Catalog LoadCatalogFile(const std::filesystem::path& path);

// Referential checks across the catalog (unique ids and provider names,
// known providers and networks, currency agreement, QoS forest shape).
// Throws IntegrityError.
void CheckIntegrity(const Catalog& catalog);

// Returns the next version with `raw` normalized and inserted or replacing
// the offer with the same id. Throws RejectedOfferError or IntegrityError;
// `catalog` is never modified.
Catalog UpsertOffer(const Catalog& catalog, const Offer& raw);

Snapshot MakeSnapshot(Catalog catalog);

// Single-writer holder of the live catalog. Readers take snapshots and
// never block on writers beyond a pointer copy. When a write-back path is
// set, each successful write is persisted before it becomes visible.
class Repository {
 public:
  explicit Repository(Catalog catalog, std::optional<std::filesystem::path> write_back = std::nullopt);

  Snapshot snapshot() const;
  Snapshot Upsert(const Offer& raw);
  std::int64_t version() const { return snapshot()->version; }

 private:
  mutable std::mutex current_mu_;
  std::mutex write_mu_;
  Snapshot current_;
  std::optional<std::filesystem::path> write_back_;
};

void SaveCatalogFile(const Catalog& catalog, const std::filesystem::path& path);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_CATALOG_HPP_

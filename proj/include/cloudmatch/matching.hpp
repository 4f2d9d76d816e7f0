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

#ifndef CLOUDMATCH_MATCHING_HPP_
#define CLOUDMATCH_MATCHING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cloudmatch/catalog.hpp"
#include "cloudmatch/model.hpp"

namespace cloudmatch {

enum class SortOrder { Ascending, Descending };

struct MatchQuery {
  OfferKind kind = OfferKind::Compute;
  std::optional<std::int64_t> min_cores;
  std::optional<double> min_memory_gb;
  std::optional<double> min_clock_ghz;
  // Storage only: requested capacity, matched against inclusive bounds.
  std::optional<double> size_gb;
  std::optional<Location> location;
  std::optional<std::string> name_regex;
  std::optional<std::string> sort_key;
  SortOrder order = SortOrder::Ascending;
};

// A projected table value. Absent optional fields are std::monostate.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

std::span<const std::string_view> ColumnNames(OfferKind kind);

// Throws QueryError for a column the offer type does not have.
Cell ColumnValue(const ComputeOffer& offer, std::string_view column);
Cell ColumnValue(const StorageOffer& offer, std::string_view column);
Cell ColumnValue(const NetworkOffer& offer, std::string_view column);

// Total order used for sorting: monostate first, then by value.
bool CellLess(const Cell& a, const Cell& b);

// Results are ordered by sort key (when given, in the requested direction)
// and then by (provider, id) ascending. Throw QueryError on a bad regex,
// an unknown sort key or a query for another kind.
std::vector<ComputeOffer> MatchCompute(const Catalog& view, const MatchQuery& query);
std::vector<StorageOffer> MatchStorage(const Catalog& view, const MatchQuery& query);
std::vector<NetworkOffer> MatchNetwork(const Catalog& view, const MatchQuery& query);

bool CanAttach(const StorageOffer& storage, const ComputeOffer& compute);

// Same-provider (compute, storage) pairs where the compute offer matches
// `compute_query`, the storage offer can be attached to it and
// storage_gb lies within its size bounds. The compute query's location
// also constrains the storage offer. Ordered by the compute results, then
// storage (provider, id).
std::vector<std::pair<ComputeOffer, StorageOffer>> AttachablePairs(const Catalog& view, const MatchQuery& compute_query,
                                                                   double storage_gb);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

template <typename Offer>
Table ProjectColumns(const std::vector<Offer>& rows, std::span<const std::string> columns) {
  Table table;
  table.columns.assign(columns.begin(), columns.end());
  table.rows.reserve(rows.size());
  for (const auto& offer : rows) {
    std::vector<Cell> row;
    row.reserve(columns.size());
    for (const auto& column : columns) row.push_back(ColumnValue(offer, column));
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace cloudmatch

#endif  // CLOUDMATCH_MATCHING_HPP_

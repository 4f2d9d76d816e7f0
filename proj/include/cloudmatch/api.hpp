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

#ifndef CLOUDMATCH_API_HPP_
#define CLOUDMATCH_API_HPP_

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cloudmatch/catalog.hpp"
#include "cloudmatch/cost.hpp"
#include "cloudmatch/matching.hpp"
#include "cloudmatch/recommend.hpp"

// Request parsing and response bodies shared by the HTTP service and the
// CLI, so both emit byte-identical JSON for the same catalog version.
namespace cloudmatch::api {

using Params = std::map<std::string, std::string>;

struct OfferTableRequest {
  MatchQuery query;
  std::vector<std::string> columns;
};

// Accepts min_cores, min_memory_gb, min_clock_ghz (compute), size_gb
// (storage), location, name_regex, sort, order and a comma-separated
// columns list. Throws QueryError on unknown or malformed parameters.
OfferTableRequest ParseOfferParams(OfferKind kind, const Params& params);

Table OfferTable(const Catalog& view, const OfferTableRequest& request);

nlohmann::json CellJson(const Cell& cell);
nlohmann::json BreakdownJson(const CostBreakdown& breakdown);

nlohmann::json ProvidersResponse(const Catalog& view);
nlohmann::json OffersResponse(const Catalog& view, const OfferTableRequest& request);
nlohmann::json VersionResponse(const Catalog& view);

// Body: a usage scenario plus optional top_k (default 10).
nlohmann::json RecommendResponse(const Catalog& view, const nlohmann::json& body);
std::vector<Recommendation> RecommendFromBody(const Catalog& view, const nlohmann::json& body);

// Body: a usage scenario, optionally with "bundle": {compute, storage,
// network} ids. With a bundle the response is its itemized cost; without
// one it is the savings report over every feasible bundle.
nlohmann::json CostResponse(const Catalog& view, const nlohmann::json& body);

// Decodes a raw offer record for PUT. `id` from the path is filled in when
// the body omits it. Throws ParseError / QueryError / RejectedOfferError.
Offer DecodeUpsertBody(OfferKind kind, const std::string& id, const nlohmann::json& body);
nlohmann::json UpsertResponse(const Catalog& after, const std::string& id);

// Machine-readable error body and the HTTP status it maps to.
nlohmann::json ErrorBody(const std::exception& error);
int HttpStatusFor(const std::exception& error);

}  // namespace cloudmatch::api

#endif  // CLOUDMATCH_API_HPP_

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

#ifndef CLOUDMATCH_CODEC_HPP_
#define CLOUDMATCH_CODEC_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cloudmatch/errors.hpp"
#include "cloudmatch/model.hpp"

namespace cloudmatch {

struct Catalog;

// An offer record as read from a document. Values outside the closed
// Location / RequestType / PlanType vocabularies are reported here rather
// than thrown, so they surface in the same rejection report as range
// violations.
struct DecodedOffer {
  Offer offer;
  ValidationReport schema_violations;
};

struct CatalogDocument {
  std::vector<Provider> providers;
  std::vector<DecodedOffer> compute;
  std::vector<DecodedOffer> storage;
  std::vector<DecodedOffer> network;
  std::vector<QosTaxonomyEntry> qos;
};

// Structural problems (missing fields, wrong JSON types, unknown units)
// throw ParseError carrying the field path; JSON syntax errors carry the
// line number.
CatalogDocument DecodeCatalogDocument(std::string_view text);
DecodedOffer DecodeOffer(const nlohmann::json& record, OfferKind kind, const std::string& path = "");
Provider DecodeProvider(const nlohmann::json& record, const std::string& path = "");
UsageScenario DecodeScenario(const nlohmann::json& body);

nlohmann::json EncodeQuantity(const Quantity& q);
nlohmann::json EncodePrice(const Price& p);
nlohmann::json EncodeLocation(const Location& location);
nlohmann::json EncodeOffer(const Offer& offer);
nlohmann::json EncodeProvider(const Provider& provider);
nlohmann::json EncodeCatalog(const Catalog& catalog);
nlohmann::json EncodeViolations(const ValidationReport& report);

// Parses text as JSON, mapping syntax errors to ParseError with a line.
nlohmann::json ParseJson(std::string_view text, const std::string& what = "document");

}  // namespace cloudmatch

#endif  // CLOUDMATCH_CODEC_HPP_

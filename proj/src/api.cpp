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

#include "cloudmatch/api.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <type_traits>
#include <variant>

#include "cloudmatch/codec.hpp"
#include "cloudmatch/errors.hpp"

namespace cloudmatch::api {

using nlohmann::json;

namespace {

double ParseNumber(const std::string& key, const std::string& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw QueryError(key + ": expected a number, got '" + text + "'");
  }
  if (value < 0.0) throw QueryError(key + " must be >= 0");
  return value;
}

std::int64_t ParseInteger(const std::string& key, const std::string& text) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw QueryError(key + ": expected an integer, got '" + text + "'");
  }
  if (value < 0) throw QueryError(key + " must be >= 0");
  return value;
}

std::vector<std::string> SplitColumns(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ',')) {
    if (!current.empty()) out.push_back(current);
  }
  return out;
}

json RecommendationJson(const Recommendation& rec, const Catalog& view) {
  json bundle{{"compute", rec.compute_id},
              {"storage", rec.storage_id ? json(*rec.storage_id) : json(nullptr)},
              {"network", rec.network_id ? json(*rec.network_id) : json(nullptr)}};
  json plans = json::object();
  if (rec.quote.compute_plan) {
    plans["compute"] = ToString(view.FindCompute(rec.compute_id)->plans[*rec.quote.compute_plan].plan_type);
  }
  if (rec.quote.storage_plan && rec.storage_id) {
    plans["storage"] = ToString(view.FindStorage(*rec.storage_id)->plans[*rec.quote.storage_plan].plan_type);
  }
  return {{"rank", rec.rank},
          {"provider", rec.provider},
          {"bundle", std::move(bundle)},
          {"plans", std::move(plans)},
          {"breakdown", BreakdownJson(rec.quote.breakdown)},
          {"catalog_version", rec.catalog_version}};
}

std::string BundleLabel(const Bundle& b) {
  std::string label = b.compute->id;
  if (b.storage) label += "+" + b.storage->id;
  if (b.network) label += "+" + b.network->id;
  return label;
}

}  // namespace

OfferTableRequest ParseOfferParams(OfferKind kind, const Params& params) {
  OfferTableRequest req;
  req.query.kind = kind;
  for (const auto& [key, value] : params) {
    if (key == "min_cores" && kind == OfferKind::Compute) {
      req.query.min_cores = ParseInteger(key, value);
    } else if (key == "min_memory_gb" && kind == OfferKind::Compute) {
      req.query.min_memory_gb = ParseNumber(key, value);
    } else if (key == "min_clock_ghz" && kind == OfferKind::Compute) {
      req.query.min_clock_ghz = ParseNumber(key, value);
    } else if (key == "size_gb" && kind == OfferKind::Storage) {
      req.query.size_gb = ParseNumber(key, value);
    } else if (key == "location") {
      req.query.location = ParseLocation(value);
      if (!req.query.location) throw QueryError("location: unknown location '" + value + "'");
    } else if (key == "name_regex") {
      req.query.name_regex = value;
    } else if (key == "sort") {
      req.query.sort_key = value;
    } else if (key == "order") {
      if (value == "asc" || value == "ascending") {
        req.query.order = SortOrder::Ascending;
      } else if (value == "desc" || value == "descending") {
        req.query.order = SortOrder::Descending;
      } else {
        throw QueryError("order must be asc or desc, got '" + value + "'");
      }
    } else if (key == "columns") {
      req.columns = SplitColumns(value);
    } else {
      throw QueryError("unknown parameter '" + key + "' for " + std::string(ToString(kind)) + " offers");
    }
  }
  if (params.find("columns") == params.end()) {
    for (const auto name : ColumnNames(kind)) req.columns.emplace_back(name);
  }
  return req;
}

Table OfferTable(const Catalog& view, const OfferTableRequest& request) {
  for (const auto& column : request.columns) {
    const auto names = ColumnNames(request.query.kind);
    if (std::find(names.begin(), names.end(), column) == names.end()) {
      throw QueryError("unknown " + std::string(ToString(request.query.kind)) + " column '" + column + "'");
    }
  }
  switch (request.query.kind) {
    case OfferKind::Compute:
      return ProjectColumns(MatchCompute(view, request.query), request.columns);
    case OfferKind::Storage:
      return ProjectColumns(MatchStorage(view, request.query), request.columns);
    case OfferKind::Network:
      return ProjectColumns(MatchNetwork(view, request.query), request.columns);
  }
  return {};
}

json CellJson(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      cell);
}

json BreakdownJson(const CostBreakdown& breakdown) {
  json items = json::array();
  for (const auto& item : breakdown.line_items) {
    items.push_back({{"label", item.label},
                     {"quantity", item.quantity},
                     {"unit", item.unit},
                     {"rate", item.rate},
                     {"amount", item.amount}});
  }
  return {{"currency", breakdown.currency}, {"line_items", std::move(items)}, {"total", breakdown.total}};
}

json ProvidersResponse(const Catalog& view) {
  json providers = json::array();
  for (const auto& p : view.providers) providers.push_back(EncodeProvider(p));
  return {{"catalog_version", view.version}, {"providers", std::move(providers)}};
}

json OffersResponse(const Catalog& view, const OfferTableRequest& request) {
  const Table table = OfferTable(view, request);
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(CellJson(cell));
    rows.push_back(std::move(r));
  }
  return {{"catalog_version", view.version},
          {"kind", ToString(request.query.kind)},
          {"columns", table.columns},
          {"rows", std::move(rows)}};
}

json VersionResponse(const Catalog& view) { return {{"version", view.version}}; }

std::vector<Recommendation> RecommendFromBody(const Catalog& view, const json& body) {
  const UsageScenario scenario = DecodeScenario(body);
  std::size_t top_k = kDefaultTopK;
  if (const auto it = body.find("top_k"); it != body.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 1) throw QueryError("top_k must be an integer >= 1");
    top_k = it->get<std::size_t>();
  }
  return Recommend(view, scenario, top_k);
}

json RecommendResponse(const Catalog& view, const json& body) {
  json recs = json::array();
  for (const auto& rec : RecommendFromBody(view, body)) recs.push_back(RecommendationJson(rec, view));
  return {{"catalog_version", view.version}, {"recommendations", std::move(recs)}};
}

json CostResponse(const Catalog& view, const json& body) {
  const UsageScenario scenario = DecodeScenario(body);
  if (const auto it = body.find("bundle"); it != body.end() && !it->is_null()) {
    if (!it->is_object()) throw QueryError("bundle must be an object");
    Bundle bundle;
    const auto id_of = [&](const char* key) -> std::optional<std::string> {
      const auto f = it->find(key);
      if (f == it->end() || f->is_null()) return std::nullopt;
      if (!f->is_string()) throw QueryError(std::string("bundle.") + key + " must be an offer id");
      return f->get<std::string>();
    };
    if (const auto id = id_of("compute")) {
      bundle.compute = view.FindCompute(*id);
      if (!bundle.compute) throw QueryError("unknown compute offer " + *id);
    }
    if (const auto id = id_of("storage")) {
      bundle.storage = view.FindStorage(*id);
      if (!bundle.storage) throw QueryError("unknown storage offer " + *id);
    }
    if (const auto id = id_of("network")) {
      bundle.network = view.FindNetwork(*id);
      if (!bundle.network) throw QueryError("unknown network offer " + *id);
    }
    const BundleQuote quote = BundleCost(bundle, scenario);
    return {{"catalog_version", view.version}, {"breakdown", BreakdownJson(quote.breakdown)}};
  }

  std::vector<SavingsOption> options;
  for (const auto& bundle : FeasibleBundles(view, scenario)) {
    options.push_back({BundleLabel(bundle), bundle.compute->provider, BundleCost(bundle, scenario).breakdown});
  }
  json report = json::array();
  if (!options.empty()) {
    for (const auto& entry : Savings(options)) {
      report.push_back(
          {{"option", entry.label}, {"provider", entry.provider}, {"total", entry.total}, {"delta", entry.delta}});
    }
  }
  return {{"catalog_version", view.version},
          {"currency", options.empty() ? json(nullptr) : json(options.front().breakdown.currency)},
          {"options", std::move(report)}};
}

Offer DecodeUpsertBody(OfferKind kind, const std::string& id, const json& body) {
  if (!body.is_object()) throw ParseError("", "offer body must be a JSON object");
  json record = body;
  if (const auto it = record.find("id"); it == record.end() || it->is_null()) {
    record["id"] = id;
  } else if (!it->is_string() || it->get<std::string>() != id) {
    throw QueryError("body id does not match path id " + id);
  }
  DecodedOffer decoded = DecodeOffer(record, kind);
  if (!decoded.schema_violations.empty()) {
    throw RejectedOfferError({{id, std::move(decoded.schema_violations)}});
  }
  return decoded.offer;
}

json UpsertResponse(const Catalog& after, const std::string& id) {
  json offer;
  if (const auto* c = after.FindCompute(id)) offer = EncodeOffer(*c);
  if (const auto* s = after.FindStorage(id)) offer = EncodeOffer(*s);
  if (const auto* n = after.FindNetwork(id)) offer = EncodeOffer(*n);
  return {{"version", after.version}, {"offer", std::move(offer)}};
}

json ErrorBody(const std::exception& error) {
  json body{{"message", error.what()}, {"violations", json::array()}};
  if (const auto* rejected = dynamic_cast<const RejectedOfferError*>(&error)) {
    body["error"] = "rejected_offer";
    for (const auto& offer : rejected->offers()) {
      for (const auto& v : offer.violations) {
        body["violations"].push_back(
            {{"offer", offer.offer_id}, {"field", v.field}, {"constraint", v.constraint}, {"observed", v.observed}});
      }
    }
  } else if (const auto* parse = dynamic_cast<const ParseError*>(&error)) {
    body["error"] = "parse_error";
    body["path"] = parse->path();
    if (parse->line() > 0) body["line"] = parse->line();
  } else if (dynamic_cast<const IntegrityError*>(&error)) {
    body["error"] = "integrity_error";
  } else if (dynamic_cast<const CurrencyError*>(&error)) {
    body["error"] = "currency_error";
  } else if (dynamic_cast<const CapacityError*>(&error)) {
    body["error"] = "capacity_error";
  } else if (dynamic_cast<const QueryError*>(&error) || dynamic_cast<const InvalidInputError*>(&error)) {
    body["error"] = "query_error";
  } else if (dynamic_cast<const Error*>(&error)) {
    body["error"] = "domain_error";
  } else {
    body["error"] = "internal_error";
  }
  return body;
}

int HttpStatusFor(const std::exception& error) {
  if (dynamic_cast<const RejectedOfferError*>(&error) || dynamic_cast<const IntegrityError*>(&error) ||
      dynamic_cast<const CurrencyError*>(&error)) {
    return 422;
  }
  if (dynamic_cast<const Error*>(&error)) return 400;
  return 500;
}

}  // namespace cloudmatch::api

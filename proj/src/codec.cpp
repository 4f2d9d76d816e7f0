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

#include "cloudmatch/codec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cloudmatch/catalog.hpp"

namespace cloudmatch {

using nlohmann::json;

namespace {

constexpr const char* kLocationConstraint =
    "Location in {NorthAmerica, SouthAmerica, Africa, Europe, Asia, Australia}";
constexpr const char* kRequestTypeConstraint =
    "RequestType in {PUT, COPY, POST, LIST, GET, HEAD, DELETE, SEARCH, TRANSACTION}";
constexpr const char* kPlanTypeConstraint = "PlanType in {PayAsYouGo, Prepaid, ReducedRedundancy}";

std::string Join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }
std::string Index(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

// Walks one offer record, remembering the path prefix used for ParseError
// and collecting vocabulary violations.
class Reader {
 public:
  Reader(std::string prefix, ValidationReport* violations)
      : prefix_(std::move(prefix)), violations_(violations) {}

  [[noreturn]] void Fail(const std::string& path, const std::string& message) const {
    throw ParseError(Join(prefix_, path), message);
  }

  void Violation(const std::string& path, const std::string& constraint, const std::string& observed) const {
    if (violations_ != nullptr) violations_->push_back({path, constraint, observed});
  }

  const json& Object(const json& j, const std::string& path) const {
    if (!j.is_object()) Fail(path, "expected an object");
    return j;
  }

  const json& Array(const json& j, const std::string& path) const {
    if (!j.is_array()) Fail(path, "expected an array");
    return j;
  }

  const json* Find(const json& obj, const std::string& key) const {
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return nullptr;
    return &*it;
  }

  const json& Require(const json& obj, const std::string& key, const std::string& path) const {
    const json* found = Find(obj, key);
    if (found == nullptr) Fail(Join(path, key), "missing required field");
    return *found;
  }

  std::string String(const json& j, const std::string& path) const {
    if (!j.is_string()) Fail(path, "expected a string");
    return j.get<std::string>();
  }

  double Number(const json& j, const std::string& path) const {
    if (!j.is_number()) Fail(path, "expected a number");
    return j.get<double>();
  }

  std::int64_t Integer(const json& j, const std::string& path) const {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number_float()) {
      const double v = j.get<double>();
      if (std::floor(v) == v && std::abs(v) < 9e15) return static_cast<std::int64_t>(v);
    }
    Fail(path, "expected an integer");
  }

  bool Bool(const json& j, const std::string& path) const {
    if (!j.is_boolean()) Fail(path, "expected a boolean");
    return j.get<bool>();
  }

  std::string RequiredString(const json& obj, const std::string& key, const std::string& path) const {
    return String(Require(obj, key, path), Join(path, key));
  }

  std::optional<std::string> OptionalString(const json& obj, const std::string& key, const std::string& path) const {
    const json* found = Find(obj, key);
    if (found == nullptr) return std::nullopt;
    return String(*found, Join(path, key));
  }

  Quantity ReadQuantity(const json& j, const std::string& path) const {
    Object(j, path);
    Quantity q;
    q.value = Number(Require(j, "value", path), Join(path, "value"));
    const std::string unit = RequiredString(j, "unit", path);
    const auto parsed = ParseUnit(unit);
    if (!parsed) Fail(Join(path, "unit"), "unknown unit '" + unit + "'");
    q.unit = *parsed;
    return q;
  }

  std::optional<Quantity> OptionalQuantity(const json& obj, const std::string& key, const std::string& path) const {
    const json* found = Find(obj, key);
    if (found == nullptr) return std::nullopt;
    return ReadQuantity(*found, Join(path, key));
  }

  Price ReadPrice(const json& j, const std::string& path) const {
    Object(j, path);
    const double amount = Number(Require(j, "value", path), Join(path, "value"));
    const std::string unit = RequiredString(j, "unit", path);
    auto price = ParsePriceUnit(unit, amount);
    if (!price) Fail(Join(path, "unit"), "unrecognised price unit '" + unit + "'");
    return *price;
  }

  std::optional<Price> OptionalPrice(const json& obj, const std::string& key, const std::string& path) const {
    const json* found = Find(obj, key);
    if (found == nullptr) return std::nullopt;
    return ReadPrice(*found, Join(path, key));
  }

  std::optional<Location> ReadLocation(const json& j, const std::string& path) const {
    if (j.is_string()) {
      const std::string text = j.get<std::string>();
      auto loc = ParseLocation(text);
      if (!loc) Violation(path, kLocationConstraint, text);
      return loc;
    }
    Object(j, path);
    const std::string continent = RequiredString(j, "continent", path);
    const auto parsed = ParseContinent(continent);
    if (!parsed) {
      Violation(Join(path, "continent"), kLocationConstraint, continent);
      return std::nullopt;
    }
    return Location{*parsed, OptionalString(j, "region", path)};
  }

  std::vector<Location> Locations(const json& obj, const std::string& key, const std::string& path) const {
    std::vector<Location> out;
    const json* found = Find(obj, key);
    if (found == nullptr) return out;
    const std::string here = Join(path, key);
    Array(*found, here);
    for (std::size_t i = 0; i < found->size(); ++i) {
      if (auto loc = ReadLocation((*found)[i], Index(here, i))) out.push_back(*loc);
    }
    return out;
  }

  std::vector<std::string> Strings(const json& obj, const std::string& key, const std::string& path) const {
    std::vector<std::string> out;
    const json* found = Find(obj, key);
    if (found == nullptr) return out;
    const std::string here = Join(path, key);
    Array(*found, here);
    for (std::size_t i = 0; i < found->size(); ++i) out.push_back(String((*found)[i], Index(here, i)));
    return out;
  }

  template <typename E, typename ParseFn>
  E Enum(const json& obj, const std::string& key, const std::string& path, ParseFn parse, const char* what) const {
    const std::string text = RequiredString(obj, key, path);
    const auto value = parse(text);
    if (!value) Fail(Join(path, key), std::string("unknown ") + what + " '" + text + "'");
    return *value;
  }

  PricePlan Plan(const json& j, const std::string& path) const {
    Object(j, path);
    PricePlan plan;
    const std::string type = RequiredString(j, "plan_type", path);
    if (const auto parsed = ParsePlanType(type)) {
      plan.plan_type = *parsed;
    } else {
      Violation(Join(path, "plan_type"), kPlanTypeConstraint, type);
    }
    plan.billing_unit = Enum<BillingUnit>(j, "billing_unit", path, ParseBillingUnit, "billing unit");
    plan.cost_per_period = ReadPrice(Require(j, "cost_per_period", path), Join(path, "cost_per_period"));
    if (const json* len = Find(j, "period_length")) {
      plan.period_length = ReadQuantity(*len, Join(path, "period_length"));
    } else {
      plan.period_length = DefaultPeriod(plan.billing_unit);
    }
    plan.included_capacity = OptionalQuantity(j, "included_capacity", path);
    plan.cost_over_limit = OptionalPrice(j, "cost_over_limit", path);
    if (const json* regional = Find(j, "regional_prices")) {
      const std::string here = Join(path, "regional_prices");
      Array(*regional, here);
      for (std::size_t i = 0; i < regional->size(); ++i) {
        const std::string entry_path = Index(here, i);
        const json& entry = Object((*regional)[i], entry_path);
        RegionalPrice rp;
        rp.locations = Locations(entry, "locations", entry_path);
        rp.price = ReadPrice(Require(entry, "price", entry_path), Join(entry_path, "price"));
        plan.regional_prices.push_back(std::move(rp));
      }
    }
    if (const json* days = Find(j, "month_length_days")) {
      plan.month_length_days = static_cast<int>(Integer(*days, Join(path, "month_length_days")));
    }
    if (Find(j, "hour_rounding") != nullptr) {
      plan.hour_rounding = Enum<HourRounding>(j, "hour_rounding", path, ParseHourRounding, "hour rounding");
    }
    return plan;
  }

  std::vector<PricePlan> Plans(const json& obj, const std::string& path) const {
    std::vector<PricePlan> plans;
    const json& arr = Array(Require(obj, "plans", path), Join(path, "plans"));
    for (std::size_t i = 0; i < arr.size(); ++i) plans.push_back(Plan(arr[i], Index(Join(path, "plans"), i)));
    return plans;
  }

  RequestFeeRule Rule(const json& j, const std::string& path) const {
    Object(j, path);
    RequestFeeRule rule;
    const std::string verbs_path = Join(path, "verbs");
    const json& verbs = Array(Require(j, "verbs", path), verbs_path);
    for (std::size_t i = 0; i < verbs.size(); ++i) {
      const std::string text = String(verbs[i], Index(verbs_path, i));
      if (const auto verb = ParseVerb(text)) {
        rule.verbs.insert(*verb);
      } else {
        Violation(Index(verbs_path, i), kRequestTypeConstraint, text);
      }
    }
    rule.category = Enum<RequestCategory>(j, "category", path, ParseRequestCategory, "request category");
    rule.fee_status = Enum<FeeStatus>(j, "fee_status", path, ParseFeeStatus, "fee status");
    rule.cost_per_request = OptionalPrice(j, "cost_per_request", path);
    return rule;
  }

  static Quantity DefaultPeriod(BillingUnit unit) {
    return unit == BillingUnit::PerGbMonth ? Quantity{1.0, Unit::Month} : Quantity{1.0, Unit::Hour};
  }

 private:
  std::string prefix_;
  ValidationReport* violations_;
};

ComputeOffer ReadCompute(const Reader& r, const json& j) {
  ComputeOffer o;
  o.id = r.RequiredString(j, "id", "");
  o.provider = r.RequiredString(j, "provider", "");
  o.name = r.OptionalString(j, "name", "").value_or(o.id);
  o.cores = r.Integer(r.Require(j, "cores", ""), "cores");
  o.clock_speed = r.ReadQuantity(r.Require(j, "clock_speed", ""), "clock_speed");
  o.memory = r.ReadQuantity(r.Require(j, "memory", ""), "memory");
  if (const auto size = r.OptionalString(j, "memory_address_size", "")) {
    const auto parsed = ParseAddressSize(*size);
    if (!parsed) r.Fail("memory_address_size", "expected '32-bit' or '64-bit'");
    o.memory_address_size = parsed;
  }
  o.local_storage = r.OptionalQuantity(j, "local_storage", "");
  o.virtualization = r.OptionalString(j, "virtualization", "");
  if (const json* clustered = r.Find(j, "clustered")) o.clustered = r.Bool(*clustered, "clustered");
  o.locations = r.Locations(j, "locations", "");
  o.supported_networks = r.Strings(j, "supported_networks", "");
  o.plans = r.Plans(j, "");
  return o;
}

StorageOffer ReadStorage(const Reader& r, const json& j) {
  StorageOffer o;
  o.id = r.RequiredString(j, "id", "");
  o.provider = r.RequiredString(j, "provider", "");
  o.name = r.OptionalString(j, "name", "").value_or(o.id);
  o.kind = r.Enum<StorageKind>(j, "kind", "", ParseStorageKind, "storage kind");
  o.size_min = r.ReadQuantity(r.Require(j, "size_min", ""), "size_min");
  o.size_max = r.ReadQuantity(r.Require(j, "size_max", ""), "size_max");
  o.attachable_to = r.Strings(j, "attachable_to", "");
  o.locations = r.Locations(j, "locations", "");
  if (const json* rules = r.Find(j, "request_pricing")) {
    r.Array(*rules, "request_pricing");
    for (std::size_t i = 0; i < rules->size(); ++i) {
      RequestFeeRule rule = r.Rule((*rules)[i], Index("request_pricing", i));
      // A rule whose verbs were all unknown is already reported above.
      const bool all_unknown = rule.verbs.empty() && !(*rules)[i].at("verbs").empty();
      if (!all_unknown) o.request_pricing.push_back(std::move(rule));
    }
  }
  o.plans = r.Plans(j, "");
  return o;
}

NetworkOffer ReadNetwork(const Reader& r, const json& j) {
  NetworkOffer o;
  o.id = r.RequiredString(j, "id", "");
  o.provider = r.RequiredString(j, "provider", "");
  o.name = r.OptionalString(j, "name", "").value_or(o.id);
  o.bandwidth = r.OptionalQuantity(j, "bandwidth", "");
  o.protocols = r.Strings(j, "protocols", "");
  o.cost_data_transfer_in = r.ReadPrice(r.Require(j, "cost_data_transfer_in", ""), "cost_data_transfer_in");
  o.cost_data_transfer_out = r.ReadPrice(r.Require(j, "cost_data_transfer_out", ""), "cost_data_transfer_out");
  o.locations = r.Locations(j, "locations", "");
  return o;
}

QosTaxonomyEntry ReadQos(const Reader& r, const json& j, const std::string& path) {
  r.Object(j, path);
  QosTaxonomyEntry entry;
  entry.name = r.RequiredString(j, "name", path);
  entry.kind = r.Enum<QosKind>(j, "kind", path, ParseQosKind, "QoS kind");
  entry.parent = r.OptionalString(j, "parent", path);
  entry.linked_metric = r.OptionalString(j, "linked_metric", path);
  return entry;
}

json EncodeLocations(const std::vector<Location>& locations) {
  json out = json::array();
  for (const auto& loc : locations) out.push_back(EncodeLocation(loc));
  return out;
}

json EncodePlan(const PricePlan& plan) {
  json j;
  j["plan_type"] = ToString(plan.plan_type);
  j["billing_unit"] = ToString(plan.billing_unit);
  j["cost_per_period"] = EncodePrice(plan.cost_per_period);
  j["period_length"] = EncodeQuantity(plan.period_length);
  if (plan.included_capacity) j["included_capacity"] = EncodeQuantity(*plan.included_capacity);
  if (plan.cost_over_limit) j["cost_over_limit"] = EncodePrice(*plan.cost_over_limit);
  json regional = json::array();
  for (const auto& rp : plan.regional_prices) {
    regional.push_back({{"locations", EncodeLocations(rp.locations)}, {"price", EncodePrice(rp.price)}});
  }
  j["regional_prices"] = std::move(regional);
  j["month_length_days"] = plan.month_length_days;
  j["hour_rounding"] = ToString(plan.hour_rounding);
  return j;
}

json EncodePlans(const std::vector<PricePlan>& plans) {
  json out = json::array();
  for (const auto& plan : plans) out.push_back(EncodePlan(plan));
  return out;
}

json Encode(const ComputeOffer& o) {
  json j;
  j["id"] = o.id;
  j["provider"] = o.provider;
  j["name"] = o.name;
  j["cores"] = o.cores;
  j["clock_speed"] = EncodeQuantity(o.clock_speed);
  j["memory"] = EncodeQuantity(o.memory);
  if (o.memory_address_size) j["memory_address_size"] = ToString(*o.memory_address_size);
  if (o.local_storage) j["local_storage"] = EncodeQuantity(*o.local_storage);
  if (o.virtualization) j["virtualization"] = *o.virtualization;
  j["clustered"] = o.clustered;
  j["locations"] = EncodeLocations(o.locations);
  j["supported_networks"] = o.supported_networks;
  j["plans"] = EncodePlans(o.plans);
  return j;
}

json Encode(const StorageOffer& o) {
  json j;
  j["id"] = o.id;
  j["provider"] = o.provider;
  j["name"] = o.name;
  j["kind"] = ToString(o.kind);
  j["size_min"] = EncodeQuantity(o.size_min);
  j["size_max"] = EncodeQuantity(o.size_max);
  j["attachable_to"] = o.attachable_to;
  j["locations"] = EncodeLocations(o.locations);
  json rules = json::array();
  for (const auto& rule : o.request_pricing) {
    json r;
    json verbs = json::array();
    for (const auto verb : rule.verbs) verbs.push_back(ToString(verb));
    r["verbs"] = std::move(verbs);
    r["category"] = ToString(rule.category);
    r["fee_status"] = ToString(rule.fee_status);
    if (rule.cost_per_request) r["cost_per_request"] = EncodePrice(*rule.cost_per_request);
    rules.push_back(std::move(r));
  }
  j["request_pricing"] = std::move(rules);
  j["plans"] = EncodePlans(o.plans);
  return j;
}

json Encode(const NetworkOffer& o) {
  json j;
  j["id"] = o.id;
  j["provider"] = o.provider;
  j["name"] = o.name;
  if (o.bandwidth) j["bandwidth"] = EncodeQuantity(*o.bandwidth);
  j["protocols"] = o.protocols;
  j["cost_data_transfer_in"] = EncodePrice(o.cost_data_transfer_in);
  j["cost_data_transfer_out"] = EncodePrice(o.cost_data_transfer_out);
  j["locations"] = EncodeLocations(o.locations);
  return j;
}

std::vector<DecodedOffer> DecodeOffers(const json& doc, OfferKind kind) {
  std::vector<DecodedOffer> out;
  const std::string key(ToString(kind));
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return out;
  if (!it->is_array()) throw ParseError(key, "expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) out.push_back(DecodeOffer((*it)[i], kind, Index(key, i)));
  return out;
}

int LineOf(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

}  // namespace

json ParseJson(std::string_view text, const std::string& what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ParseError(what, std::string("invalid JSON: ") + e.what(), LineOf(text, byte));
  }
}

DecodedOffer DecodeOffer(const json& record, OfferKind kind, const std::string& path) {
  DecodedOffer decoded;
  Reader reader(path, &decoded.schema_violations);
  reader.Object(record, "");
  switch (kind) {
    case OfferKind::Compute:
      decoded.offer = ReadCompute(reader, record);
      break;
    case OfferKind::Storage:
      decoded.offer = ReadStorage(reader, record);
      break;
    case OfferKind::Network:
      decoded.offer = ReadNetwork(reader, record);
      break;
  }
  return decoded;
}

Provider DecodeProvider(const json& record, const std::string& path) {
  Reader r(path, nullptr);
  r.Object(record, "");
  Provider p;
  p.name = r.RequiredString(record, "name", "");
  p.currency = r.RequiredString(record, "currency", "");
  if (const json* terms = r.Find(record, "terminology")) {
    r.Object(*terms, "terminology");
    for (const auto& [concept_name, term] : terms->items()) {
      p.terminology[concept_name] = r.String(term, Join("terminology", concept_name));
    }
  }
  p.deployment_model = r.OptionalString(record, "deployment_model", "");
  return p;
}

CatalogDocument DecodeCatalogDocument(std::string_view text) {
  const json doc = ParseJson(text);
  if (!doc.is_object()) throw ParseError("", "catalog document must be a JSON object");
  CatalogDocument out;
  if (const auto it = doc.find("providers"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("providers", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) out.providers.push_back(DecodeProvider((*it)[i], Index("providers", i)));
  }
  out.compute = DecodeOffers(doc, OfferKind::Compute);
  out.storage = DecodeOffers(doc, OfferKind::Storage);
  out.network = DecodeOffers(doc, OfferKind::Network);
  if (const auto it = doc.find("qos"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw ParseError("qos", "expected an array");
    Reader r("", nullptr);
    for (std::size_t i = 0; i < it->size(); ++i) out.qos.push_back(ReadQos(r, (*it)[i], Index("qos", i)));
  }
  return out;
}

UsageScenario DecodeScenario(const json& body) {
  Reader r("scenario", nullptr);
  r.Object(body, "");
  UsageScenario s;
  const auto number = [&](const char* key, double fallback) {
    const json* found = r.Find(body, key);
    return found ? r.Number(*found, key) : fallback;
  };
  const auto integer = [&](const char* key) -> std::int64_t {
    const json* found = r.Find(body, key);
    return found ? r.Integer(*found, key) : 0;
  };
  s.compute_hours = number("compute_hours", 0.0);
  s.instance_count = integer("instance_count");
  s.min_cores = integer("min_cores");
  s.min_memory_gb = number("min_memory_gb", 0.0);
  if (const json* clock = r.Find(body, "min_clock_ghz")) s.min_clock_ghz = r.Number(*clock, "min_clock_ghz");
  s.storage_gb = number("storage_gb", 0.0);
  s.storage_duration_days = number("storage_duration_days", 0.0);
  if (const json* persistent = r.Find(body, "persistent_storage")) {
    s.persistent_storage_required = r.Bool(*persistent, "persistent_storage");
  }
  if (const json* counts = r.Find(body, "request_counts")) {
    r.Object(*counts, "request_counts");
    for (const auto& [verb_text, count] : counts->items()) {
      const auto verb = ParseVerb(verb_text);
      if (!verb) throw QueryError("scenario.request_counts: unknown request verb '" + verb_text + "'");
      const std::int64_t n = r.Integer(count, "request_counts." + verb_text);
      if (n < 0) throw QueryError("scenario.request_counts." + verb_text + " must be >= 0");
      s.request_counts[*verb] = static_cast<std::uint64_t>(n);
    }
  }
  s.transfer_in_gb = number("transfer_in_gb", 0.0);
  s.transfer_out_gb = number("transfer_out_gb", 0.0);
  if (const json* loc = r.Find(body, "location")) {
    const std::string text = r.String(*loc, "location");
    s.location = ParseLocation(text);
    if (!s.location) throw QueryError("scenario.location: unknown location '" + text + "'");
  }
  s.name_regex = r.OptionalString(body, "name_regex", "");
  s.currency = r.OptionalString(body, "currency", "");
  ValidateScenario(s);
  return s;
}

json EncodeQuantity(const Quantity& q) { return {{"value", q.value}, {"unit", ToString(q.unit)}}; }

json EncodePrice(const Price& p) { return {{"value", p.amount}, {"unit", FormatPriceUnit(p)}}; }

json EncodeLocation(const Location& location) {
  json j{{"continent", ToString(location.continent)}};
  if (location.region) j["region"] = *location.region;
  return j;
}

json EncodeOffer(const Offer& offer) {
  return std::visit([](const auto& o) { return Encode(o); }, offer);
}

json EncodeProvider(const Provider& provider) {
  json j{{"name", provider.name}, {"currency", provider.currency}, {"terminology", provider.terminology}};
  if (provider.deployment_model) j["deployment_model"] = *provider.deployment_model;
  return j;
}

json EncodeCatalog(const Catalog& catalog) {
  json doc;
  json providers = json::array();
  for (const auto& p : catalog.providers) providers.push_back(EncodeProvider(p));
  doc["providers"] = std::move(providers);
  json compute = json::array();
  for (const auto& o : catalog.compute) compute.push_back(Encode(o));
  doc["compute"] = std::move(compute);
  json storage = json::array();
  for (const auto& o : catalog.storage) storage.push_back(Encode(o));
  doc["storage"] = std::move(storage);
  json network = json::array();
  for (const auto& o : catalog.network) network.push_back(Encode(o));
  doc["network"] = std::move(network);
  json qos = json::array();
  for (const auto& e : catalog.qos) {
    json entry{{"name", e.name}, {"kind", ToString(e.kind)}};
    if (e.parent) entry["parent"] = *e.parent;
    if (e.linked_metric) entry["linked_metric"] = *e.linked_metric;
    qos.push_back(std::move(entry));
  }
  doc["qos"] = std::move(qos);
  return doc;
}

json EncodeViolations(const ValidationReport& report) {
  json out = json::array();
  for (const auto& v : report) {
    out.push_back({{"field", v.field}, {"constraint", v.constraint}, {"observed", v.observed}});
  }
  return out;
}

}  // namespace cloudmatch

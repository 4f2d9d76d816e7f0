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

#include "cloudmatch/catalog.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cloudmatch/codec.hpp"
#include "cloudmatch/errors.hpp"
#include "cloudmatch/normalization.hpp"
#include "cloudmatch/validation.hpp"

namespace cloudmatch {

namespace {

template <typename T>
const T* FindById(const std::vector<T>& offers, std::string_view id) {
  for (const auto& o : offers) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

bool IsCurrencyCode(const std::string& code) {
  if (code.size() != 3) return false;
  for (char c : code) {
    if (c < 'A' || c > 'Z') return false;
  }
  return true;
}

void CheckCurrency(const std::string& where, const std::string& currency, const Provider& provider) {
  if (currency != provider.currency) {
    throw IntegrityError(where + " is priced in " + currency + " but provider " + provider.name + " bills in " +
                         provider.currency);
  }
}

void CheckPlanCurrencies(const std::string& id, const std::vector<PricePlan>& plans, const Provider& provider) {
  for (const auto& plan : plans) {
    CheckCurrency(id, plan.cost_per_period.currency, provider);
    if (plan.cost_over_limit) CheckCurrency(id, plan.cost_over_limit->currency, provider);
    for (const auto& rp : plan.regional_prices) CheckCurrency(id, rp.price.currency, provider);
  }
}

void CheckQos(const std::vector<QosTaxonomyEntry>& qos) {
  std::map<std::string, const QosTaxonomyEntry*> by_name;
  for (const auto& e : qos) {
    if (!by_name.emplace(e.name, &e).second) throw IntegrityError("duplicate QoS entry " + e.name);
  }
  for (const auto& e : qos) {
    if (e.parent && !by_name.contains(*e.parent)) {
      throw IntegrityError("QoS entry " + e.name + " has unknown parent " + *e.parent);
    }
    if (e.linked_metric) {
      const auto it = by_name.find(*e.linked_metric);
      if (it == by_name.end()) throw IntegrityError("QoS entry " + e.name + " links unknown metric " + *e.linked_metric);
      if (e.kind == QosKind::Metric || it->second->kind != QosKind::Metric) {
        throw IntegrityError("QoS link " + e.name + " -> " + *e.linked_metric + " must join an attribute to a Metric");
      }
    }
    // Walk up; a forest never revisits a node.
    std::set<std::string> path{e.name};
    const QosTaxonomyEntry* at = &e;
    while (at->parent) {
      if (!path.insert(*at->parent).second) throw IntegrityError("QoS taxonomy has a cycle through " + e.name);
      at = by_name.at(*at->parent);
    }
  }
}

template <typename T>
void Replace(std::vector<T>& offers, T offer) {
  for (auto& o : offers) {
    if (o.id == offer.id) {
      o = std::move(offer);
      return;
    }
  }
  offers.push_back(std::move(offer));
}

}  // namespace

const Provider* Catalog::FindProvider(std::string_view name) const {
  for (const auto& p : providers) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const ComputeOffer* Catalog::FindCompute(std::string_view id) const { return FindById(compute, id); }
const StorageOffer* Catalog::FindStorage(std::string_view id) const { return FindById(storage, id); }
const NetworkOffer* Catalog::FindNetwork(std::string_view id) const { return FindById(network, id); }

std::optional<OfferKind> Catalog::KindOfId(std::string_view id) const {
  if (FindCompute(id)) return OfferKind::Compute;
  if (FindStorage(id)) return OfferKind::Storage;
  if (FindNetwork(id)) return OfferKind::Network;
  return std::nullopt;
}

bool Catalog::SameContent(const Catalog& other) const {
  return providers == other.providers && compute == other.compute && storage == other.storage &&
         network == other.network && qos == other.qos;
}

void CheckIntegrity(const Catalog& catalog) {
  std::set<std::string> provider_names;
  for (const auto& p : catalog.providers) {
    if (p.name.empty()) throw IntegrityError("provider with empty name");
    if (!provider_names.insert(p.name).second) throw IntegrityError("duplicate provider " + p.name);
    if (!IsCurrencyCode(p.currency)) throw IntegrityError("provider " + p.name + " has invalid currency " + p.currency);
  }

  std::set<std::string> ids;
  const auto claim = [&](const std::string& id, const std::string& provider) -> const Provider& {
    if (!ids.insert(id).second) throw IntegrityError("duplicate offer id " + id);
    const Provider* p = catalog.FindProvider(provider);
    if (p == nullptr) throw IntegrityError("offer " + id + " references unknown provider " + provider);
    return *p;
  };

  for (const auto& o : catalog.compute) {
    const Provider& p = claim(o.id, o.provider);
    CheckPlanCurrencies(o.id, o.plans, p);
  }
  for (const auto& o : catalog.storage) {
    const Provider& p = claim(o.id, o.provider);
    CheckPlanCurrencies(o.id, o.plans, p);
    for (const auto& rule : o.request_pricing) {
      if (rule.cost_per_request) CheckCurrency(o.id, rule.cost_per_request->currency, p);
    }
    for (const auto& pattern : o.attachable_to) {
      if (!IsValidAttachPattern(pattern)) throw IntegrityError("offer " + o.id + " has invalid pattern " + pattern);
    }
  }
  for (const auto& o : catalog.network) {
    const Provider& p = claim(o.id, o.provider);
    CheckCurrency(o.id, o.cost_data_transfer_in.currency, p);
    CheckCurrency(o.id, o.cost_data_transfer_out.currency, p);
  }
  for (const auto& o : catalog.compute) {
    for (const auto& net : o.supported_networks) {
      if (catalog.FindNetwork(net) == nullptr) {
        throw IntegrityError("compute offer " + o.id + " lists unknown network " + net);
      }
    }
  }
  CheckQos(catalog.qos);
}

Catalog LoadCatalog(std::string_view document) {
  CatalogDocument doc = DecodeCatalogDocument(document);
  Catalog catalog;
  catalog.providers = std::move(doc.providers);
  catalog.qos = std::move(doc.qos);

  std::vector<RejectedOffer> rejected;
  const auto ingest = [&](std::vector<DecodedOffer>& decoded, auto& out) {
    using T = typename std::remove_reference_t<decltype(out)>::value_type;
    for (auto& d : decoded) {
      if (!d.schema_violations.empty()) {
        ValidationReport report = std::move(d.schema_violations);
        for (auto& v : ValidateOffer(d.offer)) report.push_back(std::move(v));
        rejected.push_back({IdOf(d.offer), std::move(report)});
        continue;
      }
      try {
        out.push_back(std::get<T>(NormalizeOffer(d.offer)));
      } catch (const RejectedOfferError& e) {
        for (const auto& r : e.offers()) rejected.push_back(r);
      }
    }
  };
  ingest(doc.compute, catalog.compute);
  ingest(doc.storage, catalog.storage);
  ingest(doc.network, catalog.network);
  if (!rejected.empty()) throw RejectedOfferError(std::move(rejected));

  CheckIntegrity(catalog);
  catalog.version = 1;
  return catalog;
}

Catalog LoadCatalogFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open catalog file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return LoadCatalog(buf.str());
}

Catalog UpsertOffer(const Catalog& catalog, const Offer& raw) {
  Offer canonical = NormalizeOffer(raw);
  const std::string& id = IdOf(canonical);
  if (const auto existing = catalog.KindOfId(id); existing && *existing != KindOf(canonical)) {
    throw IntegrityError("offer id " + id + " already names a " + std::string(ToString(*existing)) + " offer");
  }

  Catalog next = catalog;
  std::visit(
      [&](auto&& offer) {
        using T = std::decay_t<decltype(offer)>;
        if constexpr (std::is_same_v<T, ComputeOffer>) Replace(next.compute, std::move(offer));
        if constexpr (std::is_same_v<T, StorageOffer>) Replace(next.storage, std::move(offer));
        if constexpr (std::is_same_v<T, NetworkOffer>) Replace(next.network, std::move(offer));
      },
      std::move(canonical));
  CheckIntegrity(next);
  next.version = catalog.version + 1;
  return next;
}

Snapshot MakeSnapshot(Catalog catalog) { return std::make_shared<const Catalog>(std::move(catalog)); }

Repository::Repository(Catalog catalog, std::optional<std::filesystem::path> write_back)
    : current_(MakeSnapshot(std::move(catalog))), write_back_(std::move(write_back)) {}

Snapshot Repository::snapshot() const {
  std::lock_guard lock(current_mu_);
  return current_;
}

Snapshot Repository::Upsert(const Offer& raw) {
  std::lock_guard writer(write_mu_);
  Snapshot next = MakeSnapshot(UpsertOffer(*snapshot(), raw));
  if (write_back_) SaveCatalogFile(*next, *write_back_);
  std::lock_guard lock(current_mu_);
  current_ = next;
  return next;
}

void SaveCatalogFile(const Catalog& catalog, const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write catalog file " + tmp.string());
    out << EncodeCatalog(catalog).dump(2) << '\n';
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace cloudmatch

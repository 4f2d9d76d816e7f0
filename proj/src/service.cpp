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

#include "cloudmatch/service.hpp"

#include <httplib.h>

#include <exception>
#include <utility>

#include "cloudmatch/api.hpp"
#include "cloudmatch/codec.hpp"
#include "cloudmatch/errors.hpp"
#include "cloudmatch/ontology.hpp"

namespace cloudmatch {

namespace {

constexpr const char* kJson = "application/json";

void SendJson(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

api::Params ToParams(const httplib::Request& req) {
  api::Params params;
  for (const auto& [key, value] : req.params) {
    if (!params.emplace(key, value).second) throw QueryError("parameter '" + key + "' given twice");
  }
  return params;
}

template <typename Fn>
httplib::Server::Handler Guard(Fn fn) {
  return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const std::exception& e) {
      SendJson(res, api::HttpStatusFor(e), api::ErrorBody(e));
    }
  };
}

OfferKind KindFromPath(const std::string& text) {
  const auto kind = ParseOfferKind(text);
  if (!kind) throw QueryError("unknown offer kind '" + text + "'");
  return *kind;
}

}  // namespace

struct Service::Impl {
  explicit Impl(Repository& repo) : repository(repo) {}

  Repository& repository;
  httplib::Server server;
};

Service::Service(Repository& repository) : impl_(std::make_unique<Impl>(repository)) {
  auto& server = impl_->server;
  Repository& repo = impl_->repository;

  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  server.Options(R"(/v1/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  server.Get("/v1/providers", Guard([&repo](const httplib::Request& req, httplib::Response& res) {
               if (!req.params.empty()) throw QueryError("providers takes no parameters");
               SendJson(res, 200, api::ProvidersResponse(*repo.snapshot()));
             }));

  server.Get(R"(/v1/offers/([a-z]+))", Guard([&repo](const httplib::Request& req, httplib::Response& res) {
               const OfferKind kind = KindFromPath(req.matches[1]);
               const auto request = api::ParseOfferParams(kind, ToParams(req));
               SendJson(res, 200, api::OffersResponse(*repo.snapshot(), request));
             }));

  server.Get("/v1/catalog/version", Guard([&repo](const httplib::Request&, httplib::Response& res) {
               SendJson(res, 200, api::VersionResponse(*repo.snapshot()));
             }));

  server.Get("/v1/export/ontology", Guard([&repo](const httplib::Request&, httplib::Response& res) {
               res.status = 200;
               res.set_content(ExportOntology(*repo.snapshot()), "text/turtle");
             }));

  server.Post("/v1/recommend", Guard([&repo](const httplib::Request& req, httplib::Response& res) {
                const auto body = ParseJson(req.body, "request body");
                SendJson(res, 200, api::RecommendResponse(*repo.snapshot(), body));
              }));

  server.Post("/v1/cost", Guard([&repo](const httplib::Request& req, httplib::Response& res) {
                const auto body = ParseJson(req.body, "request body");
                SendJson(res, 200, api::CostResponse(*repo.snapshot(), body));
              }));

  server.Put(R"(/v1/offers/([a-z]+)/([^/]+))", Guard([&repo](const httplib::Request& req, httplib::Response& res) {
               const OfferKind kind = KindFromPath(req.matches[1]);
               const std::string id = req.matches[2];
               if (!IsValidOfferId(id)) throw QueryError("invalid offer id '" + id + "'");
               const Offer raw = api::DecodeUpsertBody(kind, id, ParseJson(req.body, "request body"));
               const Snapshot after = repo.Upsert(raw);
               SendJson(res, 200, api::UpsertResponse(*after, id));
             }));
}

Service::~Service() { Stop(); }

int Service::Bind(const std::string& host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    bound = port;
  }
  if (bound <= 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void Service::Listen() { impl_->server.listen_after_bind(); }

void Service::Stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace cloudmatch

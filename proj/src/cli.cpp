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

#include "cloudmatch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "cloudmatch/api.hpp"
#include "cloudmatch/catalog.hpp"
#include "cloudmatch/codec.hpp"
#include "cloudmatch/errors.hpp"
#include "cloudmatch/ontology.hpp"
#include "cloudmatch/service.hpp"
#include "cloudmatch/units.hpp"

namespace cloudmatch {

namespace {

using nlohmann::json;

// Raised for unreadable input files; maps to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string catalog;
  std::string format = "table";
  std::optional<int> month_days;
};

void AddCommon(CLI::App* cmd, Common& common, bool with_format = true) {
  cmd->add_option("--catalog", common.catalog, "Catalog JSON document")->required();
  if (with_format) {
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  }
  cmd->add_option("--month-days", common.month_days, "Override the month length used for proration")
      ->check(CLI::Range(1, 366));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// Applies the month-length override to every plan before normalization.
std::string OverrideMonthDays(const std::string& text, std::optional<int> month_days) {
  if (!month_days) return text;
  json doc = ParseJson(text, "catalog");
  for (const char* kind : {"compute", "storage"}) {
    if (!doc.contains(kind) || !doc[kind].is_array()) continue;
    for (auto& offer : doc[kind]) {
      if (!offer.is_object() || !offer.contains("plans") || !offer["plans"].is_array()) continue;
      for (auto& plan : offer["plans"]) {
        if (plan.is_object()) plan["month_length_days"] = *month_days;
      }
    }
  }
  return doc.dump();
}

Catalog Load(const Common& common) { return LoadCatalog(OverrideMonthDays(ReadFile(common.catalog), common.month_days)); }

std::string Display(const json& value) {
  if (value.is_null()) return "-";
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_float()) return FormatDisplay(value.get<double>());
  if (value.is_boolean()) return value.get<bool>() ? "yes" : "no";
  return value.dump();
}

void PrintTable(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  const auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) text += "  ";
      text += cells[i];
      if (i + 1 < cells.size()) text.append(width[i] - cells[i].size(), ' ');
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void PrintBreakdown(std::ostream& out, const json& breakdown) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& item : breakdown["line_items"]) {
    rows.push_back({item["label"].get<std::string>(), Display(item["quantity"]), item["unit"].get<std::string>(),
                    Display(item["rate"]), Display(item["amount"])});
  }
  PrintTable(out, {"item", "quantity", "unit", "rate", "amount"}, rows);
  out << "total " << FormatDisplay(breakdown["total"].get<double>()) << ' '
      << breakdown["currency"].get<std::string>() << '\n';
}

void Emit(std::ostream& out, const Common& common, const json& body, const std::function<void()>& table) {
  if (common.format == "json") {
    out << body.dump() << '\n';
  } else {
    table();
  }
}

json CatalogSummary(const Catalog& catalog) {
  return {{"version", catalog.version},
          {"providers", catalog.providers.size()},
          {"compute", catalog.compute.size()},
          {"storage", catalog.storage.size()},
          {"network", catalog.network.size()}};
}

void PrintRejected(std::ostream& err, const RejectedOfferError& e) {
  for (const auto& offer : e.offers()) {
    for (const auto& v : offer.violations) {
      err << offer.offer_id << ": " << v.field << " violates " << v.constraint << " (observed " << v.observed << ")\n";
    }
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-provider IaaS catalog matching and cost estimation", "cloudmatch"};
  app.require_subcommand(1);

  // load / validate
  std::string doc_path;
  std::string load_format = "table";
  std::optional<int> load_month_days;
  auto* load = app.add_subcommand("load", "Load a catalog and print its summary");
  auto* validate = app.add_subcommand("validate", "Validate a catalog, listing every violation");
  for (auto* cmd : {load, validate}) {
    cmd->add_option("file", doc_path, "Catalog JSON document")->required();
    cmd->add_option("--format", load_format)->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--month-days", load_month_days)->check(CLI::Range(1, 366));
  }

  // match
  Common match_common;
  std::string match_kind;
  std::map<std::string, std::string> match_flags;
  auto* match = app.add_subcommand("match", "Filter, sort and project offers of one kind");
  AddCommon(match, match_common);
  match->add_option("kind", match_kind)->required()->check(CLI::IsMember({"compute", "storage", "network"}));
  for (const char* param :
       {"min_cores", "min_memory_gb", "min_clock_ghz", "size_gb", "location", "name_regex", "sort", "order", "columns"}) {
    std::string flag = std::string("--") + param;
    std::replace(flag.begin(), flag.end(), '_', '-');
    match->add_option_function<std::string>(
        flag, [&match_flags, param](const std::string& v) { match_flags[param] = v; });
  }

  // cost
  Common cost_common;
  std::string cost_scenario;
  std::optional<std::string> cost_compute;
  std::optional<std::string> cost_storage;
  std::optional<std::string> cost_network;
  auto* cost = app.add_subcommand("cost", "Price a scenario, for one bundle or as a savings report");
  AddCommon(cost, cost_common);
  cost->add_option("--scenario", cost_scenario, "Usage scenario JSON")->required();
  cost->add_option("--compute", cost_compute, "Compute offer id");
  cost->add_option("--storage", cost_storage, "Storage offer id");
  cost->add_option("--network", cost_network, "Network offer id");

  // recommend
  Common rec_common;
  std::string rec_scenario;
  std::optional<std::int64_t> rec_top_k;
  auto* recommend = app.add_subcommand("recommend", "Rank same-provider bundles by total cost");
  AddCommon(recommend, rec_common);
  recommend->add_option("--scenario", rec_scenario, "Usage scenario JSON")->required();
  recommend->add_option("--top-k", rec_top_k)->check(CLI::PositiveNumber);

  // export
  Common export_common;
  std::string export_format = "turtle";
  auto* exporter = app.add_subcommand("export", "Export the catalog as ontology individuals");
  AddCommon(exporter, export_common, false);
  exporter->add_option("--format", export_format)->check(CLI::IsMember({"turtle"}));

  // serve
  Common serve_common;
  int port = 8080;
  std::string host = "127.0.0.1";
  bool write_back = false;
  auto* serve = app.add_subcommand("serve", "Serve the HTTP API");
  AddCommon(serve, serve_common, false);
  serve->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve->add_option("--host", host);
  serve->add_flag("--write-back", write_back, "Persist accepted upserts to the catalog file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (load->parsed() || validate->parsed()) {
      Common common{doc_path, load_format, load_month_days};
      try {
        const Catalog catalog = Load(common);
        const json body = CatalogSummary(catalog);
        Emit(out, common, body, [&] {
          out << (validate->parsed() ? "valid: " : "loaded: ") << catalog.providers.size() << " providers, "
              << catalog.compute.size() << " compute, " << catalog.storage.size() << " storage, "
              << catalog.network.size() << " network offers\n";
        });
      } catch (const RejectedOfferError& e) {
        if (load_format == "json") {
          out << api::ErrorBody(e).dump() << '\n';
        } else {
          PrintRejected(out, e);
        }
        return kExitDomainError;
      }
      return kExitOk;
    }

    if (match->parsed()) {
      const Catalog catalog = Load(match_common);
      const auto request = api::ParseOfferParams(*ParseOfferKind(match_kind), match_flags);
      const json body = api::OffersResponse(catalog, request);
      Emit(out, match_common, body, [&] {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : body["rows"]) {
          std::vector<std::string> cells;
          for (const auto& cell : row) cells.push_back(Display(cell));
          rows.push_back(std::move(cells));
        }
        PrintTable(out, body["columns"].get<std::vector<std::string>>(), rows);
      });
      return kExitOk;
    }

    if (cost->parsed()) {
      const Catalog catalog = Load(cost_common);
      json body = ParseJson(ReadFile(cost_scenario), "scenario");
      if (cost_compute || cost_storage || cost_network) {
        json bundle = json::object();
        if (cost_compute) bundle["compute"] = *cost_compute;
        if (cost_storage) bundle["storage"] = *cost_storage;
        if (cost_network) bundle["network"] = *cost_network;
        body["bundle"] = bundle;
      }
      const json response = api::CostResponse(catalog, body);
      Emit(out, cost_common, response, [&] {
        if (response.contains("breakdown")) {
          PrintBreakdown(out, response["breakdown"]);
          return;
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& option : response["options"]) {
          rows.push_back({option["option"].get<std::string>(), option["provider"].get<std::string>(),
                          Display(option["total"]), Display(option["delta"])});
        }
        PrintTable(out, {"option", "provider", "total", "delta"}, rows);
      });
      if (response.contains("options") && response["options"].empty()) {
        err << "no feasible bundle for this scenario\n";
        return kExitDomainError;
      }
      return kExitOk;
    }

    if (recommend->parsed()) {
      const Catalog catalog = Load(rec_common);
      json body = ParseJson(ReadFile(rec_scenario), "scenario");
      if (rec_top_k) body["top_k"] = *rec_top_k;
      const json response = api::RecommendResponse(catalog, body);
      Emit(out, rec_common, response, [&] {
        std::vector<std::vector<std::string>> rows;
        for (const auto& rec : response["recommendations"]) {
          rows.push_back({std::to_string(rec["rank"].get<std::size_t>()), rec["provider"].get<std::string>(),
                          Display(rec["bundle"]["compute"]), Display(rec["bundle"]["storage"]),
                          Display(rec["bundle"]["network"]), Display(rec["breakdown"]["total"]),
                          rec["breakdown"]["currency"].get<std::string>()});
        }
        PrintTable(out, {"rank", "provider", "compute", "storage", "network", "total", "currency"}, rows);
      });
      if (response["recommendations"].empty()) {
        err << "no feasible bundle for this scenario\n";
        return kExitDomainError;
      }
      return kExitOk;
    }

    if (exporter->parsed()) {
      out << ExportOntology(Load(export_common));
      return kExitOk;
    }

    if (serve->parsed()) {
      const std::string text = OverrideMonthDays(ReadFile(serve_common.catalog), serve_common.month_days);
      std::optional<std::filesystem::path> target;
      if (write_back) target = serve_common.catalog;
      Repository repository(LoadCatalog(text), target);
      Service service(repository);
      const int bound = service.Bind(host, port);
      out << "listening on http://" << host << ':' << bound << '\n' << std::flush;
      service.Listen();
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RejectedOfferError& e) {
    err << "error: " << e.what() << '\n';
    PrintRejected(err, e);
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsage;
}

}  // namespace cloudmatch

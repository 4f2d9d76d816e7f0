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

#include "cloudmatch/ontology.hpp"

#include <sstream>
#include <vector>

#include "cloudmatch/units.hpp"

namespace cloudmatch {

namespace {

std::string Literal(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out += c;
    }
  }
  return out + "\"";
}

// Offer ids are [a-z0-9-]+; a prefixed name cannot start with '-'.
std::string Individual(std::string_view id) {
  if (!id.empty() && id.front() == '-') return "<" + std::string(kOfferNamespace) + std::string(id) + ">";
  return "offer:" + std::string(id);
}

std::string Decimal(double value) { return "\"" + FormatDecimal(value) + "\"^^xsd:decimal"; }

std::string Metric(const Quantity& q) {
  return "[ cocoon:hasValue " + Decimal(q.value) + " ; cocoon:hasUnitOfMeasurement " +
         Literal(ToString(q.unit)) + " ]";
}

std::string PriceMetric(const Price& p) {
  return "[ cocoon:hasValue " + Decimal(p.amount) + " ; cocoon:hasUnitOfMeasurement " +
         Literal(FormatPriceUnit(p)) + " ]";
}

// Accumulates "predicate object" pairs for one subject.
class Subject {
 public:
  void Add(std::string predicate, std::string object) { pairs_.emplace_back(std::move(predicate), std::move(object)); }

  void Write(std::ostream& out, const std::string& subject) const {
    out << subject;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      out << (i == 0 ? " " : " ;\n    ") << pairs_[i].first << ' ' << pairs_[i].second;
    }
    out << " .\n\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
};

std::string PlanNode(const PricePlan& plan) {
  std::string node = "[ a cocoon:PricePlan ; cocoon:PlanType " + Literal(ToString(plan.plan_type)) +
                     " ; cocoon:BillingUnit " + Literal(ToString(plan.billing_unit)) + " ; cocoon:CostPerPeriod " +
                     PriceMetric(plan.cost_per_period) + " ; cocoon:PeriodLength " + Metric(plan.period_length);
  if (plan.included_capacity) node += " ; cocoon:hasCapacity " + Metric(*plan.included_capacity);
  if (plan.cost_over_limit) node += " ; cocoon:CostOverLimit " + PriceMetric(*plan.cost_over_limit);
  return node + " ]";
}

void AddCommon(Subject& s, const std::string& name, const std::string& provider, const std::vector<Location>& locations) {
  s.Add("cocoon:hasName", Literal(name));
  s.Add("cocoon:hasProvider", Literal(provider));
  for (const auto& loc : locations) s.Add("cocoon:Location", Literal(ToString(loc)));
}

}  // namespace

std::string ExportOntology(const Catalog& catalog) {
  std::ostringstream out;
  out << "@prefix cocoon: <" << kCocoonNamespace << "> .\n";
  out << "@prefix offer: <" << kOfferNamespace << "> .\n";
  out << "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";
  if (catalog.OfferCount() > 0) out << '\n';

  for (const auto& o : catalog.compute) {
    Subject s;
    s.Add("a", "cocoon:Compute");
    AddCommon(s, o.name, o.provider, o.locations);
    s.Add("cocoon:hasCPU", std::string("[ a ") + (o.clustered ? "cocoon:ClusteredCPU" : "cocoon:CPU") +
                               " ; cocoon:Core \"" + std::to_string(o.cores) +
                               "\"^^xsd:integer ; cocoon:CPUClockSpeed " + Metric(o.clock_speed) + " ]");
    s.Add("cocoon:hasMemory", Metric(o.memory));
    if (o.memory_address_size) s.Add("cocoon:hasMemoryAddressSize", Literal(ToString(*o.memory_address_size)));
    if (o.local_storage) s.Add("cocoon:hasLocalStorage", Metric(*o.local_storage));
    if (o.virtualization) s.Add("cocoon:hasVirtualization", Literal(*o.virtualization));
    for (const auto& net : o.supported_networks) s.Add("cocoon:hasSupportedNetwork", Individual(net));
    for (const auto& plan : o.plans) s.Add("cocoon:hasPricePlan", PlanNode(plan));
    s.Write(out, Individual(o.id));
  }

  for (const auto& o : catalog.storage) {
    Subject s;
    s.Add("a", "cocoon:Storage , cocoon:" + std::string(ToString(o.kind)));
    AddCommon(s, o.name, o.provider, o.locations);
    s.Add("cocoon:StorageSizeMin", Metric(o.size_min));
    s.Add("cocoon:StorageSizeMax", Metric(o.size_max));
    for (const auto& compute : catalog.compute) {
      if (compute.provider != o.provider) continue;
      for (const auto& pattern : o.attachable_to) {
        if (GlobMatch(pattern, compute.id)) {
          s.Add("cocoon:isAttachable", Individual(compute.id));
          break;
        }
      }
    }
    for (const auto& rule : o.request_pricing) {
      std::string node = "[ a cocoon:RequestFeeRule";
      for (const auto verb : rule.verbs) node += " ; cocoon:RequestType " + Literal(ToString(verb));
      node += " ; cocoon:RequestCategory " + Literal(ToString(rule.category));
      node += " ; cocoon:FeeStatus " + Literal(ToString(rule.fee_status));
      if (rule.cost_per_request) node += " ; cocoon:CostPerRequest " + PriceMetric(*rule.cost_per_request);
      s.Add("cocoon:hasRequestPricing", node + " ]");
    }
    for (const auto& plan : o.plans) s.Add("cocoon:hasPricePlan", PlanNode(plan));
    s.Write(out, Individual(o.id));
  }

  for (const auto& o : catalog.network) {
    Subject s;
    s.Add("a", "cocoon:Network");
    AddCommon(s, o.name, o.provider, o.locations);
    if (o.bandwidth) s.Add("cocoon:hasBandwidth", Metric(*o.bandwidth));
    for (const auto& protocol : o.protocols) s.Add("cocoon:hasProtocol", Literal(protocol));
    s.Add("cocoon:CostDataTransferIn", PriceMetric(o.cost_data_transfer_in));
    s.Add("cocoon:CostDataTransferOut", PriceMetric(o.cost_data_transfer_out));
    s.Write(out, Individual(o.id));
  }

  std::string text = out.str();
  // Single trailing newline.
  while (text.size() >= 2 && text[text.size() - 1] == '\n' && text[text.size() - 2] == '\n') text.pop_back();
  return text;
}

}  // namespace cloudmatch

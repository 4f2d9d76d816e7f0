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

#include <gtest/gtest.h>

#include <random>

#include "cloudmatch/api.hpp"
#include "cloudmatch/catalog.hpp"
#include "cloudmatch/errors.hpp"
#include "cloudmatch/matching.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cloudmatch {
namespace {

template <typename Offer>
std::vector<std::string> Ids(const std::vector<Offer>& offers) {
  std::vector<std::string> out;
  for (const auto& o : offers) out.push_back(o.id);
  return out;
}

std::vector<std::string> TableIds(const Table& table) {
  std::vector<std::string> out;
  for (const auto& row : table.rows) out.push_back(std::get<std::string>(row.at(0)));
  return out;
}

TEST(MatchCompute, MinCores) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("two_offers.json"));
  MatchQuery q;
  q.min_cores = 2;
  EXPECT_EQ(Ids(MatchCompute(c, q)), std::vector<std::string>{"offer-b"});
  q.min_cores = 1;
  EXPECT_EQ(Ids(MatchCompute(c, q)), (std::vector<std::string>{"offer-a", "offer-b"}));
  q.min_cores = 5;
  EXPECT_TRUE(MatchCompute(c, q).empty());
}

TEST(MatchCompute, MemoryIsNormalised) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("two_offers.json"));
  MatchQuery q;
  q.min_memory_gb = 0.598;
  EXPECT_EQ(MatchCompute(c, q).size(), 2u);
  q.min_memory_gb = 0.6;
  EXPECT_EQ(Ids(MatchCompute(c, q)), std::vector<std::string>{"offer-b"});
}

TEST(MatchCompute, NameRegexIsFullMatch) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("provider_catalog.json"));
  MatchQuery q;
  q.name_regex = "EC2.*";
  const auto rows = MatchCompute(c, q);
  ASSERT_FALSE(rows.empty());
  for (const auto& o : rows) EXPECT_EQ(o.name.rfind("EC2", 0), 0u) << o.name;
  q.name_regex = "EC2";
  EXPECT_TRUE(MatchCompute(c, q).empty());
  q.name_regex = "(";
  EXPECT_THROW(MatchCompute(c, q), QueryError);
}

TEST(MatchCompute, SortDescending) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("two_offers.json"));
  MatchQuery q;
  q.sort_key = "memory";
  q.order = SortOrder::Descending;
  EXPECT_EQ(Ids(MatchCompute(c, q)), (std::vector<std::string>{"offer-b", "offer-a"}));
  q.sort_key = "nonsense";
  EXPECT_THROW(MatchCompute(c, q), QueryError);
}

TEST(MatchStorage, SizeBoundsInclusive) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("ec2_attach.json"));
  MatchQuery q;
  q.kind = OfferKind::Storage;
  q.size_gb = 1024;
  const auto ids = Ids(MatchStorage(c, q));
  EXPECT_NE(std::find(ids.begin(), ids.end(), "ebs"), ids.end());
  q.size_gb = 1024.5;
  const auto ids2 = Ids(MatchStorage(c, q));
  EXPECT_EQ(std::find(ids2.begin(), ids2.end(), "ebs"), ids2.end());
}

TEST(AttachablePairs, PersistentStorage) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("ec2_attach.json"));
  using Pair = std::pair<std::string, std::string>;
  auto pairs = [&](double gb) {
    std::vector<Pair> out;
    for (const auto& [comp, stor] : AttachablePairs(c, MatchQuery{}, gb)) out.push_back({comp.id, stor.id});
    return out;
  };
  EXPECT_EQ(pairs(5), (std::vector<Pair>{{"ec2-micro", "ebs"}}));
  EXPECT_TRUE(pairs(2048).empty());
}

TEST(CanAttach, ProviderAndPattern) {
  const Catalog c = LoadCatalog(cmtest::ReadFixture("ec2_attach.json"));
  const StorageOffer& ebs = *c.FindStorage("ebs");
  EXPECT_TRUE(CanAttach(ebs, *c.FindCompute("ec2-micro")));
  EXPECT_FALSE(CanAttach(ebs, *c.FindCompute("gogrid-1gb")));
  StorageOffer open = ebs;
  open.attachable_to = {"*"};
  EXPECT_FALSE(CanAttach(open, *c.FindCompute("gogrid-1gb")));
  EXPECT_FALSE(CanAttach(*c.FindStorage("s3"), *c.FindCompute("ec2-micro")));
}

TEST(OfferTable, MatchesOracle) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 150; ++iter) {
    cmtest::GLimits limits;
    limits.max_per_kind = 17;
    const auto gen = cmtest::RandomCatalog(rng, limits);
    const Catalog c = LoadCatalog(gen.ToJson().dump());
    const auto query = cmtest::RandomQuery(rng, gen);
    const auto kind = *ParseOfferKind(query.kind);
    const auto expected = cmtest::OracleMatch(gen, query);
    const auto actual = TableIds(api::OfferTable(c, api::ParseOfferParams(kind, query.params)));
    ASSERT_EQ(actual, expected) << "iteration " << iter << " query " << nlohmann::json(query.params).dump();
  }
}

}  // namespace
}  // namespace cloudmatch

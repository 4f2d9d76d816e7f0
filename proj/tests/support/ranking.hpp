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

#ifndef CLOUDMATCH_TESTS_SUPPORT_RANKING_HPP_
#define CLOUDMATCH_TESTS_SUPPORT_RANKING_HPP_

#include <cmath>
#include <string>
#include <vector>

#include "cloudmatch/recommend.hpp"
#include "oracles.hpp"

namespace cmtest {

inline constexpr double kTotalRelTol = 1e-9;

inline bool TotalsClose(double a, double b) {
  return std::abs(a - b) <= kTotalRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Empty when the ranking equals the oracle's, else a description of the
// first difference.
inline std::string RankingDiff(const std::vector<cloudmatch::Recommendation>& actual, const OracleRanking& expected) {
  if (actual.size() != expected.bundles.size()) {
    return "size " + std::to_string(actual.size()) + " != " + std::to_string(expected.bundles.size());
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const auto& a = actual[i];
    const auto& e = expected.bundles[i];
    const bool same = a.rank == i + 1 && a.provider == e.provider && a.compute_id == e.compute &&
                      a.storage_id.value_or("") == e.storage && a.network_id.value_or("") == e.network &&
                      TotalsClose(a.quote.breakdown.total, e.total);
    if (!same) {
      return "rank " + std::to_string(i + 1) + ": got " + a.compute_id + "/" + a.storage_id.value_or("-") + "/" +
             a.network_id.value_or("-") + " " + std::to_string(a.quote.breakdown.total) + ", want " + e.compute +
             "/" + e.storage + "/" + e.network + " " + std::to_string(e.total);
    }
  }
  return "";
}

}  // namespace cmtest

#endif  // CLOUDMATCH_TESTS_SUPPORT_RANKING_HPP_

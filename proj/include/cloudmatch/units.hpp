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

#ifndef CLOUDMATCH_UNITS_HPP_
#define CLOUDMATCH_UNITS_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace cloudmatch {

enum class Unit { MB, GB, TB, GHz, ECU, Mbps, Gbps, Hour, Day, Month, Count };

enum class Dimension { Size, Frequency, Bandwidth, Time, Count };

Dimension DimensionOf(Unit unit);

std::string_view ToString(Unit unit);
std::optional<Unit> ParseUnit(std::string_view text);

struct Quantity {
  double value = 0.0;
  Unit unit = Unit::Count;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

// What a price is charged per. Flat prices are charged once per billing
// period (prepaid plan fees).
enum class PriceBasis { Flat, Hour, RamHour, GbMonth, Request, Gb };

std::string_view ToString(PriceBasis basis);

// A monetary rate. Canonical prices have `per == 1` and `size_unit == GB`,
// e.g. "USD/GB-month". Provider-native prices may be quoted per 1000
// requests or per MB and are rescaled during normalization.
struct Price {
  double amount = 0.0;
  std::string currency;
  PriceBasis basis = PriceBasis::Flat;
  double per = 1.0;
  Unit size_unit = Unit::GB;

  bool IsCanonical() const { return per == 1.0 && size_unit == Unit::GB; }

  friend bool operator==(const Price&, const Price&) = default;
};

// "USD/1000 request", "USD/MB-month", "AUD/RAM-hour", "USD".
std::optional<Price> ParsePriceUnit(std::string_view unit, double amount);
std::string FormatPriceUnit(const Price& price);

// Fixed-point rendering with three fractional digits, used for tables.
std::string FormatDisplay(double value);

// Shortest round-trip decimal rendering that always carries a '.', used for
// Turtle literals ("2.0", "0.5986328125").
std::string FormatDecimal(double value);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_UNITS_HPP_

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

#include "cloudmatch/units.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace cloudmatch {

namespace {

struct UnitName {
  Unit unit;
  std::string_view name;
};

constexpr std::array<UnitName, 11> kUnitNames{{
    {Unit::MB, "MB"},
    {Unit::GB, "GB"},
    {Unit::TB, "TB"},
    {Unit::GHz, "GHz"},
    {Unit::ECU, "ECU"},
    {Unit::Mbps, "Mbps"},
    {Unit::Gbps, "Gbps"},
    {Unit::Hour, "hour"},
    {Unit::Day, "day"},
    {Unit::Month, "month"},
    {Unit::Count, "count"},
}};

std::string Lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

std::optional<Unit> ParseSizeUnit(std::string_view text) {
  if (text == "MB") return Unit::MB;
  if (text == "GB") return Unit::GB;
  if (text == "TB") return Unit::TB;
  return std::nullopt;
}

bool IsCurrencyCode(std::string_view text) {
  if (text.size() != 3) return false;
  for (char c : text) {
    if (c < 'A' || c > 'Z') return false;
  }
  return true;
}

}  // namespace

Dimension DimensionOf(Unit unit) {
  switch (unit) {
    case Unit::MB:
    case Unit::GB:
    case Unit::TB:
      return Dimension::Size;
    case Unit::GHz:
    case Unit::ECU:
      return Dimension::Frequency;
    case Unit::Mbps:
    case Unit::Gbps:
      return Dimension::Bandwidth;
    case Unit::Hour:
    case Unit::Day:
    case Unit::Month:
      return Dimension::Time;
    case Unit::Count:
      return Dimension::Count;
  }
  return Dimension::Count;
}

std::string_view ToString(Unit unit) {
  for (const auto& entry : kUnitNames) {
    if (entry.unit == unit) return entry.name;
  }
  return "count";
}

std::optional<Unit> ParseUnit(std::string_view text) {
  for (const auto& entry : kUnitNames) {
    if (entry.name == text) return entry.unit;
  }
  const std::string lower = Lower(text);
  if (lower == "hours" || lower == "hr" || lower == "h") return Unit::Hour;
  if (lower == "days") return Unit::Day;
  if (lower == "months") return Unit::Month;
  if (lower == "ghz") return Unit::GHz;
  return std::nullopt;
}

std::string_view ToString(PriceBasis basis) {
  switch (basis) {
    case PriceBasis::Flat:
      return "flat";
    case PriceBasis::Hour:
      return "hour";
    case PriceBasis::RamHour:
      return "RAM-hour";
    case PriceBasis::GbMonth:
      return "GB-month";
    case PriceBasis::Request:
      return "request";
    case PriceBasis::Gb:
      return "GB";
  }
  return "flat";
}

std::optional<Price> ParsePriceUnit(std::string_view unit, double amount) {
  unit = Trim(unit);
  const auto slash = unit.find('/');
  const std::string_view currency = Trim(unit.substr(0, slash));
  if (!IsCurrencyCode(currency)) return std::nullopt;

  Price price;
  price.amount = amount;
  price.currency = std::string(currency);
  if (slash == std::string_view::npos) {
    price.basis = PriceBasis::Flat;
    return price;
  }

  std::string_view denom = Trim(unit.substr(slash + 1));
  // Optional count multiplier: "1000 request".
  if (!denom.empty() && std::isdigit(static_cast<unsigned char>(denom.front()))) {
    double per = 0.0;
    const auto [ptr, ec] = std::from_chars(denom.data(), denom.data() + denom.size(), per);
    if (ec != std::errc{} || per <= 0.0) return std::nullopt;
    price.per = per;
    denom = Trim(denom.substr(static_cast<std::size_t>(ptr - denom.data())));
  }

  const std::string lower = Lower(denom);
  if (lower == "hour" || lower == "hr" || lower == "h") {
    price.basis = PriceBasis::Hour;
    return price;
  }
  if (lower == "ram-hour" || lower == "ram hour" || lower == "ram-hr" || lower == "ram hr") {
    price.basis = PriceBasis::RamHour;
    return price;
  }
  if (lower == "request" || lower == "requests" || lower == "req" || lower == "transaction" ||
      lower == "transactions") {
    price.basis = PriceBasis::Request;
    return price;
  }
  if (lower == "period" || lower == "month" || lower == "day" || lower == "year") {
    price.basis = PriceBasis::Flat;
    return price;
  }
  // "<size>", "<size>-month", "<size> month", "<size>-hour".
  const auto sep = denom.find_first_of("- ");
  const std::string_view size_text = denom.substr(0, sep);
  const auto size = ParseSizeUnit(size_text);
  if (!size) return std::nullopt;
  price.size_unit = *size;
  if (sep == std::string_view::npos) {
    price.basis = PriceBasis::Gb;
    return price;
  }
  const std::string suffix = Lower(Trim(denom.substr(sep + 1)));
  if (suffix == "month") {
    price.basis = PriceBasis::GbMonth;
    return price;
  }
  if (suffix == "hour" || suffix == "hr") {
    price.basis = PriceBasis::RamHour;
    return price;
  }
  return std::nullopt;
}

std::string FormatPriceUnit(const Price& price) {
  std::string out = price.currency;
  if (price.basis == PriceBasis::Flat) return out;
  out += '/';
  if (price.per != 1.0) {
    out += FormatDecimal(price.per);
    // "1000.0" reads poorly in a unit string.
    if (out.size() > 2 && out.substr(out.size() - 2) == ".0") out.resize(out.size() - 2);
    out += ' ';
  }
  const std::string size(ToString(price.size_unit));
  switch (price.basis) {
    case PriceBasis::Flat:
      break;
    case PriceBasis::Hour:
      out += "hour";
      break;
    case PriceBasis::RamHour:
      out += price.size_unit == Unit::GB ? std::string("RAM-hour") : size + "-hour";
      break;
    case PriceBasis::GbMonth:
      out += size + "-month";
      break;
    case PriceBasis::Request:
      out += "request";
      break;
    case PriceBasis::Gb:
      out += size;
      break;
  }
  return out;
}

std::string FormatDisplay(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

std::string FormatDecimal(double value) {
  if (!std::isfinite(value)) return "0.0";
  std::array<char, 512> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
  std::string out(buf.data(), ec == std::errc{} ? ptr : buf.data());
  if (out.find('.') == std::string::npos) out += ".0";
  return out;
}

}  // namespace cloudmatch

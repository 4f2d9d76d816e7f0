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

#ifndef CLOUDMATCH_ERRORS_HPP_
#define CLOUDMATCH_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cloudmatch {

// A single broken constraint on an offer. `constraint` is the human-readable
// rule ("Core >= 1"), `field` the dotted path inside the offer record.
struct Violation {
  std::string field;
  std::string constraint;
  std::string observed;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using ValidationReport = std::vector<Violation>;

struct RejectedOffer {
  std::string offer_id;
  ValidationReport violations;
};

// Base of every domain error raised by the library. Anything deriving from
// this is an "expected" failure (bad input, unsatisfiable request) rather
// than a programming error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IncompatibleUnitsError : public Error {
 public:
  using Error::Error;
};

class InvalidRatingError : public Error {
 public:
  using Error::Error;
};

class DuplicateRegionError : public Error {
 public:
  using Error::Error;
};

// Malformed catalog / request document. `path` is a field path such as
// "compute[3].memory.unit"; `line` is set for JSON syntax errors.
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message, int line = 0)
      : Error(Format(path, message, line)), path_(std::move(path)), line_(line) {}

  const std::string& path() const { return path_; }
  int line() const { return line_; }

 private:
  static std::string Format(const std::string& path, const std::string& message, int line) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!path.empty()) out += path + ": ";
    return out + message;
  }

  std::string path_;
  int line_;
};

class RejectedOfferError : public Error {
 public:
  explicit RejectedOfferError(std::vector<RejectedOffer> offers)
      : Error(Format(offers)), offers_(std::move(offers)) {}

  const std::vector<RejectedOffer>& offers() const { return offers_; }

 private:
  static std::string Format(const std::vector<RejectedOffer>& offers) {
    std::string out = "rejected offer(s):";
    for (const auto& offer : offers) {
      out += " " + offer.offer_id + " [";
      for (std::size_t i = 0; i < offer.violations.size(); ++i) {
        if (i > 0) out += "; ";
        out += offer.violations[i].field + ": " + offer.violations[i].constraint + " (observed " +
               offer.violations[i].observed + ")";
      }
      out += "]";
    }
    return out;
  }

  std::vector<RejectedOffer> offers_;
};

class IntegrityError : public Error {
 public:
  using Error::Error;
};

class QueryError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class CurrencyError : public Error {
 public:
  using Error::Error;
};

class PlanMismatchError : public Error {
 public:
  using Error::Error;
};

// Negative usage volumes and similar precondition failures on cost inputs.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

}  // namespace cloudmatch

#endif  // CLOUDMATCH_ERRORS_HPP_

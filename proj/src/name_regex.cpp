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

#include "cloudmatch/name_regex.hpp"

#include <string>

#include "cloudmatch/errors.hpp"

namespace cloudmatch {

namespace {

void CheckDialect(std::string_view pattern) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const char c = pattern[i];
    if (c == '\\') {
      if (i + 1 >= pattern.size()) throw QueryError("name_regex: trailing backslash");
      const char next = pattern[i + 1];
      if (next >= '0' && next <= '9') throw QueryError("name_regex: backreferences are not supported");
      if (next == 'b' || next == 'B') throw QueryError("name_regex: word boundaries are not supported");
      ++i;
    } else if (c == '(' && i + 1 < pattern.size() && pattern[i + 1] == '?') {
      throw QueryError("name_regex: lookaround and group modifiers are not supported");
    } else if (c == '{') {
      throw QueryError("name_regex: bounded repetition is not supported");
    }
  }
}

}  // namespace

NameRegex::NameRegex(std::string_view pattern) {
  CheckDialect(pattern);
  try {
    regex_ = std::regex(std::string(pattern), std::regex::ECMAScript);
  } catch (const std::regex_error& e) {
    throw QueryError("name_regex: invalid pattern '" + std::string(pattern) + "': " + e.what());
  }
}

bool NameRegex::Matches(std::string_view name) const {
  return std::regex_match(name.begin(), name.end(), regex_);
}

}  // namespace cloudmatch

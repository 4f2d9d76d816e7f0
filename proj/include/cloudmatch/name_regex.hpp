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

#ifndef CLOUDMATCH_NAME_REGEX_HPP_
#define CLOUDMATCH_NAME_REGEX_HPP_

#include <regex>
#include <string_view>

namespace cloudmatch {

// Offer-name patterns use a small regex core: literals, character classes,
// '.', '*', '+', '?', '|', grouping and '^'/'$' anchors. Backreferences,
// lookaround and bounded repetition are rejected so the same pattern means
// the same thing in any mainstream engine. A pattern must match the whole
// name ("EC2.*" selects names starting with "EC2").
class NameRegex {
 public:
  // Throws QueryError on a pattern outside the supported core.
  explicit NameRegex(std::string_view pattern);

  bool Matches(std::string_view name) const;

 private:
  std::regex regex_;
};

}  // namespace cloudmatch

#endif  // CLOUDMATCH_NAME_REGEX_HPP_

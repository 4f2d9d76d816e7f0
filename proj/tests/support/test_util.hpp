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

#ifndef CLOUDMATCH_TESTS_SUPPORT_TEST_UTIL_HPP_
#define CLOUDMATCH_TESTS_SUPPORT_TEST_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cmtest {

inline std::string FixturePath(const std::string& name) { return std::string(CLOUDMATCH_FIXTURES_DIR) + "/" + name; }

inline std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string ReadFixture(const std::string& name) { return ReadText(FixturePath(name)); }

}  // namespace cmtest

#endif  // CLOUDMATCH_TESTS_SUPPORT_TEST_UTIL_HPP_

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

#ifndef CLOUDMATCH_SERVICE_HPP_
#define CLOUDMATCH_SERVICE_HPP_

#include <memory>
#include <string>

#include "cloudmatch/catalog.hpp"

namespace cloudmatch {

// HTTP+JSON front end over a Repository. Each request pins one snapshot;
// PUT requests go through Repository::Upsert.
class Service {
 public:
  explicit Service(Repository& repository);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds host:port (port 0 picks a free port) and returns the bound
  // port. Throws Error when the bind fails.
  int Bind(const std::string& host, int port);
  // Blocks serving requests until Stop() is called.
  void Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cloudmatch

#endif  // CLOUDMATCH_SERVICE_HPP_

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

#ifndef CLOUDMATCH_VALIDATION_HPP_
#define CLOUDMATCH_VALIDATION_HPP_

#include <span>
#include <string_view>

#include "cloudmatch/errors.hpp"
#include "cloudmatch/model.hpp"

namespace cloudmatch {

// Checks every range constraint on the configuration parameters plus the
// structural invariants of the offer types. Units may still be
// provider-native; sign checks do not depend on them and the size-order
// check converts first. Never throws: violations are returned as data.
ValidationReport ValidateOffer(const Offer& offer);

// Where each configuration parameter symbol lives in the model.
struct ParameterBinding {
  std::string_view symbol;
  std::string_view type;
  std::string_view field;
};

std::span<const ParameterBinding> ConfigurationParameters();

}  // namespace cloudmatch

#endif  // CLOUDMATCH_VALIDATION_HPP_

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

#ifndef CLOUDMATCH_ONTOLOGY_HPP_
#define CLOUDMATCH_ONTOLOGY_HPP_

#include <string>
#include <string_view>

#include "cloudmatch/catalog.hpp"

namespace cloudmatch {

inline constexpr std::string_view kCocoonNamespace = "http://w3c.org.au/cocoon.owl#";
inline constexpr std::string_view kOfferNamespace = "urn:cloudmatch:offer:";

// Serializes the catalog as Turtle: one individual per offer typed as
// cocoon:Compute, cocoon:Storage or cocoon:Network, with quantities as
// blank-node metrics carrying a value and a unit of measurement.
std::string ExportOntology(const Catalog& catalog);

}  // namespace cloudmatch

#endif  // CLOUDMATCH_ONTOLOGY_HPP_

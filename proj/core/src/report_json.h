// Copyright 2026 The codexgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON building blocks shared by the exporters and the report writer.

#ifndef CODEXGRAPH_SRC_REPORT_JSON_H_
#define CODEXGRAPH_SRC_REPORT_JSON_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "codexgraph/communities.h"
#include "codexgraph/corpus.h"

namespace codexgraph::internal {

using Json = nlohmann::ordered_json;

// Rounds to 12 significant digits so reports do not depend on the last bits
// of floating-point results; non-finite values become strings.
Json Number(double x);

// Like Number, with values below 1e-10 in magnitude written as 0.
Json Eigenvalue(double x);

std::string Hex64(uint64_t x);

Json SpectralConfigJson(const SpectralConfig& config);

// Partition section; at most `max_eigenvalues` eigenvalues are listed.
Json PartitionJson(const CommunityResult& result, const Corpus& corpus,
                   size_t max_eigenvalues);

}  // namespace codexgraph::internal

#endif  // CODEXGRAPH_SRC_REPORT_JSON_H_

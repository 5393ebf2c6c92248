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

// Serialization of graphs and partitions to GraphML, DOT, JSON and CSV.

#ifndef CODEXGRAPH_EXPORT_H_
#define CODEXGRAPH_EXPORT_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "codexgraph/communities.h"
#include "codexgraph/corpus.h"
#include "codexgraph/graph.h"

namespace codexgraph {

enum class ExportFormat { kGraphml, kDot, kJson, kCsv };

// Throws UsageError for an unknown name.
ExportFormat ParseFormat(std::string_view name);
std::string_view FormatName(ExportFormat format);

// Book colors, assigned by the position of the book in the code.
inline constexpr std::array<std::string_view, 7> kBookPalette = {
    "blue", "green", "orange", "yellow", "pink", "darkblue", "grey"};

// Palette entry of `book` (cycling past seven books); "white" for none.
std::string_view BookColor(const Corpus& corpus,
                           const std::optional<NodeId>& book);

// Vertex attributes are id, degree and, when a corpus is given, kind and
// book (DOT: a book color). Edges carry their multiplicity.
std::string ExportGraph(const Graph& graph, const Corpus* corpus,
                        ExportFormat format);

// One node per community (size, dominant book, colored), one weighted edge
// per pair of communities with cross edges, and diamond-shaped centrals
// linked to their communities. Books are profiled with BookProfile. CSV is
// not supported for this document and raises UsageError.
std::string ExportCommunityGraph(const Partition& partition,
                                 const Corpus& corpus, ExportFormat format);

// Partition document: assignment, community table, centrals, inter-community
// edges, eigenvalues and the spectral configuration.
std::string ExportPartition(const CommunityResult& result,
                            const SpectralConfig& config,
                            const Corpus& corpus);

}  // namespace codexgraph

#endif  // CODEXGRAPH_EXPORT_H_

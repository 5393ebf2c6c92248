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

#ifndef CODEXGRAPH_CORPUS_H_
#define CODEXGRAPH_CORPUS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace codexgraph {

// Levels of a code's table of contents, coarsest first. Only articles carry
// body text.
enum class NodeKind {
  kCode,
  kBook,
  kTitle,
  kChapter,
  kSection,
  kSubsection,
  kParagraph,
  kArticle,
};

inline constexpr int kNumNodeKinds = 8;

std::string_view KindName(NodeKind kind);
std::optional<NodeKind> ParseKind(std::string_view name);

using NodeId = std::string;

struct CorpusNode {
  NodeId id;
  NodeKind kind = NodeKind::kArticle;
  std::string heading;
  std::string text;
  std::vector<size_t> children;
  std::optional<size_t> parent;
};

// Immutable hierarchy of a legal code. Nodes are stored in document
// (pre-order) order; node 0 is the root and has kind kCode.
class Corpus {
 public:
  class Builder;

  const CorpusNode& root() const { return nodes_.front(); }
  const std::vector<CorpusNode>& nodes() const { return nodes_; }
  const CorpusNode& node(size_t index) const { return nodes_.at(index); }
  size_t size() const { return nodes_.size(); }

  std::optional<size_t> Find(std::string_view id) const;
  // Like Find, but throws LookupError for an unknown id.
  size_t IndexOf(std::string_view id) const;
  const CorpusNode& Get(std::string_view id) const {
    return nodes_[IndexOf(id)];
  }

 private:
  Corpus() = default;

  std::vector<CorpusNode> nodes_;
  std::unordered_map<std::string, size_t> index_;
};

// Incremental construction with the same validation as LoadCorpus. Nodes
// must be added parent-first, in document order.
class Corpus::Builder {
 public:
  // Starts a corpus whose root node has kind kCode. The root id is taken
  // verbatim.
  Builder(std::string root_id, std::string heading);

  // Adds a child of `parent` (an index returned by a previous call, or 0 for
  // the root) and returns its index. `raw_id` is normalized with
  // NormalizeId. `location` only decorates error messages.
  size_t Add(size_t parent, std::string_view raw_id, NodeKind kind,
             std::string heading, std::string text = {},
             std::string location = {});

  Corpus Build() &&;

 private:
  Corpus corpus_;
  std::vector<std::string> locations_;
};

// Parses a `codexgraph-corpus-v1` document. Throws SchemaError,
// DuplicateIdError, HierarchyError or NormalizationError.
Corpus LoadCorpus(std::string_view document);
Corpus LoadCorpusFile(const std::string& path);

// Inverse of LoadCorpus for normalized corpora.
std::string SerializeCorpus(const Corpus& corpus);

// Canonical form of an article id ("L. 211-3" -> "L211-3", bare "211-1"
// stays "211-1") or of a hierarchy path ("Chapter III of Title III of
// Book I" -> "book:1/title:3/chapter:3"). Idempotent. Throws
// NormalizationError for anything else.
NodeId NormalizeId(std::string_view raw);

// Nearest ancestor-or-self of kind kBook, or nullopt for nodes above or
// outside any book. Throws LookupError for an unknown id.
std::optional<NodeId> BookOf(const Corpus& corpus, std::string_view id);

struct KindCounts {
  std::array<size_t, kNumNodeKinds> counts{};

  size_t operator[](NodeKind kind) const {
    return counts[static_cast<int>(kind)];
  }
  size_t total() const;
};

KindCounts Census(const Corpus& corpus);

}  // namespace codexgraph

#endif  // CODEXGRAPH_CORPUS_H_

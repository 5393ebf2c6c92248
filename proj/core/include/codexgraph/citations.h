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

// Explicit cross-references between articles of a code.

#ifndef CODEXGRAPH_CITATIONS_H_
#define CODEXGRAPH_CITATIONS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "codexgraph/corpus.h"

namespace codexgraph {

// One atomic reference found in an article body. Enumerations such as
// "articles L. 211-2, L. 211-3 et L. 211-4" yield one expression per item.
struct ReferenceExpression {
  enum class Kind { kArticle, kRange, kHierarchy };

  Kind kind = Kind::kArticle;
  std::string raw_span;  // matched text
  size_t offset = 0;     // byte offset of raw_span in the article text
  std::string first;     // article id, range start or hierarchy chain
  std::string last;      // range end; empty otherwise

  bool operator==(const ReferenceExpression&) const = default;
};

struct CitationRef {
  NodeId source;
  NodeId target;
  std::string raw_span;
  size_t offset = 0;

  bool operator==(const CitationRef&) const = default;
};

// A reference that produced no edge.
struct DroppedRef {
  NodeId source;
  std::string raw_span;
  size_t offset = 0;

  bool operator==(const DroppedRef&) const = default;
};

struct ExtractionReport {
  std::vector<CitationRef> resolved;
  std::vector<DroppedRef> external_dropped;
  std::vector<DroppedRef> unparsed;
  std::vector<DroppedRef> self_refs;

  size_t self_count() const { return self_refs.size(); }
  // Number of atomic outcomes; a range contributes one per target.
  size_t outcome_count() const {
    return resolved.size() + external_dropped.size() + unparsed.size() +
           self_refs.size();
  }

  bool operator==(const ExtractionReport&) const = default;
};

// All reference expressions of `text`, ordered by offset.
std::vector<ReferenceExpression> ExtractReferences(std::string_view text);

// Resolves the expressions found in the text of `source` against `corpus`.
// Bare article numbers take the letter of the source id. Throws LookupError
// for an unknown source.
ExtractionReport Resolve(const Corpus& corpus, std::string_view source,
                         const std::vector<ReferenceExpression>& expressions);

// Extract-and-resolve over every article, in document order. `threads` as
// in ResolveThreadCount; the result does not depend on it.
ExtractionReport ExtractAll(const Corpus& corpus, int threads = 1);

// `source,target,raw_span,offset,status` rows, status one of resolved,
// external, unparsed, self. Rows follow document order, then offset.
std::string CitationsCsv(const Corpus& corpus, const ExtractionReport& report);

}  // namespace codexgraph

#endif  // CODEXGRAPH_CITATIONS_H_

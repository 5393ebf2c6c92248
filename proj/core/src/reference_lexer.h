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

// Lexical building blocks of the reference grammar. Internal to the library.

#ifndef CODEXGRAPH_SRC_REFERENCE_LEXER_H_
#define CODEXGRAPH_SRC_REFERENCE_LEXER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codexgraph/corpus.h"

namespace codexgraph::internal {

// Byte length of the whitespace character starting at pos (ASCII space
// class, U+00A0 or U+202F), or 0.
size_t SpaceLength(std::string_view text, size_t pos);

// Position after any run of whitespace starting at pos.
size_t SkipSpaces(std::string_view text, size_t pos);

// True when a word may start at pos (the previous character is not a letter,
// digit or underscore; non-ASCII letters count as word characters).
bool IsWordStart(std::string_view text, size_t pos);

// True when a word may end at pos.
bool IsWordEnd(std::string_view text, size_t pos);

// Case-insensitive ASCII comparison of text[pos..] against `word`.
bool MatchesWordAt(std::string_view text, size_t pos, std::string_view word);

// `[LRDlrd]\.?\s?` followed by `\d+(-\d+)+`, or the bare number part.
struct ArticleIdMatch {
  size_t begin = 0;
  size_t end = 0;
  char letter = 0;  // uppercase; 0 for a bare number
  std::string number;
};
std::optional<ArticleIdMatch> MatchArticleId(std::string_view text,
                                             size_t pos);

// "article" or "articles" (any case) followed by whitespace. Returns the
// position of the first non-space character after the keyword.
std::optional<size_t> MatchArticleKeyword(std::string_view text, size_t pos);

// One enumeration separator: ", ", ", et ", " and ", " à ", " to ", ...
// Returns candidate end positions, most greedy first; `second` is true for
// range separators.
std::vector<std::pair<size_t, bool>> MatchSeparators(std::string_view text,
                                                     size_t pos);

// A chain such as "chapitre III du titre III du livre Ier" or "Title I of
// Book V". Levels are listed in text order, numerals unparsed.
struct ChainMatch {
  size_t begin = 0;
  size_t end = 0;
  std::vector<std::pair<NodeKind, std::string>> levels;
};
std::optional<ChainMatch> MatchChain(std::string_view text, size_t pos);

// Roman numeral I..XXXIX (optionally "Ier") or a positive Arabic number.
// Throws NormalizationError.
int ParseNumeral(std::string_view numeral);

// Canonical "book:1/title:3/chapter:3" path of a chain written finest
// level first. Throws NormalizationError unless the chain ends at a book and
// every level is strictly coarser than the previous one.
std::string ChainToPath(const ChainMatch& chain);

// Numeric key of an article number ("511-1" -> {511, 1}).
std::vector<long long> ArticleKey(std::string_view number);

}  // namespace codexgraph::internal

#endif  // CODEXGRAPH_SRC_REFERENCE_LEXER_H_

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

#include "reference_lexer.h"

#include <array>
#include <charconv>
#include <cctype>

#include "codexgraph/error.h"

namespace codexgraph::internal {
namespace {

bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }

// Word characters in the sense of a Unicode regex `\w`, approximated for
// the scripts legal texts use: ASCII alphanumerics, underscore, and
// non-ASCII code points outside the Latin-1 symbol block, the general
// punctuation block and the space characters.
bool IsWordCodePoint(char32_t cp) {
  if (cp < 0x80) {
    return std::isalnum(static_cast<int>(cp)) || cp == U'_';
  }
  if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  return true;
}

size_t SequenceLength(unsigned char lead) {
  if (lead < 0xC0) return 1;
  if (lead < 0xE0) return 2;
  if (lead < 0xF0) return 3;
  return 4;
}

char32_t DecodeAt(std::string_view text, size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  const size_t len = SequenceLength(lead);
  if (len == 1 || pos + len > text.size()) return lead;
  char32_t cp = lead & (0x7F >> len);
  for (size_t i = 1; i < len; ++i) {
    cp = (cp << 6) | (static_cast<unsigned char>(text[pos + i]) & 0x3F);
  }
  return cp;
}

// Decodes the code point that ends just before pos.
char32_t DecodeBefore(std::string_view text, size_t pos) {
  size_t start = pos - 1;
  while (start > 0 && pos - start < 4 &&
         (static_cast<unsigned char>(text[start]) & 0xC0) == 0x80) {
    --start;
  }
  return DecodeAt(text, start);
}

// Keyword spellings, longest alternatives first where one is a prefix of
// another.
struct LevelKeyword {
  std::string_view word;
  NodeKind kind;
};
constexpr std::array<LevelKeyword, 11> kLevelKeywords = {{
    {"sous-section", NodeKind::kSubsection},
    {"subsection", NodeKind::kSubsection},
    {"section", NodeKind::kSection},
    {"paragraphe", NodeKind::kParagraph},
    {"paragraph", NodeKind::kParagraph},
    {"chapitre", NodeKind::kChapter},
    {"chapter", NodeKind::kChapter},
    {"titre", NodeKind::kTitle},
    {"title", NodeKind::kTitle},
    {"livre", NodeKind::kBook},
    {"book", NodeKind::kBook},
}};

// Joins between chain levels are matched case-sensitively.
constexpr std::array<std::string_view, 5> kJoins = {"du", "de la", "de l'",
                                                    "of the", "of"};

constexpr std::array<std::string_view, 39> kRoman = {
    "I",      "II",     "III",   "IV",    "V",     "VI",     "VII",
    "VIII",   "IX",     "X",     "XI",    "XII",   "XIII",   "XIV",
    "XV",     "XVI",    "XVII",  "XVIII", "XIX",   "XX",     "XXI",
    "XXII",   "XXIII",  "XXIV",  "XXV",   "XXVI",  "XXVII",  "XXVIII",
    "XXIX",   "XXX",    "XXXI",  "XXXII", "XXXIII", "XXXIV", "XXXV",
    "XXXVI",  "XXXVII", "XXXVIII", "XXXIX"};

bool IsRomanLetter(char c) {
  return c == 'I' || c == 'V' || c == 'X' || c == 'L';
}

size_t DigitRun(std::string_view text, size_t pos) {
  size_t end = pos;
  while (end < text.size() && IsAsciiDigit(text[end])) ++end;
  return end;
}

// `\d+(-\d+)+` starting at pos; returns the end or npos.
size_t MatchNumber(std::string_view text, size_t pos) {
  size_t end = DigitRun(text, pos);
  if (end == pos) return std::string_view::npos;
  int groups = 0;
  while (end < text.size() && text[end] == '-') {
    const size_t next = DigitRun(text, end + 1);
    if (next == end + 1) break;
    end = next;
    ++groups;
  }
  return groups > 0 ? end : std::string_view::npos;
}

// `\s+` at pos; returns the end or npos when there is no whitespace.
size_t MatchSpaces(std::string_view text, size_t pos) {
  const size_t end = SkipSpaces(text, pos);
  return end == pos ? std::string_view::npos : end;
}

// One level: keyword, whitespace, numeral, word boundary.
std::optional<std::pair<NodeKind, std::pair<size_t, size_t>>> MatchLevel(
    std::string_view text, size_t pos) {
  for (const auto& kw : kLevelKeywords) {
    if (!MatchesWordAt(text, pos, kw.word)) continue;
    const size_t num = MatchSpaces(text, pos + kw.word.size());
    if (num == std::string_view::npos) return std::nullopt;
    size_t end = num;
    if (end < text.size() && IsAsciiDigit(text[end])) {
      end = DigitRun(text, end);
    } else {
      while (end < text.size() && IsRomanLetter(text[end])) ++end;
      if (end == num) return std::nullopt;
      if (text.substr(end, 2) == "er" && IsWordEnd(text, end + 2)) end += 2;
    }
    if (!IsWordEnd(text, end)) return std::nullopt;
    return std::make_pair(kw.kind, std::make_pair(num, end));
  }
  return std::nullopt;
}

}  // namespace

size_t SpaceLength(std::string_view text, size_t pos) {
  if (pos >= text.size()) return 0;
  const unsigned char c = text[pos];
  if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
      c == '\v') {
    return 1;
  }
  if (text.substr(pos, 2) == "\xC2\xA0") return 2;
  if (text.substr(pos, 3) == "\xE2\x80\xAF") return 3;
  return 0;
}

size_t SkipSpaces(std::string_view text, size_t pos) {
  while (size_t len = SpaceLength(text, pos)) pos += len;
  return pos;
}

bool IsWordStart(std::string_view text, size_t pos) {
  if (pos == 0) return true;
  return !IsWordCodePoint(DecodeBefore(text, pos));
}

bool IsWordEnd(std::string_view text, size_t pos) {
  if (pos >= text.size()) return true;
  return !IsWordCodePoint(DecodeAt(text, pos));
}

bool MatchesWordAt(std::string_view text, size_t pos, std::string_view word) {
  if (pos + word.size() > text.size()) return false;
  for (size_t i = 0; i < word.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != word[i]) {
      return false;
    }
  }
  return true;
}

std::optional<ArticleIdMatch> MatchArticleId(std::string_view text,
                                             size_t pos) {
  if (pos >= text.size()) return std::nullopt;
  const char c = static_cast<char>(
      std::toupper(static_cast<unsigned char>(text[pos])));
  if (c == 'L' || c == 'R' || c == 'D') {
    size_t p = pos + 1;
    if (p < text.size() && text[p] == '.') ++p;
    p += SpaceLength(text, p);
    const size_t end = MatchNumber(text, p);
    if (end != std::string_view::npos) {
      return ArticleIdMatch{pos, end, c, std::string(text.substr(p, end - p))};
    }
  }
  const size_t end = MatchNumber(text, pos);
  if (end == std::string_view::npos) return std::nullopt;
  return ArticleIdMatch{pos, end, 0, std::string(text.substr(pos, end - pos))};
}

std::optional<size_t> MatchArticleKeyword(std::string_view text, size_t pos) {
  if (!MatchesWordAt(text, pos, "article")) return std::nullopt;
  size_t p = pos + 7;
  if (p < text.size() && (text[p] == 's' || text[p] == 'S')) {
    const size_t after = MatchSpaces(text, p + 1);
    if (after != std::string_view::npos) return after;
  }
  const size_t after = MatchSpaces(text, p);
  if (after == std::string_view::npos) return std::nullopt;
  return after;
}

std::vector<std::pair<size_t, bool>> MatchSeparators(std::string_view text,
                                                     size_t pos) {
  std::vector<std::pair<size_t, bool>> out;
  // \s*,\s*(?:et\s+|and\s+)?
  const size_t comma = SkipSpaces(text, pos);
  if (comma < text.size() && text[comma] == ',') {
    const size_t after = SkipSpaces(text, comma + 1);
    for (std::string_view conj : {"et", "and"}) {
      if (text.substr(after, conj.size()) == conj) {
        const size_t end = MatchSpaces(text, after + conj.size());
        if (end != std::string_view::npos) out.emplace_back(end, false);
      }
    }
    out.emplace_back(after, false);
  }
  // \s+(?:et|and)\s+ and \s+(?:à|to)\s+
  const size_t word = MatchSpaces(text, pos);
  if (word != std::string_view::npos) {
    for (auto [conj, range] : {std::pair<std::string_view, bool>{"et", false},
                               {"and", false},
                               {"\xC3\xA0", true},
                               {"to", true}}) {
      if (text.substr(word, conj.size()) == conj) {
        const size_t end = MatchSpaces(text, word + conj.size());
        if (end != std::string_view::npos) out.emplace_back(end, range);
      }
    }
  }
  return out;
}

std::optional<ChainMatch> MatchChain(std::string_view text, size_t pos) {
  auto first = MatchLevel(text, pos);
  if (!first) return std::nullopt;
  ChainMatch chain;
  chain.begin = pos;
  auto push = [&](const auto& level) {
    const auto [kind, span] = level;
    chain.levels.emplace_back(
        kind, std::string(text.substr(span.first, span.second - span.first)));
    chain.end = span.second;
  };
  push(*first);
  for (;;) {
    const size_t join_at = MatchSpaces(text, chain.end);
    if (join_at == std::string_view::npos) break;
    bool extended = false;
    for (std::string_view join : kJoins) {
      if (text.substr(join_at, join.size()) != join) continue;
      const size_t level_at = MatchSpaces(text, join_at + join.size());
      if (level_at == std::string_view::npos) continue;
      if (auto next = MatchLevel(text, level_at)) {
        push(*next);
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }
  return chain;
}

int ParseNumeral(std::string_view numeral) {
  if (!numeral.empty() && IsAsciiDigit(numeral.front())) {
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(numeral.data(), numeral.data() + numeral.size(), value);
    if (ec != std::errc() || ptr != numeral.data() + numeral.size() ||
        value <= 0) {
      throw NormalizationError("invalid number '" + std::string(numeral) +
                               "'");
    }
    return value;
  }
  std::string_view roman = numeral;
  if (roman == "Ier") return 1;
  for (size_t i = 0; i < kRoman.size(); ++i) {
    if (kRoman[i] == roman) return static_cast<int>(i) + 1;
  }
  throw NormalizationError("unsupported numeral '" + std::string(numeral) +
                           "' (Roman numerals are limited to I..XXXIX)");
}

std::string ChainToPath(const ChainMatch& chain) {
  if (chain.levels.empty() ||
      chain.levels.back().first != NodeKind::kBook) {
    throw NormalizationError("hierarchy reference is not anchored at a book");
  }
  std::string path;
  NodeKind previous = NodeKind::kCode;
  for (auto it = chain.levels.rbegin(); it != chain.levels.rend(); ++it) {
    if (it->first <= previous) {
      throw NormalizationError(
          "hierarchy levels must go from finer to coarser");
    }
    previous = it->first;
    if (!path.empty()) path += '/';
    path += KindName(it->first);
    path += ':';
    path += std::to_string(ParseNumeral(it->second));
  }
  return path;
}

std::vector<long long> ArticleKey(std::string_view number) {
  std::vector<long long> key;
  size_t pos = 0;
  while (pos <= number.size()) {
    const size_t dash = number.find('-', pos);
    const std::string_view part = number.substr(
        pos, dash == std::string_view::npos ? std::string_view::npos
                                            : dash - pos);
    long long value = 0;
    std::from_chars(part.data(), part.data() + part.size(), value);
    key.push_back(value);
    if (dash == std::string_view::npos) break;
    pos = dash + 1;
  }
  return key;
}

}  // namespace codexgraph::internal

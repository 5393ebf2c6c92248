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

#include "codexgraph/citations.h"

#include <algorithm>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "codexgraph/error.h"
#include "codexgraph/parallel.h"
#include "reference_lexer.h"

namespace codexgraph {
namespace {

using internal::ArticleIdMatch;

std::string Slice(std::string_view text, size_t begin, size_t end) {
  return std::string(text.substr(begin, end - begin));
}

// Matches `article(s) ID (SEP ID)*` at pos and appends its atomic items.
// Returns the end of the match, or nullopt.
std::optional<size_t> MatchEnumeration(std::string_view text, size_t pos,
                                       std::vector<ReferenceExpression>& out) {
  const auto after_keyword = internal::MatchArticleKeyword(text, pos);
  if (!after_keyword) return std::nullopt;
  auto id = internal::MatchArticleId(text, *after_keyword);
  if (!id) return std::nullopt;

  std::vector<std::pair<ArticleIdMatch, bool>> items = {{*id, false}};
  size_t end = id->end;
  for (;;) {
    bool extended = false;
    for (auto [sep_end, is_range] : internal::MatchSeparators(text, end)) {
      if (auto next = internal::MatchArticleId(text, sep_end)) {
        items.emplace_back(*next, is_range);
        end = next->end;
        extended = true;
        break;
      }
    }
    if (!extended) break;
  }

  for (size_t i = 0; i < items.size(); ++i) {
    const ArticleIdMatch& a = items[i].first;
    ReferenceExpression expr;
    // The keyword belongs to the first item's span.
    const size_t begin = i == 0 ? pos : a.begin;
    expr.offset = begin;
    expr.first = Slice(text, a.begin, a.end);
    if (i + 1 < items.size() && items[i + 1].second) {
      const ArticleIdMatch& b = items[i + 1].first;
      expr.kind = ReferenceExpression::Kind::kRange;
      expr.last = Slice(text, b.begin, b.end);
      expr.raw_span = Slice(text, begin, b.end);
      ++i;
    } else {
      expr.kind = ReferenceExpression::Kind::kArticle;
      expr.raw_span = Slice(text, begin, a.end);
    }
    out.push_back(std::move(expr));
  }
  return end;
}

std::vector<ReferenceExpression> FindEnumerations(std::string_view text) {
  std::vector<ReferenceExpression> out;
  for (size_t pos = 0; pos < text.size();) {
    if (internal::IsWordStart(text, pos)) {
      if (auto end = MatchEnumeration(text, pos, out)) {
        pos = *end;
        continue;
      }
    }
    ++pos;
  }
  return out;
}

std::vector<ReferenceExpression> FindChains(std::string_view text) {
  std::vector<ReferenceExpression> out;
  for (size_t pos = 0; pos < text.size();) {
    if (internal::IsWordStart(text, pos)) {
      if (auto chain = internal::MatchChain(text, pos)) {
        ReferenceExpression expr;
        expr.kind = ReferenceExpression::Kind::kHierarchy;
        expr.offset = chain->begin;
        expr.raw_span = Slice(text, chain->begin, chain->end);
        expr.first = expr.raw_span;
        out.push_back(std::move(expr));
        pos = chain->end;
        continue;
      }
    }
    ++pos;
  }
  return out;
}

// Canonical article id; a bare number takes the source's letter.
NodeId QualifyArticle(std::string_view raw, std::string_view source) {
  NodeId id = NormalizeId(raw);
  if (!id.empty() && id.front() >= '0' && id.front() <= '9' &&
      !source.empty() && source.front() >= 'A' && source.front() <= 'Z') {
    id.insert(id.begin(), source.front());
  }
  return id;
}

char LetterOf(std::string_view id) {
  return !id.empty() && (id.front() < '0' || id.front() > '9') ? id.front()
                                                               : 0;
}

std::string_view NumberOf(std::string_view id) {
  return LetterOf(id) ? id.substr(1) : id;
}

void ResolveInto(const Corpus& corpus, size_t source_index,
                 const std::vector<ReferenceExpression>& expressions,
                 ExtractionReport& report) {
  const NodeId& source = corpus.node(source_index).id;
  auto emit = [&](size_t target, const ReferenceExpression& expr) {
    if (target == source_index) {
      report.self_refs.push_back({source, expr.raw_span, expr.offset});
    } else {
      report.resolved.push_back(
          {source, corpus.node(target).id, expr.raw_span, expr.offset});
    }
  };
  auto drop = [&](std::vector<DroppedRef>& list,
                  const ReferenceExpression& expr) {
    list.push_back({source, expr.raw_span, expr.offset});
  };

  for (const ReferenceExpression& expr : expressions) {
    try {
      switch (expr.kind) {
        case ReferenceExpression::Kind::kArticle:
        case ReferenceExpression::Kind::kHierarchy: {
          const NodeId id = expr.kind == ReferenceExpression::Kind::kArticle
                                ? QualifyArticle(expr.first, source)
                                : NormalizeId(expr.first);
          if (auto target = corpus.Find(id)) {
            emit(*target, expr);
          } else {
            drop(report.external_dropped, expr);
          }
          break;
        }
        case ReferenceExpression::Kind::kRange: {
          const NodeId lo = QualifyArticle(expr.first, source);
          const NodeId hi = QualifyArticle(expr.last, source);
          const char letter = LetterOf(lo);
          if (letter != LetterOf(hi)) {
            drop(report.unparsed, expr);
            break;
          }
          const auto lo_key = internal::ArticleKey(NumberOf(lo));
          const auto hi_key = internal::ArticleKey(NumberOf(hi));
          std::vector<std::pair<std::vector<long long>, size_t>> hits;
          for (size_t i = 0; i < corpus.size(); ++i) {
            const CorpusNode& node = corpus.node(i);
            if (node.kind != NodeKind::kArticle || LetterOf(node.id) != letter) {
              continue;
            }
            auto key = internal::ArticleKey(NumberOf(node.id));
            if (lo_key <= key && key <= hi_key) hits.emplace_back(key, i);
          }
          std::sort(hits.begin(), hits.end());
          if (hits.empty()) drop(report.external_dropped, expr);
          for (const auto& hit : hits) emit(hit.second, expr);
          break;
        }
      }
    } catch (const NormalizationError&) {
      drop(report.unparsed, expr);
    }
  }
}

void Append(std::vector<CitationRef>& to, std::vector<CitationRef>& from) {
  std::move(from.begin(), from.end(), std::back_inserter(to));
}

void Append(std::vector<DroppedRef>& to, std::vector<DroppedRef>& from) {
  std::move(from.begin(), from.end(), std::back_inserter(to));
}

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::vector<ReferenceExpression> ExtractReferences(std::string_view text) {
  std::vector<ReferenceExpression> out = FindEnumerations(text);
  std::vector<ReferenceExpression> chains = FindChains(text);
  out.insert(out.end(), std::make_move_iterator(chains.begin()),
             std::make_move_iterator(chains.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const ReferenceExpression& a,
                      const ReferenceExpression& b) {
                     return a.offset < b.offset;
                   });
  return out;
}

ExtractionReport Resolve(const Corpus& corpus, std::string_view source,
                         const std::vector<ReferenceExpression>& expressions) {
  ExtractionReport report;
  ResolveInto(corpus, corpus.IndexOf(source), expressions, report);
  return report;
}

ExtractionReport ExtractAll(const Corpus& corpus, int threads) {
  std::vector<size_t> articles;
  for (size_t i = 0; i < corpus.size(); ++i) {
    if (corpus.node(i).kind == NodeKind::kArticle) articles.push_back(i);
  }
  std::vector<ExtractionReport> partial(articles.size());
  ParallelForBlocks(articles.size(), ResolveThreadCount(threads),
                    [&](size_t i) {
                      const size_t index = articles[i];
                      ResolveInto(corpus, index,
                                  ExtractReferences(corpus.node(index).text),
                                  partial[i]);
                    });
  ExtractionReport report;
  for (ExtractionReport& p : partial) {
    Append(report.resolved, p.resolved);
    Append(report.external_dropped, p.external_dropped);
    Append(report.unparsed, p.unparsed);
    Append(report.self_refs, p.self_refs);
  }
  return report;
}

std::string CitationsCsv(const Corpus& corpus,
                         const ExtractionReport& report) {
  struct Row {
    size_t source;
    size_t offset;
    std::string line;
  };
  std::vector<Row> rows;
  auto add = [&](const NodeId& source, const std::string& target,
                 const std::string& raw, size_t offset,
                 std::string_view status) {
    std::ostringstream line;
    line << CsvField(source) << ',' << CsvField(target) << ','
         << CsvField(raw) << ',' << offset << ',' << status << '\n';
    rows.push_back({corpus.IndexOf(source), offset, line.str()});
  };
  for (const auto& r : report.resolved) {
    add(r.source, r.target, r.raw_span, r.offset, "resolved");
  }
  for (const auto& r : report.self_refs) {
    add(r.source, r.source, r.raw_span, r.offset, "self");
  }
  for (const auto& r : report.external_dropped) {
    add(r.source, "", r.raw_span, r.offset, "external");
  }
  for (const auto& r : report.unparsed) {
    add(r.source, "", r.raw_span, r.offset, "unparsed");
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.source, a.offset) < std::tie(b.source, b.offset);
  });
  std::string out = "source,target,raw_span,offset,status\n";
  for (const Row& row : rows) out += row.line;
  return out;
}

}  // namespace codexgraph

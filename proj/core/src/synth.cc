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

#include "codexgraph/synth.h"

#include <algorithm>
#include <cstdio>
#include <set>
#include <vector>

#include "codexgraph/corpus.h"
#include "codexgraph/error.h"
#include "codexgraph/random.h"

namespace codexgraph {
namespace {

std::string ArticleNumber(size_t book, size_t chapter, size_t seq) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%zu%02zu-%zu", book, chapter, seq);
  return buf;
}

// "Article L. 101-2 applies." / "Les articles L. 101-2 et L. 101-3 ..."
std::string Sentence(const std::vector<std::string>& numbers, bool french) {
  auto cite = [](const std::string& n) { return "L. " + n; };
  std::string list = cite(numbers[0]);
  for (size_t i = 1; i < numbers.size(); ++i) {
    const bool last = i + 1 == numbers.size();
    list += last ? (french ? " et " : " and ") : ", ";
    list += cite(numbers[i]);
  }
  if (numbers.size() == 1) {
    return french ? "Les dispositions de l'article " + list +
                        " sont applicables."
                  : "The provisions of Article " + list + " apply.";
  }
  return french ? "Les articles " + list + " sont applicables."
                : "Articles " + list + " apply.";
}

}  // namespace

SynthCorpus SynthesizeCorpus(const SynthParams& params) {
  if (params.books < 1 || params.chapters_per_book < 1 ||
      params.articles_per_chapter < 1) {
    throw DomainError("synthetic corpus counts must be at least 1");
  }
  if (params.chapters_per_book > 99) {
    throw DomainError("at most 99 chapters per book");
  }
  if (!(params.p_in >= 0 && params.p_in <= 1 && params.p_out >= 0 &&
        params.p_out <= 1)) {
    throw DomainError("citation probabilities must lie in [0, 1]");
  }
  const size_t chapters = params.books * params.chapters_per_book;
  const size_t total = chapters * params.articles_per_chapter;
  if (params.hub_count > chapters) {
    throw DomainError("at most one hub per chapter");
  }
  if (params.hub_count > 0 && params.hub_degree + 1 > total) {
    throw DomainError("hub degree exceeds the number of other articles");
  }

  std::vector<std::string> numbers(total);
  std::vector<size_t> block(total);
  for (size_t b = 0; b < params.books; ++b) {
    for (size_t c = 0; c < params.chapters_per_book; ++c) {
      for (size_t s = 0; s < params.articles_per_chapter; ++s) {
        const size_t i =
            (b * params.chapters_per_book + c) * params.articles_per_chapter + s;
        numbers[i] = ArticleNumber(b + 1, c + 1, s + 1);
        block[i] = b * params.chapters_per_book + c;
      }
    }
  }

  // cites[i] lists the articles whose ids appear in the text of i.
  std::vector<std::set<size_t>> cites(total);
  Rng rng(params.seed);
  for (size_t i = 0; i < total; ++i) {
    for (size_t j = i + 1; j < total; ++j) {
      if (rng.Bernoulli(block[i] == block[j] ? params.p_in : params.p_out)) {
        cites[i].insert(j);
      }
    }
  }
  Rng hub_rng(DeriveSeed(params.seed, "hubs"));
  for (size_t h = 0; h < params.hub_count; ++h) {
    const size_t hub = h * params.articles_per_chapter;
    std::vector<size_t> others;
    for (size_t j = 0; j < total; ++j) {
      if (j != hub) others.push_back(j);
    }
    // Partial Fisher-Yates draw of hub_degree distinct targets.
    for (size_t d = 0; d < params.hub_degree; ++d) {
      const size_t pick = d + hub_rng.UniformBelow(others.size() - d);
      std::swap(others[d], others[pick]);
      cites[hub].insert(others[d]);
    }
  }

  Corpus::Builder builder("synthetic", "Synthetic code");
  std::string truth = "article,block\n";
  size_t next = 0;
  for (size_t b = 0; b < params.books; ++b) {
    const std::string book_id = "book:" + std::to_string(b + 1);
    const size_t book = builder.Add(0, book_id, NodeKind::kBook,
                                    "Book " + std::to_string(b + 1));
    for (size_t c = 0; c < params.chapters_per_book; ++c) {
      const std::string chapter_id =
          book_id + "/chapter:" + std::to_string(c + 1);
      const size_t chapter =
          builder.Add(book, chapter_id, NodeKind::kChapter,
                      "Chapter " + std::to_string(c + 1));
      for (size_t s = 0; s < params.articles_per_chapter; ++s, ++next) {
        std::vector<std::string> targets;
        for (size_t j : cites[next]) targets.push_back(numbers[j]);
        std::string text;
        // Short sentences of at most three references each.
        for (size_t k = 0; k < targets.size(); k += 3) {
          std::vector<std::string> chunk(
              targets.begin() + k,
              targets.begin() + std::min(k + 3, targets.size()));
          if (!text.empty()) text += ' ';
          text += Sentence(chunk, (next + k / 3) % 2 == 0);
        }
        const std::string id = "L" + numbers[next];
        builder.Add(chapter, id, NodeKind::kArticle, "Article " + id, text);
        truth += id + "," + chapter_id + "\n";
      }
    }
  }
  return {SerializeCorpus(std::move(builder).Build()), truth};
}

}  // namespace codexgraph

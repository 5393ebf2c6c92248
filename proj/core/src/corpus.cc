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

#include "codexgraph/corpus.h"

#include <fstream>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "codexgraph/error.h"
#include "reference_lexer.h"

namespace codexgraph {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kSchemaName = "codexgraph-corpus-v1";

constexpr std::array<std::string_view, kNumNodeKinds> kKindNames = {
    "code",    "book",       "title",     "chapter",
    "section", "subsection", "paragraph", "article"};

std::string_view Trim(std::string_view s) {
  size_t begin = internal::SkipSpaces(s, 0);
  size_t end = s.size();
  while (end > begin) {
    const unsigned char c = s[end - 1];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      --end;
    } else if (end - begin >= 2 && s.substr(end - 2, 2) == "\xC2\xA0") {
      end -= 2;
    } else if (end - begin >= 3 && s.substr(end - 3, 3) == "\xE2\x80\xAF") {
      end -= 3;
    } else {
      break;
    }
  }
  return s.substr(begin, end - begin);
}

// Parses an already canonical "book:1/title:3" path; nullopt if `s` does
// not look like one at all.
std::optional<std::string> NormalizePath(std::string_view s) {
  if (s.find(':') == std::string_view::npos) return std::nullopt;
  std::string out;
  NodeKind previous = NodeKind::kCode;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t slash = s.find('/', pos);
    if (slash == std::string_view::npos) slash = s.size();
    const std::string_view segment = s.substr(pos, slash - pos);
    const size_t colon = segment.find(':');
    if (colon == std::string_view::npos) {
      throw NormalizationError("malformed path segment '" +
                               std::string(segment) + "'");
    }
    const auto kind = ParseKind(segment.substr(0, colon));
    if (!kind || *kind == NodeKind::kCode || *kind == NodeKind::kArticle) {
      throw NormalizationError("unknown level in path '" + std::string(s) +
                               "'");
    }
    if (out.empty() && *kind != NodeKind::kBook) {
      throw NormalizationError("path '" + std::string(s) +
                               "' does not start at a book");
    }
    if (*kind <= previous) {
      throw NormalizationError("path '" + std::string(s) +
                               "' does not descend strictly");
    }
    previous = *kind;
    if (!out.empty()) out += '/';
    out += KindName(*kind);
    out += ':';
    out += std::to_string(internal::ParseNumeral(segment.substr(colon + 1)));
    pos = slash + 1;
  }
  return out;
}

NodeKind LastPathKind(std::string_view path) {
  const size_t slash = path.rfind('/');
  const size_t begin = slash == std::string_view::npos ? 0 : slash + 1;
  return *ParseKind(path.substr(begin, path.find(':', begin) - begin));
}

std::string JsonPath(const std::string& parent, size_t child) {
  return parent + ".children[" + std::to_string(child) + "]";
}

const json& Member(const json& node, const char* key, const std::string& path,
                   json::value_t type) {
  const auto it = node.find(key);
  if (it == node.end()) {
    throw SchemaError(path + "." + key + ": missing required field");
  }
  if (it->type() != type) {
    throw SchemaError(path + "." + key + ": expected " +
                      (type == json::value_t::string ? "a string"
                                                     : "an array"));
  }
  return *it;
}

void LoadNode(const json& node, const std::string& path, size_t parent,
              Corpus::Builder& builder) {
  if (!node.is_object()) throw SchemaError(path + ": expected an object");
  const std::string& id =
      Member(node, "id", path, json::value_t::string).get_ref<const std::string&>();
  const std::string& kind_name = Member(node, "kind", path,
                                        json::value_t::string)
                                     .get_ref<const std::string&>();
  const std::string& heading = Member(node, "heading", path,
                                      json::value_t::string)
                                   .get_ref<const std::string&>();
  const auto kind = ParseKind(kind_name);
  if (!kind) {
    throw SchemaError(path + ".kind: unknown kind '" + kind_name + "'");
  }
  if (*kind == NodeKind::kCode) {
    throw HierarchyError(path + ": only the root may have kind 'code'");
  }
  std::string text;
  if (const auto it = node.find("text"); it != node.end()) {
    if (!it->is_string()) throw SchemaError(path + ".text: expected a string");
    if (*kind != NodeKind::kArticle) {
      throw SchemaError(path + ".text: only articles carry text");
    }
    text = it->get<std::string>();
  }
  const size_t index = builder.Add(parent, id, *kind, heading, std::move(text),
                                   path);
  if (const auto it = node.find("children"); it != node.end()) {
    if (!it->is_array()) {
      throw SchemaError(path + ".children: expected an array");
    }
    for (size_t i = 0; i < it->size(); ++i) {
      LoadNode((*it)[i], JsonPath(path, i), index, builder);
    }
  }
}

ordered_json SerializeNode(const Corpus& corpus, size_t index) {
  const CorpusNode& node = corpus.node(index);
  ordered_json out;
  out["id"] = node.id;
  out["kind"] = KindName(node.kind);
  out["heading"] = node.heading;
  if (node.kind == NodeKind::kArticle) out["text"] = node.text;
  if (!node.children.empty()) {
    ordered_json children = ordered_json::array();
    for (size_t child : node.children) {
      children.push_back(SerializeNode(corpus, child));
    }
    out["children"] = std::move(children);
  }
  return out;
}

}  // namespace

std::string_view KindName(NodeKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

std::optional<NodeKind> ParseKind(std::string_view name) {
  for (int i = 0; i < kNumNodeKinds; ++i) {
    if (kKindNames[i] == name) return static_cast<NodeKind>(i);
  }
  return std::nullopt;
}

std::optional<size_t> Corpus::Find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t Corpus::IndexOf(std::string_view id) const {
  if (auto index = Find(id)) return *index;
  throw LookupError("unknown node id '" + std::string(id) + "'");
}

Corpus::Builder::Builder(std::string root_id, std::string heading) {
  CorpusNode root;
  root.id = std::move(root_id);
  root.kind = NodeKind::kCode;
  root.heading = std::move(heading);
  corpus_.index_.emplace(root.id, 0);
  corpus_.nodes_.push_back(std::move(root));
  locations_.push_back("$.root");
}

size_t Corpus::Builder::Add(size_t parent, std::string_view raw_id,
                            NodeKind kind, std::string heading,
                            std::string text, std::string location) {
  auto& nodes = corpus_.nodes_;
  if (location.empty()) location = "node #" + std::to_string(nodes.size());
  if (parent >= nodes.size()) {
    throw HierarchyError(location + ": unknown parent index " +
                         std::to_string(parent));
  }
  // Document order: the parent must lie on the path from the root to the
  // most recently added node.
  for (std::optional<size_t> p = nodes.size() - 1; p != parent;) {
    if (!p) {
      throw HierarchyError(location +
                           ": children must be added in document order");
    }
    p = nodes[*p].parent;
  }
  const CorpusNode& parent_node = nodes[parent];
  if (kind == NodeKind::kCode) {
    throw HierarchyError(location + ": only the root may have kind 'code'");
  }
  if (kind <= parent_node.kind) {
    throw HierarchyError(location + ": a " + std::string(KindName(kind)) +
                         " cannot be nested in a " +
                         std::string(KindName(parent_node.kind)) + " ('" +
                         parent_node.id + "')");
  }
  if (kind != NodeKind::kArticle && !text.empty()) {
    throw SchemaError(location + ": only articles carry text");
  }
  NodeId id;
  try {
    id = NormalizeId(raw_id);
  } catch (const NormalizationError& e) {
    throw NormalizationError(location + ".id: " + e.what());
  }
  const bool is_path = id.find(':') != std::string::npos;
  if (kind == NodeKind::kArticle ? is_path
                                 : !is_path || LastPathKind(id) != kind) {
    throw HierarchyError(location + ": id '" + id + "' does not name a " +
                         std::string(KindName(kind)));
  }
  const auto [it, inserted] = corpus_.index_.emplace(id, nodes.size());
  if (!inserted) {
    throw DuplicateIdError("duplicate id '" + id + "' at " + location +
                           " and " + locations_[it->second]);
  }
  CorpusNode node;
  node.id = std::move(id);
  node.kind = kind;
  node.heading = std::move(heading);
  node.text = std::move(text);
  node.parent = parent;
  nodes[parent].children.push_back(nodes.size());
  nodes.push_back(std::move(node));
  locations_.push_back(std::move(location));
  return nodes.size() - 1;
}

Corpus Corpus::Builder::Build() && { return std::move(corpus_); }

Corpus LoadCorpus(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("$: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("$: expected an object");
  const auto& schema = Member(doc, "schema", "$", json::value_t::string);
  if (schema.get_ref<const std::string&>() != kSchemaName) {
    throw SchemaError("$.schema: expected '" + std::string(kSchemaName) +
                      "', got '" + schema.get<std::string>() + "'");
  }
  const auto it = doc.find("root");
  if (it == doc.end()) throw SchemaError("$.root: missing required field");
  const json& root = *it;
  const std::string path = "$.root";
  if (!root.is_object()) throw SchemaError(path + ": expected an object");
  const auto& kind = Member(root, "kind", path, json::value_t::string);
  if (kind.get_ref<const std::string&>() != "code") {
    throw HierarchyError(path + ".kind: the root must have kind 'code'");
  }
  if (root.contains("text")) {
    throw SchemaError(path + ".text: only articles carry text");
  }
  Corpus::Builder builder(
      Member(root, "id", path, json::value_t::string).get<std::string>(),
      Member(root, "heading", path, json::value_t::string).get<std::string>());
  if (const auto c = root.find("children"); c != root.end()) {
    if (!c->is_array()) {
      throw SchemaError(path + ".children: expected an array");
    }
    for (size_t i = 0; i < c->size(); ++i) {
      LoadNode((*c)[i], JsonPath(path, i), 0, builder);
    }
  }
  return std::move(builder).Build();
}

Corpus LoadCorpusFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return LoadCorpus(buffer.str());
  } catch (const SchemaError& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

std::string SerializeCorpus(const Corpus& corpus) {
  ordered_json doc;
  doc["schema"] = kSchemaName;
  doc["root"] = SerializeNode(corpus, 0);
  return doc.dump(1) + "\n";
}

NodeId NormalizeId(std::string_view raw) {
  const std::string_view s = Trim(raw);
  if (s.empty()) throw NormalizationError("empty identifier");
  if (auto article = internal::MatchArticleId(s, 0);
      article && article->end == s.size()) {
    return article->letter ? article->letter + article->number
                           : article->number;
  }
  if (auto path = NormalizePath(s)) return *path;
  if (auto chain = internal::MatchChain(s, 0); chain && chain->end == s.size()) {
    return internal::ChainToPath(*chain);
  }
  throw NormalizationError("cannot normalize '" + std::string(raw) + "'");
}

std::optional<NodeId> BookOf(const Corpus& corpus, std::string_view id) {
  for (std::optional<size_t> i = corpus.IndexOf(id); i;
       i = corpus.node(*i).parent) {
    if (corpus.node(*i).kind == NodeKind::kBook) return corpus.node(*i).id;
  }
  return std::nullopt;
}

size_t KindCounts::total() const {
  size_t sum = 0;
  for (size_t c : counts) sum += c;
  return sum;
}

KindCounts Census(const Corpus& corpus) {
  KindCounts out;
  for (const CorpusNode& node : corpus.nodes()) {
    ++out.counts[static_cast<int>(node.kind)];
  }
  return out;
}

}  // namespace codexgraph

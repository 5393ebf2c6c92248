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

#include "codexgraph/export.h"

#include <cstdio>
#include <sstream>
#include <vector>

#include "codexgraph/error.h"
#include "report_json.h"

namespace codexgraph {
namespace {

using internal::Json;

std::string XmlEscape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string DotQuote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
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

std::string G6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

constexpr std::string_view kGraphmlHeader =
    "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\" "
    "xmlns:xsi=\"http://www.w3.org/2001/XMLSchema-instance\" "
    "xsi:schemaLocation=\"http://graphml.graphdrawing.org/xmlns "
    "http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd\">\n";

struct Attr {
  std::string_view key;
  std::string value;
};

void GraphmlKey(std::ostringstream& out, std::string_view id,
                std::string_view domain, std::string_view type) {
  out << "  <key id=\"" << id << "\" for=\"" << domain << "\" attr.name=\""
      << id << "\" attr.type=\"" << type << "\"/>\n";
}

void GraphmlElement(std::ostringstream& out, std::string_view open,
                    std::string_view close, const std::vector<Attr>& attrs) {
  out << "    " << open << ">";
  for (const Attr& a : attrs) {
    out << "<data key=\"" << a.key << "\">" << XmlEscape(a.value) << "</data>";
  }
  out << close << "\n";
}

std::string DotAttrs(const std::vector<Attr>& attrs) {
  std::string out = " [";
  for (size_t i = 0; i < attrs.size(); ++i) {
    if (i) out += ", ";
    out += std::string(attrs[i].key) + "=" + attrs[i].value;
  }
  return out + "]";
}

}  // namespace

ExportFormat ParseFormat(std::string_view name) {
  if (name == "graphml") return ExportFormat::kGraphml;
  if (name == "dot") return ExportFormat::kDot;
  if (name == "json") return ExportFormat::kJson;
  if (name == "csv") return ExportFormat::kCsv;
  throw UsageError("unknown format '" + std::string(name) +
                   "' (expected graphml, dot, json or csv)");
}

std::string_view FormatName(ExportFormat format) {
  switch (format) {
    case ExportFormat::kGraphml: return "graphml";
    case ExportFormat::kDot: return "dot";
    case ExportFormat::kJson: return "json";
    case ExportFormat::kCsv: return "csv";
  }
  return "";
}

std::string_view BookColor(const Corpus& corpus,
                           const std::optional<NodeId>& book) {
  if (!book) return "white";
  size_t position = 0;
  for (size_t child : corpus.root().children) {
    const CorpusNode& node = corpus.node(child);
    if (node.kind != NodeKind::kBook) continue;
    if (node.id == *book) return kBookPalette[position % kBookPalette.size()];
    ++position;
  }
  // Books nested below other levels are ranked after the top-level ones.
  for (size_t i = 0; i < corpus.size(); ++i) {
    const CorpusNode& node = corpus.node(i);
    if (node.kind != NodeKind::kBook || node.parent == size_t{0}) continue;
    if (node.id == *book) return kBookPalette[position % kBookPalette.size()];
    ++position;
  }
  return "white";
}

std::string ExportGraph(const Graph& graph, const Corpus* corpus,
                        ExportFormat format) {
  std::vector<std::vector<Attr>> vertex_attrs(graph.n());
  for (size_t v = 0; v < graph.n(); ++v) {
    auto& attrs = vertex_attrs[v];
    attrs.push_back({"id", graph.vertex(v)});
    if (corpus) {
      attrs.push_back(
          {"kind", std::string(KindName(corpus->Get(graph.vertex(v)).kind))});
      const auto book = BookOf(*corpus, graph.vertex(v));
      attrs.push_back({"book", book ? *book : ""});
    }
    attrs.push_back({"degree", std::to_string(graph.degree(v))});
  }
  const std::vector<Edge> edges = graph.Edges();
  std::ostringstream out;
  switch (format) {
    case ExportFormat::kGraphml: {
      out << kGraphmlHeader;
      GraphmlKey(out, "id", "node", "string");
      if (corpus) {
        GraphmlKey(out, "kind", "node", "string");
        GraphmlKey(out, "book", "node", "string");
      }
      GraphmlKey(out, "degree", "node", "int");
      GraphmlKey(out, "multiplicity", "edge", "int");
      out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
      for (size_t v = 0; v < graph.n(); ++v) {
        GraphmlElement(out, "<node id=\"n" + std::to_string(v) + "\"",
                       "</node>", vertex_attrs[v]);
      }
      for (const Edge& e : edges) {
        GraphmlElement(out,
                       "<edge source=\"n" + std::to_string(e.u) +
                           "\" target=\"n" + std::to_string(e.v) + "\"",
                       "</edge>",
                       {{"multiplicity", std::to_string(e.multiplicity)}});
      }
      out << "  </graph>\n</graphml>\n";
      break;
    }
    case ExportFormat::kDot: {
      out << "graph codexgraph {\n  node [style=filled];\n";
      for (size_t v = 0; v < graph.n(); ++v) {
        std::vector<Attr> attrs;
        for (const Attr& a : vertex_attrs[v]) {
          if (a.key == "id") continue;
          attrs.push_back(
              {a.key, a.key == "degree" ? a.value : DotQuote(a.value)});
        }
        if (corpus) {
          attrs.push_back(
              {"fillcolor",
               DotQuote(BookColor(*corpus, BookOf(*corpus, graph.vertex(v))))});
        }
        out << "  " << DotQuote(graph.vertex(v)) << DotAttrs(attrs) << ";\n";
      }
      for (const Edge& e : edges) {
        out << "  " << DotQuote(graph.vertex(e.u)) << " -- "
            << DotQuote(graph.vertex(e.v))
            << DotAttrs({{"multiplicity", std::to_string(e.multiplicity)}})
            << ";\n";
      }
      out << "}\n";
      break;
    }
    case ExportFormat::kJson: {
      Json doc;
      Json vertices = Json::array();
      for (size_t v = 0; v < graph.n(); ++v) {
        Json row;
        for (const Attr& a : vertex_attrs[v]) {
          if (a.key == "degree") {
            row["degree"] = graph.degree(v);
          } else if (a.key == "book" && a.value.empty()) {
            row["book"] = nullptr;
          } else {
            row[std::string(a.key)] = a.value;
          }
        }
        vertices.push_back(std::move(row));
      }
      Json edge_rows = Json::array();
      for (const Edge& e : edges) {
        edge_rows.push_back({{"source", graph.vertex(e.u)},
                             {"target", graph.vertex(e.v)},
                             {"multiplicity", e.multiplicity}});
      }
      doc["vertices"] = std::move(vertices);
      doc["edges"] = std::move(edge_rows);
      out << doc.dump(1) << "\n";
      break;
    }
    case ExportFormat::kCsv: {
      out << "source,target,multiplicity\n";
      for (const Edge& e : edges) {
        out << CsvField(graph.vertex(e.u)) << ','
            << CsvField(graph.vertex(e.v)) << ',' << e.multiplicity << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::string ExportCommunityGraph(const Partition& partition,
                                 const Corpus& corpus, ExportFormat format) {
  struct Node {
    std::string id;
    bool central = false;
    const Community* community = nullptr;
  };
  struct Link {
    std::string a, b;
    size_t weight;
  };
  std::vector<Node> nodes;
  std::vector<Link> links;
  auto name = [](size_t c) { return "c" + std::to_string(c); };
  const std::vector<Community> profiled = BookProfile(partition, corpus);
  for (const Community& c : profiled) {
    nodes.push_back({name(c.id), false, &c});
  }
  for (const CentralAnnotation& note : partition.centrals) {
    nodes.push_back({note.vertex, true, nullptr});
  }
  for (const auto& [pair, count] : partition.inter_edges) {
    links.push_back({name(pair.first), name(pair.second), count});
  }
  for (size_t i = 0; i < partition.centrals.size(); ++i) {
    const CentralAnnotation& note = partition.centrals[i];
    for (const auto& [c, count] : note.edges) {
      links.push_back({note.vertex, name(c), count});
    }
    // Each central-central edge once, from the earlier central.
    for (const NodeId& other : note.central_neighbors) {
      for (size_t j = i + 1; j < partition.centrals.size(); ++j) {
        if (partition.centrals[j].vertex == other) {
          links.push_back({note.vertex, other, 1});
        }
      }
    }
  }
  auto color = [&](const Node& n) -> std::string {
    if (n.central || !n.community->colored) return "white";
    return std::string(BookColor(corpus, n.community->dominant_book));
  };

  std::ostringstream out;
  switch (format) {
    case ExportFormat::kDot: {
      out << "graph communities {\n  node [style=filled];\n";
      for (const Node& n : nodes) {
        std::vector<Attr> attrs;
        if (n.central) {
          attrs = {{"shape", "diamond"}, {"type", DotQuote("central")}};
        } else {
          const Community& c = *n.community;
          attrs = {{"shape", "ellipse"},
                   {"type", DotQuote("community")},
                   {"size", std::to_string(c.members.size())},
                   {"dominant_book",
                    DotQuote(c.dominant_book ? *c.dominant_book : "")},
                   {"dominant_fraction", G6(c.dominant_fraction)},
                   {"colored", c.colored ? "true" : "false"}};
        }
        attrs.push_back({"fillcolor", DotQuote(color(n))});
        out << "  " << DotQuote(n.id) << DotAttrs(attrs) << ";\n";
      }
      for (const Link& l : links) {
        out << "  " << DotQuote(l.a) << " -- " << DotQuote(l.b)
            << DotAttrs({{"weight", std::to_string(l.weight)}}) << ";\n";
      }
      out << "}\n";
      break;
    }
    case ExportFormat::kGraphml: {
      out << kGraphmlHeader;
      GraphmlKey(out, "type", "node", "string");
      GraphmlKey(out, "size", "node", "int");
      GraphmlKey(out, "dominant_book", "node", "string");
      GraphmlKey(out, "dominant_fraction", "node", "double");
      GraphmlKey(out, "colored", "node", "boolean");
      GraphmlKey(out, "color", "node", "string");
      GraphmlKey(out, "weight", "edge", "int");
      out << "  <graph id=\"communities\" edgedefault=\"undirected\">\n";
      for (const Node& n : nodes) {
        std::vector<Attr> attrs;
        if (n.central) {
          attrs = {{"type", "central"}};
        } else {
          const Community& c = *n.community;
          attrs = {{"type", "community"},
                   {"size", std::to_string(c.members.size())},
                   {"dominant_book", c.dominant_book ? *c.dominant_book : ""},
                   {"dominant_fraction", G6(c.dominant_fraction)},
                   {"colored", c.colored ? "true" : "false"}};
        }
        attrs.push_back({"color", color(n)});
        GraphmlElement(out, "<node id=\"" + XmlEscape(n.id) + "\"", "</node>",
                       attrs);
      }
      for (const Link& l : links) {
        GraphmlElement(out,
                       "<edge source=\"" + XmlEscape(l.a) + "\" target=\"" +
                           XmlEscape(l.b) + "\"",
                       "</edge>", {{"weight", std::to_string(l.weight)}});
      }
      out << "  </graph>\n</graphml>\n";
      break;
    }
    case ExportFormat::kJson: {
      Json doc;
      Json node_rows = Json::array();
      for (const Node& n : nodes) {
        Json row;
        row["id"] = n.id;
        row["type"] = n.central ? "central" : "community";
        if (!n.central) {
          const Community& c = *n.community;
          row["size"] = c.members.size();
          row["dominant_book"] =
              c.dominant_book ? Json(*c.dominant_book) : Json();
          row["dominant_fraction"] = internal::Number(c.dominant_fraction);
          row["colored"] = c.colored;
        }
        row["color"] = color(n);
        node_rows.push_back(std::move(row));
      }
      Json link_rows = Json::array();
      for (const Link& l : links) {
        link_rows.push_back(
            {{"source", l.a}, {"target", l.b}, {"weight", l.weight}});
      }
      doc["nodes"] = std::move(node_rows);
      doc["edges"] = std::move(link_rows);
      out << doc.dump(1) << "\n";
      break;
    }
    case ExportFormat::kCsv:
      throw UsageError("the community graph has no CSV form");
  }
  return out.str();
}

std::string ExportPartition(const CommunityResult& result,
                            const SpectralConfig& config,
                            const Corpus& corpus) {
  Json doc;
  doc["spectral_config"] = internal::SpectralConfigJson(config);
  doc["partition"] = internal::PartitionJson(result, corpus,
                                             result.eigenvalues.size());
  return doc.dump(1) + "\n";
}

}  // namespace codexgraph

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

#include "report_json.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace codexgraph::internal {

Json Number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  const double rounded = std::strtod(buf, nullptr);
  return rounded == 0 ? 0.0 : rounded;
}

Json Eigenvalue(double x) { return Number(std::abs(x) < 1e-10 ? 0.0 : x); }

std::string Hex64(uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(x));
  return buf;
}

Json SpectralConfigJson(const SpectralConfig& config) {
  Json out;
  out["centrals_removed"] = config.centrals_removed;
  if (config.k) {
    out["k"] = *config.k;
  } else {
    out["k"] = "auto";
  }
  out["eigengap_max_k"] = config.eigengap_max_k;
  out["kmeans_restarts"] = config.kmeans_restarts;
  out["kmeans_max_iterations"] = config.kmeans_max_iterations;
  out["seed"] = config.seed;
  out["weighted"] = config.weighted;
  out["laplacian"] = "symmetric-normalized";
  out["embedding"] = "row-normalized";
  return out;
}

Json PartitionJson(const CommunityResult& result, const Corpus& corpus,
                   size_t max_eigenvalues) {
  const Partition& p = result.partition;
  Json out;
  out["k"] = result.k;
  out["k_selection"] = result.k_auto ? "eigengap" : "explicit";
  Json eigenvalues = Json::array();
  for (size_t i = 0; i < std::min(max_eigenvalues, result.eigenvalues.size());
       ++i) {
    eigenvalues.push_back(Eigenvalue(result.eigenvalues[i]));
  }
  out["eigenvalues"] = std::move(eigenvalues);
  out["community_count"] = p.communities.size();

  const std::vector<Community> profiled = BookProfile(p, corpus);
  Json table = Json::array();
  for (const Community& c : profiled) {
    Json row;
    row["id"] = c.id;
    row["size"] = c.members.size();
    row["dominant_book"] = c.dominant_book ? Json(*c.dominant_book) : Json();
    row["dominant_fraction"] = Number(c.dominant_fraction);
    row["colored"] = c.colored;
    Json books = Json::object();
    for (const auto& [book, fraction] : c.book_fractions) {
      books[book ? *book : "none"] = Number(fraction);
    }
    row["book_fractions"] = std::move(books);
    row["members"] = c.members;
    table.push_back(std::move(row));
  }
  out["communities"] = std::move(table);

  Json centrals = Json::array();
  for (const CentralAnnotation& note : p.centrals) {
    Json row;
    row["id"] = note.vertex;
    row["communities"] = note.communities;
    Json edges = Json::array();
    for (const auto& [community, count] : note.edges) {
      edges.push_back({{"community", community}, {"count", count}});
    }
    row["edges"] = std::move(edges);
    row["central_neighbors"] = note.central_neighbors;
    centrals.push_back(std::move(row));
  }
  out["centrals"] = std::move(centrals);

  Json inter = Json::array();
  for (const auto& [pair, count] : p.inter_edges) {
    inter.push_back({{"a", pair.first}, {"b", pair.second}, {"count", count}});
  }
  out["inter_edges"] = std::move(inter);

  Json assignment = Json::object();
  for (const auto& [id, community] : p.assignment) assignment[id] = community;
  out["assignment"] = std::move(assignment);
  return out;
}

}  // namespace codexgraph::internal

// Copyright 2026 The tempspan Authors.
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

#include "tempspan/clique_spanner.h"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "clique_view.h"
#include "tempspan/hitting_set.h"

namespace tempspan {

std::ptrdiff_t ClusterLevel::active_index(Vertex u) const {
  return u < active_pos.size() ? active_pos[u] : -1;
}

std::ptrdiff_t ClusterLevel::center_index(Vertex x) const {
  return x < center_pos.size() ? center_pos[x] : -1;
}

std::vector<Vertex> ClusterHierarchy::special_set(int i) const {
  if (i == 0) {
    std::vector<Vertex> all(num_vertices);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  return levels.at(i - 1).specials;
}

std::size_t ClusterHierarchy::size_bound() const {
  std::size_t init = 0, first = 0, delta_prefix = 0;
  for (const ClusterLevel& level : levels) {
    delta_prefix += level.target_size;
    init += level.active.size() * level.target_size;
    first += level.active.size() * delta_prefix;
  }
  const std::size_t top = levels.empty() ? num_vertices
                                         : levels.back().specials.size();
  return init + first + num_vertices * top;
}

std::string ClusterHierarchy::to_json() const {
  nlohmann::json j;
  j["n"] = num_vertices;
  j["k"] = k;
  j["degenerate"] = degenerate;
  j["phase_counts"] = {{"initialization", phase_counts.initialization},
                       {"first_augmentation", phase_counts.first_augmentation},
                       {"second_augmentation",
                        phase_counts.second_augmentation}};
  j["levels"] = nlohmann::json::array();
  for (const ClusterLevel& level : levels) {
    nlohmann::json lj;
    lj["index"] = level.index;
    lj["delta"] = level.target_size;
    lj["active"] = level.active;
    lj["hitting_set"] = level.centers;
    nlohmann::json clusters = nlohmann::json::array();
    for (std::size_t c = 0; c < level.centers.size(); ++c) {
      clusters.push_back({{"center", level.centers[c]},
                          {"members", level.clusters[c]},
                          {"special", level.specials[c]}});
    }
    lj["clusters"] = std::move(clusters);
    j["levels"].push_back(std::move(lj));
  }
  return j.dump(2);
}

std::size_t cluster_target_size(std::size_t n, int i, int k) {
  const double nd = static_cast<double>(n);
  const double value = std::pow(nd, static_cast<double>(i) / k) *
                       std::pow(std::log(nd), static_cast<double>(k - i) / k);
  return static_cast<std::size_t>(std::ceil(value));
}

namespace {

int ceil_log2(std::size_t n) {
  int r = 0;
  while ((std::size_t{1} << r) < n) ++r;
  return r;
}

}  // namespace

CliqueSpanner build_spanner_2k1(const TemporalGraph& g, int k) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("clique spanner needs n >= 2");
  if (k < 2 || k > ceil_log2(n) + 1) {
    throw std::invalid_argument("k must lie in [2, ceil(log2 n) + 1]");
  }
  const internal::CliqueView clique(g);

  // Incident neighbors of each vertex by (label, neighbor id).
  std::vector<std::vector<Vertex>> order(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v != u) order[u].push_back(v);
    }
    std::sort(order[u].begin(), order[u].end(), [&](Vertex a, Vertex b) {
      return std::tuple(clique.label(u, a), a) <
             std::tuple(clique.label(u, b), b);
    });
  }
  std::vector<std::size_t> consumed(n, 0);

  ClusterHierarchy h;
  h.num_vertices = n;
  h.k = k;
  std::vector<Vertex> active(n);
  std::iota(active.begin(), active.end(), Vertex{0});

  for (int i = 1; i < k && !h.degenerate; ++i) {
    ClusterLevel level;
    level.index = i;
    level.target_size = cluster_target_size(n, i, k);
    level.active = active;
    level.active_pos.assign(n, -1);
    level.center_pos.assign(n, -1);
    SetCollection collection{n, {}};
    for (std::size_t a = 0; a < active.size(); ++a) {
      const Vertex u = active[a];
      level.active_pos[u] = static_cast<std::ptrdiff_t>(a);
      const std::size_t take =
          std::min(level.target_size, n - 1 - consumed[u]);
      if (take == 0) {
        h.degenerate = true;
        break;
      }
      std::vector<EdgeId> es;
      std::vector<Vertex> ss;
      for (std::size_t t = consumed[u]; t < consumed[u] + take; ++t) {
        es.push_back(clique.edge(u, order[u][t]));
        ss.push_back(order[u][t]);
      }
      consumed[u] += take;
      level.candidate_edges.push_back(std::move(es));
      collection.sets.push_back(ss);
      level.neighbor_sets.push_back(std::move(ss));
    }
    if (h.degenerate) break;

    level.centers = greedy_hitting_set(collection);
    for (std::size_t c = 0; c < level.centers.size(); ++c) {
      level.center_pos[level.centers[c]] = static_cast<std::ptrdiff_t>(c);
    }
    level.clusters.assign(level.centers.size(), {});
    for (std::size_t a = 0; a < active.size(); ++a) {
      std::ptrdiff_t best = -1;
      for (Vertex x : level.neighbor_sets[a]) {
        const std::ptrdiff_t pos = level.center_pos[x];
        if (pos >= 0 && (best < 0 || pos < best)) best = pos;
      }
      if (best < 0) throw std::logic_error("hitting set misses a vertex");
      const Vertex x = level.centers[best];
      level.center_of.push_back(x);
      level.center_edge.push_back(clique.edge(active[a], x));
      level.clusters[best].push_back(active[a]);
    }
    for (std::size_t c = 0; c < level.centers.size(); ++c) {
      const Vertex x = level.centers[c];
      const auto& members = level.clusters[c];
      if (members.empty()) throw std::logic_error("empty cluster");
      Vertex z = members.front();
      for (Vertex u : members) {
        const Label lu = clique.label(u, x), lz = clique.label(z, x);
        if (lu > lz || (lu == lz && u < z)) z = u;
      }
      level.specials.push_back(z);
      level.special_edge.push_back(clique.edge(x, z));
    }
    active = level.specials;
    h.levels.push_back(std::move(level));
  }

  if (h.degenerate) {
    return {make_subgraph(g, min_label_representatives(g)), std::move(h)};
  }

  std::vector<EdgeId> kept;
  PhaseCounts& counts = h.phase_counts;
  for (const ClusterLevel& level : h.levels) {
    for (const auto& es : level.candidate_edges) {
      kept.insert(kept.end(), es.begin(), es.end());
      counts.initialization += es.size();
    }
  }
  for (std::size_t li = 0; li < h.levels.size(); ++li) {
    const ClusterLevel& level = h.levels[li];
    for (std::size_t a = 0; a < level.active.size(); ++a) {
      const Vertex u = level.active[a];
      const Vertex z = level.specials[level.center_index(level.center_of[a])];
      for (std::size_t j = 0; j <= li; ++j) {
        const ClusterLevel& lower = h.levels[j];
        for (Vertex v : lower.neighbor_sets[lower.active_index(z)]) {
          ++counts.first_augmentation;
          if (v != u) kept.push_back(clique.edge(u, v));
        }
      }
    }
  }
  for (Vertex z : h.levels.back().specials) {
    for (Vertex v = 0; v < n; ++v) {
      ++counts.second_augmentation;
      if (v != z) kept.push_back(clique.edge(z, v));
    }
  }
  return {make_subgraph(g, std::move(kept)), std::move(h)};
}

CliqueSpanner build_spanner_3(const TemporalGraph& g) {
  return build_spanner_2k1(g, 2);
}

CliqueSpanner build_spanner_5(const TemporalGraph& g) {
  if (g.num_vertices() == 2) return build_spanner_2k1(g, 2);
  return build_spanner_2k1(g, 3);
}

TemporalPath climb_path(const TemporalGraph& g,
                        const ClusterHierarchy& hierarchy, Vertex u, int i) {
  if (i < 0 || i > static_cast<int>(hierarchy.levels.size())) {
    throw std::invalid_argument("level out of range");
  }
  TemporalPath path(u);
  Vertex z = u;
  for (int j = 1; j <= i; ++j) {
    const ClusterLevel& level = hierarchy.levels[j - 1];
    const std::ptrdiff_t a = level.active_index(z);
    if (a < 0) throw std::logic_error("climb left the hierarchy");
    const Vertex x = level.center_of[a];
    const std::size_t c = static_cast<std::size_t>(level.center_index(x));
    path.push_back(g.edge(level.center_edge[a]), level.center_edge[a]);
    path.push_back(g.edge(level.special_edge[c]), level.special_edge[c]);
    z = level.specials[c];
  }
  return path;
}

}  // namespace tempspan

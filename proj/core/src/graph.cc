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

#include "tempspan/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace tempspan {

std::ostream& operator<<(std::ostream& os, const TemporalEdge& e) {
  return os << "(" << e.u << "," << e.v << "," << e.label << ")";
}

std::uint32_t Distance::hops() const {
  if (!finite_) throw std::logic_error("hops() of an infinite distance");
  return hops_;
}

std::ostream& operator<<(std::ostream& os, const Distance& d) {
  if (d.is_infinite()) return os << "inf";
  return os << d.hops();
}

namespace {

std::pair<Vertex, Vertex> ordered(const TemporalEdge& e) {
  return e.u < e.v ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
}

}  // namespace

TemporalGraph::TemporalGraph(std::size_t num_vertices,
                             std::vector<TemporalEdge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (edges_.size() >= kNoEdge) throw std::invalid_argument("too many edges");
  for (const TemporalEdge& e : edges_) {
    if (e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (e.label < 1) throw std::invalid_argument("time label must be >= 1");
  }

  // Parallel edges must carry distinct labels.
  std::vector<std::tuple<Vertex, Vertex, Label>> keys;
  keys.reserve(edges_.size());
  for (const TemporalEdge& e : edges_) {
    auto [a, b] = ordered(e);
    keys.emplace_back(a, b, e.label);
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw std::invalid_argument("duplicate edge with identical label");
  }

  offsets_.assign(num_vertices_ + 1, 0);
  for (const TemporalEdge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidences_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const TemporalEdge& e = edges_[id];
    incidences_[fill[e.u]++] = {e.v, e.label, id};
    incidences_[fill[e.v]++] = {e.u, e.label, id};
  }
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    std::sort(incidences_.begin() + offsets_[v],
              incidences_.begin() + offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) {
                return std::tie(a.label, a.edge) < std::tie(b.label, b.edge);
              });
  }

  std::vector<EdgeId> by_label(edges_.size());
  std::iota(by_label.begin(), by_label.end(), EdgeId{0});
  std::stable_sort(by_label.begin(), by_label.end(), [&](EdgeId a, EdgeId b) {
    return edges_[a].label < edges_[b].label;
  });
  layer_edges_ = std::move(by_label);
  for (std::size_t i = 0; i < layer_edges_.size(); ++i) {
    Label l = edges_[layer_edges_[i]].label;
    if (labels_.empty() || labels_.back() != l) {
      if (!labels_.empty()) layer_offsets_.push_back(i);
      labels_.push_back(l);
    }
  }
  if (!labels_.empty()) layer_offsets_.push_back(layer_edges_.size());
}

EdgeId TemporalGraph::find_edge(Vertex u, Vertex v, Label label) const {
  if (u >= num_vertices_ || v >= num_vertices_) return kNoEdge;
  auto inc = incident(u);
  auto it = std::lower_bound(
      inc.begin(), inc.end(), label,
      [](const Incidence& a, Label l) { return a.label < l; });
  for (; it != inc.end() && it->label == label; ++it) {
    if (it->neighbor == v) return it->edge;
  }
  return kNoEdge;
}

bool TemporalGraph::is_simple_clique() const {
  const std::size_t n = num_vertices_;
  if (edges_.size() != n * (n - (n > 0 ? 1 : 0)) / 2) return false;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges_.size());
  for (const TemporalEdge& e : edges_) pairs.push_back(ordered(e));
  std::sort(pairs.begin(), pairs.end());
  return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
}

Subgraph::Subgraph(const TemporalGraph& parent) : parent_(&parent) {}

Subgraph::Subgraph(const TemporalGraph& parent, std::vector<EdgeId> kept)
    : parent_(&parent), kept_(std::move(kept)) {
  if (!std::is_sorted(kept_.begin(), kept_.end()) ||
      std::adjacent_find(kept_.begin(), kept_.end()) != kept_.end()) {
    throw std::invalid_argument("subgraph edge ids must be sorted and unique");
  }
  if (!kept_.empty() && kept_.back() >= parent.num_edges()) {
    throw std::invalid_argument("subgraph edge id out of range");
  }
}

bool Subgraph::contains(EdgeId id) const {
  return std::binary_search(kept_.begin(), kept_.end(), id);
}

TemporalGraph Subgraph::to_graph() const {
  std::vector<TemporalEdge> edges;
  edges.reserve(kept_.size());
  for (EdgeId id : kept_) edges.push_back(parent_->edge(id));
  return TemporalGraph(parent_->num_vertices(), std::move(edges));
}

Subgraph make_subgraph(const TemporalGraph& parent, std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Subgraph(parent, std::move(ids));
}

NormalizedGraph normalize_lifetime(const TemporalGraph& g) {
  NormalizedGraph out;
  const auto& labels = g.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out.label_map.emplace_back(labels[i], static_cast<Label>(i + 1));
  }
  std::vector<TemporalEdge> edges = g.edges();
  for (TemporalEdge& e : edges) {
    auto it = std::lower_bound(labels.begin(), labels.end(), e.label);
    e.label = static_cast<Label>(it - labels.begin() + 1);
  }
  out.graph = TemporalGraph(g.num_vertices(), std::move(edges));
  return out;
}

std::vector<EdgeId> min_label_representatives(const TemporalGraph& g) {
  std::vector<EdgeId> ids(g.num_edges());
  std::iota(ids.begin(), ids.end(), EdgeId{0});
  auto key = [&](EdgeId id) {
    auto [a, b] = ordered(g.edge(id));
    return std::tuple(a, b, g.edge(id).label, id);
  };
  std::sort(ids.begin(), ids.end(),
            [&](EdgeId x, EdgeId y) { return key(x) < key(y); });
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i == 0 || ordered(g.edge(ids[i])) != ordered(g.edge(ids[i - 1]))) {
      out.push_back(ids[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tempspan

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

#include "tempspan/profile.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>

namespace tempspan {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

// Sweeps the label layers in ascending order. Within a layer, a multi-source
// Dijkstra seeded with the distances reached so far relaxes only edges of
// that label, so consecutive equal labels along a path are allowed. Calls
// on_improve(v, label, hops, pred) for every vertex whose distance dropped
// during the layer, in ascending vertex order.
template <typename OnImprove>
void sweep(const TemporalGraph& g, Vertex s, std::vector<std::uint32_t>& dist,
           OnImprove&& on_improve) {
  const std::size_t n = g.num_vertices();
  dist.assign(n, kUnreached);
  dist[s] = 0;
  std::vector<std::size_t> cursor(n, 0);
  std::vector<EdgeId> pred(n, kNoEdge);
  std::vector<std::size_t> seeded(n, kNever);
  std::vector<std::size_t> settled(n, kNever);
  std::vector<std::size_t> improved_in(n, kNever);
  std::vector<Vertex> improved;

  using Entry = std::pair<std::uint32_t, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;

  for (std::size_t li = 0; li < g.lifetime(); ++li) {
    const Label tau = g.labels()[li];
    for (EdgeId id : g.layer(li)) {
      const TemporalEdge& e = g.edge(id);
      for (Vertex w : {e.u, e.v}) {
        if (dist[w] != kUnreached && seeded[w] != li) {
          seeded[w] = li;
          frontier.emplace(dist[w], w);
        }
      }
    }
    improved.clear();
    while (!frontier.empty()) {
      auto [d, w] = frontier.top();
      frontier.pop();
      if (d != dist[w] || settled[w] == li) continue;
      settled[w] = li;
      auto inc = g.incident(w);
      std::size_t& c = cursor[w];
      while (c < inc.size() && inc[c].label < tau) ++c;
      for (std::size_t j = c; j < inc.size() && inc[j].label == tau; ++j) {
        const Vertex x = inc[j].neighbor;
        if (d + 1 < dist[x]) {
          dist[x] = d + 1;
          pred[x] = inc[j].edge;
          if (improved_in[x] != li) {
            improved_in[x] = li;
            improved.push_back(x);
          }
          frontier.emplace(d + 1, x);
        }
      }
    }
    std::sort(improved.begin(), improved.end());
    for (Vertex x : improved) on_improve(x, tau, dist[x], pred[x]);
  }
}

}  // namespace

const RestrictedDistanceProfile::Record* RestrictedDistanceProfile::record_at(
    Vertex v, Label tau) const {
  const auto& rs = records_.at(v);
  auto it = std::upper_bound(
      rs.begin(), rs.end(), tau,
      [](Label t, const Record& r) { return t < r.label; });
  if (it == rs.begin()) return nullptr;
  return &*std::prev(it);
}

Distance RestrictedDistanceProfile::distance(Vertex v, Label tau) const {
  const Record* r = record_at(v, tau);
  return r ? Distance(r->hops) : Distance::infinity();
}

Distance RestrictedDistanceProfile::distance(Vertex v) const {
  const auto& rs = records_.at(v);
  return rs.empty() ? Distance::infinity() : Distance(rs.back().hops);
}

RestrictedDistanceProfile restricted_profile(const TemporalGraph& g, Vertex s) {
  if (s >= g.num_vertices()) throw std::invalid_argument("source out of range");
  RestrictedDistanceProfile p;
  p.graph_ = &g;
  p.source_ = s;
  p.records_.assign(g.num_vertices(), {});
  p.records_[s].push_back({0, 0, kNoEdge});
  std::vector<std::uint32_t> dist;
  sweep(g, s, dist,
        [&](Vertex v, Label tau, std::uint32_t hops, EdgeId pred) {
          p.records_[v].push_back({tau, hops, pred});
        });
  return p;
}

std::vector<Distance> distances_from(const TemporalGraph& g, Vertex s) {
  if (s >= g.num_vertices()) throw std::invalid_argument("source out of range");
  std::vector<std::uint32_t> dist;
  sweep(g, s, dist, [](Vertex, Label, std::uint32_t, EdgeId) {});
  std::vector<Distance> out;
  out.reserve(dist.size());
  for (std::uint32_t d : dist) {
    out.push_back(d == kUnreached ? Distance::infinity() : Distance(d));
  }
  return out;
}

Distance distance(const TemporalGraph& g, Vertex u, Vertex v) {
  if (v >= g.num_vertices()) throw std::invalid_argument("target out of range");
  return distances_from(g, u)[v];
}

TemporalPath reconstruct_path(const RestrictedDistanceProfile& profile,
                              Vertex v, Label tau) {
  const TemporalGraph& g = profile.graph();
  const auto* rec = profile.record_at(v, tau);
  if (rec == nullptr) {
    throw std::invalid_argument("no tau-restricted temporal path to target");
  }
  std::vector<EdgeId> reversed;
  Vertex at = v;
  while (rec->pred != kNoEdge) {
    reversed.push_back(rec->pred);
    const TemporalEdge& e = g.edge(rec->pred);
    at = e.other(at);
    rec = profile.record_at(at, e.label);
  }
  TemporalPath path(profile.source());
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) {
    path.push_back(g.edge(*it), *it);
  }
  return path;
}

}  // namespace tempspan

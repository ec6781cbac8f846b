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

// Reference oracles shared by the tests. None of them calls the library's
// distance code, so they can be used to check it.

#ifndef TEMPSPAN_TESTS_TEST_UTIL_H_
#define TEMPSPAN_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <vector>

#include "tempspan/graph.h"

namespace tempspan::testing {

inline constexpr std::uint32_t kUnreached =
    std::numeric_limits<std::uint32_t>::max();

// Shortest tau-restricted temporal distance from s to every vertex, by BFS
// over states (vertex, label of the edge used to enter it). A shortest
// non-decreasing walk never repeats a vertex (cutting the loop keeps the
// labels sorted), so walk and path distances agree.
inline std::vector<std::uint32_t> oracle_distances(const TemporalGraph& g,
                                                   Vertex s, Label tau) {
  const std::size_t n = g.num_vertices();
  std::vector<Label> labels{0};
  for (const TemporalEdge& e : g.edges()) labels.push_back(e.label);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const std::size_t width = labels.size();
  const auto index_of = [&](Label l) {
    return static_cast<std::size_t>(
        std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };

  std::vector<std::uint32_t> state(n * width, kUnreached);
  std::vector<std::uint32_t> best(n, kUnreached);
  std::deque<std::size_t> queue;
  state[s * width] = 0;
  best[s] = 0;
  queue.push_back(s * width);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const Vertex v = static_cast<Vertex>(cur / width);
    const Label last = labels[cur % width];
    for (const TemporalEdge& e : g.edges()) {
      if (e.label < last || e.label > tau) continue;
      if (e.u != v && e.v != v) continue;
      const Vertex w = e.u == v ? e.v : e.u;
      const std::size_t next = w * width + index_of(e.label);
      if (state[next] != kUnreached) continue;
      state[next] = state[cur] + 1;
      best[w] = std::min(best[w], state[next]);
      queue.push_back(next);
    }
  }
  return best;
}

inline std::vector<std::uint32_t> oracle_distances(const TemporalGraph& g,
                                                   Vertex s) {
  return oracle_distances(g, s, std::numeric_limits<Label>::max());
}

// Hop distances in the static graph obtained by forgetting labels.
inline std::vector<std::uint32_t> static_bfs(
    std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
    Vertex s) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::uint32_t> dist(n, kUnreached);
  std::deque<Vertex> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : adj[v]) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

// Converts a library distance into the oracle's representation.
inline std::uint32_t as_hops(Distance d) {
  return d.is_finite() ? d.hops() : kUnreached;
}

}  // namespace tempspan::testing

#endif  // TEMPSPAN_TESTS_TEST_UTIL_H_

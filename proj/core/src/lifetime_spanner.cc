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

#include "tempspan/lifetime_spanner.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>

#include "clique_view.h"

namespace tempspan {

namespace {

// Clique labels after collapsing parallel edges, optionally rank-normalized.
class RankedClique {
 public:
  RankedClique(const TemporalGraph& g, bool use_ranks)
      : g_(g), view_(g), use_ranks_(use_ranks) {}

  std::size_t size() const { return view_.size(); }
  EdgeId edge(Vertex u, Vertex v) const { return view_.edge(u, v); }
  Label label(Vertex u, Vertex v) const {
    const Label raw = view_.label(u, v);
    if (!use_ranks_) return raw;
    const auto& ls = g_.labels();
    return static_cast<Label>(std::lower_bound(ls.begin(), ls.end(), raw) -
                              ls.begin() + 1);
  }

 private:
  const TemporalGraph& g_;
  internal::CliqueView view_;
  bool use_ranks_;
};

std::size_t progress_needed(std::size_t size) {
  // At least (|S| - 2) / 2 elements, and never zero so each round shrinks
  // X or Y.
  const std::size_t half = size > 2 ? (size - 2 + 1) / 2 : 0;
  return std::max<std::size_t>(1, half);
}

// |star| >= (|Y| - 1) / 2^t, without overflowing the shift.
bool covers_share(std::size_t star, std::size_t y, Label t) {
  const std::uint64_t rest = y - 1;
  const std::uint64_t need =
      (rest >> t) + ((rest & ((std::uint64_t{1} << t) - 1)) != 0 ? 1 : 0);
  return star >= need;
}

void erase_members(std::vector<Vertex>& from, const std::vector<Vertex>& gone) {
  std::vector<Vertex> rest;
  std::set_difference(from.begin(), from.end(), gone.begin(), gone.end(),
                      std::back_inserter(rest));
  from = std::move(rest);
}

}  // namespace

LifetimeSpanner build_2spanner_L2(const TemporalGraph& g) {
  if (g.lifetime() > 2) {
    throw std::invalid_argument("the lifetime-2 spanner needs at most 2 labels");
  }
  const bool already = std::all_of(g.labels().begin(), g.labels().end(),
                                   [](Label l) { return l <= 2; });
  const RankedClique c(g, !already);
  const std::size_t n = c.size();

  std::vector<Vertex> xs(n), ys(n);
  for (Vertex v = 0; v < n; ++v) xs[v] = ys[v] = v;
  std::vector<EdgeId> kept;
  std::size_t rounds = 0;

  while ((xs.size() > 2 || ys.size() > 2) && !xs.empty() && !ys.empty()) {
    ++rounds;
    bool done = false;
    // Star centered at x*: label-2 edges into Y.
    const std::size_t need_y = progress_needed(ys.size());
    for (Vertex x : xs) {
      std::vector<Vertex> star;
      for (Vertex y : ys) {
        if (y != x && c.label(x, y) == 2) star.push_back(y);
      }
      if (star.size() < need_y) continue;
      for (Vertex y : star) kept.push_back(c.edge(x, y));
      for (Vertex other : xs) {
        if (other != x) kept.push_back(c.edge(other, x));
      }
      erase_members(ys, star);
      done = true;
      break;
    }
    if (done) continue;
    // Star centered at y*: label-1 edges from X.
    const std::size_t need_x = progress_needed(xs.size());
    for (Vertex y : ys) {
      std::vector<Vertex> star;
      for (Vertex x : xs) {
        if (x != y && c.label(x, y) == 1) star.push_back(x);
      }
      if (star.size() < need_x) continue;
      for (Vertex x : star) kept.push_back(c.edge(x, y));
      for (Vertex other : ys) {
        if (other != y) kept.push_back(c.edge(y, other));
      }
      erase_members(xs, star);
      done = true;
      break;
    }
    if (!done) {
      throw std::logic_error("neither covering star exists");
    }
  }
  for (Vertex x : xs) {
    for (Vertex y : ys) {
      if (x != y) kept.push_back(c.edge(x, y));
    }
  }
  return {make_subgraph(g, std::move(kept)), rounds};
}

LifetimeSpanner build_3spanner_2L(const TemporalGraph& g) {
  const RankedClique c(g, true);
  const std::size_t n = c.size();
  const std::size_t L = g.lifetime();

  std::vector<Vertex> ys(n);
  for (Vertex v = 0; v < n; ++v) ys[v] = v;
  std::vector<EdgeId> kept;
  std::size_t rounds = 0;
  const auto above_threshold = [&] {
    return L < 63 && ys.size() > (std::uint64_t{1} << L);
  };

  while (above_threshold()) {
    ++rounds;
    Vertex center = 0;
    Label t_star = 0;
    std::vector<Vertex> star;
    for (Label t = static_cast<Label>(L); t >= 1 && star.empty(); --t) {
      for (Vertex x = 0; x < n; ++x) {
        std::vector<Vertex> cand;
        for (Vertex y : ys) {
          if (y != x && c.label(x, y) == t) cand.push_back(y);
        }
        if (!cand.empty() && covers_share(cand.size(), ys.size(), t)) {
          center = x;
          t_star = t;
          star = std::move(cand);
          break;
        }
      }
    }
    if (star.empty()) {
      throw std::logic_error("no label class covers enough of Y");
    }
    for (Vertex y : star) kept.push_back(c.edge(center, y));
    for (Vertex x = 0; x < n; ++x) {
      // Members of the star already reach all of it through the center.
      if (x == center || std::binary_search(star.begin(), star.end(), x)) {
        continue;
      }
      const auto it = std::find_if(star.begin(), star.end(), [&](Vertex y) {
        return y != x && c.label(x, y) <= t_star;
      });
      if (it == star.end()) {
        throw std::logic_error("no low-label edge into the star");
      }
      kept.push_back(c.edge(x, *it));
    }
    erase_members(ys, star);
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y : ys) {
      if (x != y) kept.push_back(c.edge(x, y));
    }
  }
  return {make_subgraph(g, std::move(kept)), rounds};
}

std::vector<std::size_t> greedy_static_spanner(const StaticGraph& gs, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::size_t n = gs.num_vertices;
  const std::size_t depth = 2 * static_cast<std::size_t>(k) - 1;

  std::vector<std::size_t> order(gs.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [u, v] = gs.edges[i];
    if (u >= n || v >= n) throw std::invalid_argument("edge out of range");
    order[i] = i;
  }
  const auto key = [&](std::size_t i) {
    const auto [u, v] = gs.edges[i];
    return std::pair(std::min(u, v), std::max(u, v));
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                    std::size_t b) {
    return key(a) < key(b);
  });

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::size_t> dist(n, SIZE_MAX);
  std::vector<Vertex> touched;
  // True when the kept graph has a path from u to v with at most `depth`
  // edges.
  const auto close = [&](Vertex u, Vertex v) {
    if (u == v) return true;
    bool found = false;
    std::deque<Vertex> queue{u};
    dist[u] = 0;
    touched.assign(1, u);
    while (!queue.empty() && !found) {
      const Vertex w = queue.front();
      queue.pop_front();
      if (dist[w] == depth) continue;
      for (Vertex x : adj[w]) {
        if (dist[x] != SIZE_MAX) continue;
        dist[x] = dist[w] + 1;
        touched.push_back(x);
        if (x == v) {
          found = true;
          break;
        }
        queue.push_back(x);
      }
    }
    for (Vertex w : touched) dist[w] = SIZE_MAX;
    return found;
  };

  std::vector<std::size_t> kept;
  for (std::size_t i : order) {
    const auto [u, v] = gs.edges[i];
    if (close(u, v)) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
    kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

LifetimeSpanner build_layered_spanner(const TemporalGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<EdgeId> kept;
  for (std::size_t i = 0; i < g.lifetime(); ++i) {
    const auto layer = g.layer(i);
    StaticGraph gs{g.num_vertices(), {}};
    gs.edges.reserve(layer.size());
    for (EdgeId id : layer) gs.edges.emplace_back(g.edge(id).u, g.edge(id).v);
    for (std::size_t j : greedy_static_spanner(gs, k)) {
      kept.push_back(layer[j]);
    }
  }
  return {make_subgraph(g, std::move(kept)), 0};
}

}  // namespace tempspan

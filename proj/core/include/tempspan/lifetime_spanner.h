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

// Spanners whose size depends on the lifetime L: star covering for cliques
// with two labels, the 3-spanner for cliques with L labels, and the
// composition of static spanners built on each label layer.

#ifndef TEMPSPAN_LIFETIME_SPANNER_H_
#define TEMPSPAN_LIFETIME_SPANNER_H_

#include <cstddef>
#include <utility>
#include <vector>

#include "tempspan/graph.h"

namespace tempspan {

struct LifetimeSpanner {
  Subgraph spanner;
  // Iterations of the covering loop (0 for the layered construction).
  std::size_t rounds = 0;
};

// Temporal 2-spanner of a clique with at most two distinct labels. Labels
// outside {1, 2} are first replaced by their rank. Each round adds one star:
// either centered at x* with the label-2 neighbors Y* it covers, or centered
// at y* with the label-1 neighbors X* it covers. Remaining pairs are joined
// directly at the end. Throws std::invalid_argument on a non-clique or on
// more than two labels, and std::logic_error if neither star exists.
LifetimeSpanner build_2spanner_L2(const TemporalGraph& g);

// Temporal 3-spanner of a clique with lifetime L, of size O(2^L n log n).
// Labels are replaced by their rank. Throws std::invalid_argument on a
// non-clique.
LifetimeSpanner build_3spanner_2L(const TemporalGraph& g);

// Undirected static graph given as an edge list.
struct StaticGraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// Classical greedy (2k-1)-spanner: edges are scanned in ascending (u, v)
// order (with u < v) and an edge is kept when the kept graph has no u-v path
// of at most 2k-1 edges. Returns indices into gs.edges, ascending.
std::vector<std::size_t> greedy_static_spanner(const StaticGraph& gs, int k);

// Runs the greedy static spanner on every label layer and keeps the union.
// The result satisfies d_H(u, v) <= (2k - 1) d_G(u, v) for all pairs.
LifetimeSpanner build_layered_spanner(const TemporalGraph& g, int k);

}  // namespace tempspan

#endif  // TEMPSPAN_LIFETIME_SPANNER_H_

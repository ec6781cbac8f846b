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

// Temporal (2k-1)-spanners of temporal cliques built on a hierarchical
// clustering. Level i clusters the level-(i-1) special vertices around the
// members of a greedy hitting set; each cluster elects the member whose edge to
// the center has the largest label as its special vertex.

#ifndef TEMPSPAN_CLIQUE_SPANNER_H_
#define TEMPSPAN_CLIQUE_SPANNER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "tempspan/graph.h"
#include "tempspan/path.h"

namespace tempspan {

// One clustering level. Per-vertex data is stored parallel to `active`,
// per-cluster data parallel to `centers`.
struct ClusterLevel {
  int index = 0;                  // i, starting at 1
  std::size_t target_size = 0;    // delta_i before capping by degree
  std::vector<Vertex> active;     // Z_{i-1}
  std::vector<std::vector<EdgeId>> candidate_edges;  // E_{i,u}
  std::vector<std::vector<Vertex>> neighbor_sets;    // S_{i,u}
  std::vector<Vertex> center_of;                     // x with u in C_{i,x}
  std::vector<EdgeId> center_edge;                   // edge (u, x)

  std::vector<Vertex> centers;                 // R_i in selection order
  std::vector<std::vector<Vertex>> clusters;   // C_{i,x}
  std::vector<Vertex> specials;                // z_i(x)
  std::vector<EdgeId> special_edge;            // edge (x, z_i(x))

  // Position of u in `active`, or -1.
  std::ptrdiff_t active_index(Vertex u) const;
  // Position of x in `centers`, or -1.
  std::ptrdiff_t center_index(Vertex x) const;

  std::vector<std::ptrdiff_t> active_pos;   // size n
  std::vector<std::ptrdiff_t> center_pos;   // size n
};

// Number of (u, v) pairs each construction phase enumerates, with repetition
// across phases. A pair with u = v is counted but adds no edge, which keeps
// the counts equal to the size formula term by term.
struct PhaseCounts {
  std::size_t initialization = 0;
  std::size_t first_augmentation = 0;
  std::size_t second_augmentation = 0;
};

struct ClusterHierarchy {
  std::size_t num_vertices = 0;
  int k = 0;
  std::vector<ClusterLevel> levels;  // levels[i - 1] is level i
  // Set when some active vertex ran out of unconsumed edges; the spanner is
  // then the whole clique.
  bool degenerate = false;
  PhaseCounts phase_counts;

  // Z_i; Z_0 is every vertex.
  std::vector<Vertex> special_set(int i) const;

  // sum_i |Z_{i-1}| delta_i + sum_i |Z_{i-1}| sum_{j<=i} delta_j
  //   + n |Z_{k-1}|, using the uncapped targets.
  std::size_t size_bound() const;

  std::string to_json() const;
};

struct CliqueSpanner {
  Subgraph spanner;
  ClusterHierarchy hierarchy;
};

// delta_i = ceil(n^{i/k} (ln n)^{(k-i)/k}).
std::size_t cluster_target_size(std::size_t n, int i, int k);

// Temporal (2k-1)-spanner of a temporal clique. Parallel edges are first
// collapsed to their minimum label. Requires n >= 2 and
// 2 <= k <= ceil(log2 n) + 1; throws std::invalid_argument otherwise or when
// some pair of vertices is not adjacent.
CliqueSpanner build_spanner_2k1(const TemporalGraph& g, int k);

// Single-level clustering, stretch 3.
CliqueSpanner build_spanner_3(const TemporalGraph& g);

// Two-level clustering, stretch 5.
CliqueSpanner build_spanner_5(const TemporalGraph& g);

// The walk (z_0, x_1), (x_1, z_1), ..., (x_i, z_i) with z_0 = u that climbs
// the hierarchy. Labels are non-decreasing; a vertex may repeat when u is
// already the special vertex of its cluster.
TemporalPath climb_path(const TemporalGraph& g,
                        const ClusterHierarchy& hierarchy, Vertex u, int i);

}  // namespace tempspan

#endif  // TEMPSPAN_CLIQUE_SPANNER_H_

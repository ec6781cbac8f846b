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

#ifndef TEMPSPAN_GRAPH_H_
#define TEMPSPAN_GRAPH_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

namespace tempspan {

using Vertex = std::uint32_t;
using Label = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Undirected edge carrying a single time label. Inside a TemporalPath the
// endpoints are oriented in traversal order (u is entered first).
struct TemporalEdge {
  Vertex u = 0;
  Vertex v = 0;
  Label label = 1;

  friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  TemporalEdge reversed() const { return {v, u, label}; }
};

std::ostream& operator<<(std::ostream& os, const TemporalEdge& e);

// Hop count of a temporal path, or infinity when no path exists. Infinity is
// a state of its own and compares greater than every finite distance.
class Distance {
 public:
  constexpr Distance() = default;  // infinity
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops), finite_(true) {}

  static constexpr Distance infinity() { return Distance(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }
  // Precondition: is_finite().
  std::uint32_t hops() const;

  friend constexpr bool operator==(const Distance& a, const Distance& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.hops_ == b.hops_);
  }
  friend constexpr std::strong_ordering operator<=>(const Distance& a,
                                                    const Distance& b) {
    if (a.finite_ != b.finite_) {
      return a.finite_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    if (!a.finite_) return std::strong_ordering::equal;
    return a.hops_ <=> b.hops_;
  }

 private:
  std::uint32_t hops_ = 0;
  bool finite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Distance& d);

// One incidence of an edge at a vertex.
struct Incidence {
  Vertex neighbor;
  Label label;
  EdgeId edge;
};

// Immutable undirected temporal multigraph on vertices 0..n-1.
//
// Parallel edges are allowed as long as each unordered pair carries distinct
// labels; this is how an edge with several time instants is represented.
// Construction validates every invariant and throws std::invalid_argument.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(std::size_t num_vertices, std::vector<TemporalEdge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<TemporalEdge>& edges() const { return edges_; }
  const TemporalEdge& edge(EdgeId id) const { return edges_[id]; }

  // Incidences of `v` sorted by (label, edge id).
  std::span<const Incidence> incident(Vertex v) const {
    return {incidences_.data() + offsets_[v],
            incidences_.data() + offsets_[v + 1]};
  }

  // Distinct labels in ascending order; lifetime() is their count.
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t lifetime() const { return labels_.size(); }
  Label max_label() const { return labels_.empty() ? 0 : labels_.back(); }

  // Edge ids grouped by label; layer(i) holds the edges labelled labels()[i]
  // in ascending id order.
  std::span<const EdgeId> layer(std::size_t i) const {
    return {layer_edges_.data() + layer_offsets_[i],
            layer_edges_.data() + layer_offsets_[i + 1]};
  }

  // Finds an edge {u,v} with the given label, or kNoEdge.
  EdgeId find_edge(Vertex u, Vertex v, Label label) const;

  // True when every unordered pair is joined by exactly one edge.
  bool is_simple_clique() const;

 private:
  std::size_t num_vertices_ = 0;
  std::vector<TemporalEdge> edges_;
  std::vector<std::size_t> offsets_ = {0};
  std::vector<Incidence> incidences_;
  std::vector<Label> labels_;
  std::vector<std::size_t> layer_offsets_ = {0};
  std::vector<EdgeId> layer_edges_;
};

// An edge subset of a parent graph over the same vertex set. The parent must
// outlive the subgraph.
class Subgraph {
 public:
  explicit Subgraph(const TemporalGraph& parent);
  Subgraph(const TemporalGraph& parent, std::vector<EdgeId> kept);

  const TemporalGraph& parent() const { return *parent_; }
  // Sorted, duplicate-free edge ids of the parent.
  const std::vector<EdgeId>& kept() const { return kept_; }
  std::size_t num_edges() const { return kept_.size(); }
  bool contains(EdgeId id) const;

  // Materializes the kept edges as a standalone graph, preserving the
  // relative order of edge ids.
  TemporalGraph to_graph() const;

 private:
  const TemporalGraph* parent_;
  std::vector<EdgeId> kept_;
};

// Builds a Subgraph from an unsorted id list that may contain repeats.
Subgraph make_subgraph(const TemporalGraph& parent, std::vector<EdgeId> ids);

struct NormalizedGraph {
  TemporalGraph graph;
  // (old label, new label) pairs in ascending order.
  std::vector<std::pair<Label, Label>> label_map;
};

// Replaces every label by its rank among the distinct labels, so the labels
// become exactly 1..L with the relative order preserved.
NormalizedGraph normalize_lifetime(const TemporalGraph& g);

// Collapses each group of parallel edges to its minimum-label member.
// Returns the ids (in `g`) of the surviving edges, in ascending order.
std::vector<EdgeId> min_label_representatives(const TemporalGraph& g);

}  // namespace tempspan

#endif  // TEMPSPAN_GRAPH_H_

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

#ifndef TEMPSPAN_PATH_H_
#define TEMPSPAN_PATH_H_

#include <cstddef>
#include <ostream>
#include <vector>

#include "tempspan/graph.h"

namespace tempspan {

// A sequence of oriented edges starting at `start()`. Edge i goes from
// vertices()[i] to vertices()[i + 1]. When built from a graph, ids() holds the
// parent edge ids; otherwise it holds kNoEdge entries.
class TemporalPath {
 public:
  TemporalPath() = default;
  // Empty path sitting at `start`.
  explicit TemporalPath(Vertex start) : vertices_{start} {}

  // Appends an edge leaving the current end vertex. Throws
  // std::invalid_argument if the edge is not incident to the end vertex.
  void push_back(const TemporalEdge& edge, EdgeId id = kNoEdge);

  bool empty() const { return edges_.empty(); }
  // |pi|: the number of edges.
  std::size_t length() const { return edges_.size(); }
  Vertex start() const { return vertices_.front(); }
  Vertex end() const { return vertices_.back(); }
  bool has_vertices() const { return !vertices_.empty(); }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<TemporalEdge>& edges() const { return edges_; }
  const std::vector<EdgeId>& ids() const { return ids_; }

  friend bool operator==(const TemporalPath&, const TemporalPath&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<TemporalEdge> edges_;
  std::vector<EdgeId> ids_;
};

std::ostream& operator<<(std::ostream& os, const TemporalPath& p);

// The last min(count, |pi|) edges of pi.
TemporalPath tail(const TemporalPath& path, std::size_t count);

// The contiguous slice of pi from u to v. Throws std::invalid_argument when u
// or v is not on the path or v precedes u.
TemporalPath subpath(const TemporalPath& path, Vertex u, Vertex v);

// Labels are non-decreasing and consecutive edges share endpoints. Vertices
// may repeat.
bool is_temporal_walk(const TemporalPath& path);

// A temporal walk whose vertices are pairwise distinct and whose every edge
// exists in `g` (matched by id when known, otherwise by endpoints and label).
bool is_temporal_path(const TemporalGraph& g, const TemporalPath& path);

}  // namespace tempspan

#endif  // TEMPSPAN_PATH_H_

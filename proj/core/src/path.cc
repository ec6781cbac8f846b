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

#include "tempspan/path.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tempspan {

void TemporalPath::push_back(const TemporalEdge& edge, EdgeId id) {
  if (vertices_.empty()) vertices_.push_back(edge.u);
  const Vertex at = vertices_.back();
  TemporalEdge oriented = edge;
  if (edge.u != at) {
    if (edge.v != at) {
      throw std::invalid_argument("edge is not incident to the path end");
    }
    oriented = edge.reversed();
  }
  edges_.push_back(oriented);
  ids_.push_back(id);
  vertices_.push_back(oriented.v);
}

std::ostream& operator<<(std::ostream& os, const TemporalPath& p) {
  os << "[";
  for (std::size_t i = 0; i < p.edges().size(); ++i) {
    if (i) os << ",";
    os << p.edges()[i];
  }
  return os << "]";
}

namespace {

TemporalPath slice(const TemporalPath& path, std::size_t first,
                   std::size_t last) {
  TemporalPath out(path.vertices()[first]);
  for (std::size_t i = first; i < last; ++i) {
    out.push_back(path.edges()[i], path.ids()[i]);
  }
  return out;
}

}  // namespace

TemporalPath tail(const TemporalPath& path, std::size_t count) {
  if (!path.has_vertices()) return path;
  const std::size_t len = path.length();
  const std::size_t keep = std::min(count, len);
  return slice(path, len - keep, len);
}

TemporalPath subpath(const TemporalPath& path, Vertex u, Vertex v) {
  const auto& vs = path.vertices();
  auto iu = std::find(vs.begin(), vs.end(), u);
  if (iu == vs.end()) throw std::invalid_argument("u is not on the path");
  auto iv = std::find(iu, vs.end(), v);
  if (iv == vs.end()) {
    throw std::invalid_argument("v is not on the path after u");
  }
  return slice(path, static_cast<std::size_t>(iu - vs.begin()),
               static_cast<std::size_t>(iv - vs.begin()));
}

bool is_temporal_walk(const TemporalPath& path) {
  const auto& es = path.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].u != path.vertices()[i] || es[i].v != path.vertices()[i + 1]) {
      return false;
    }
    if (i > 0 && es[i - 1].label > es[i].label) return false;
  }
  return true;
}

bool is_temporal_path(const TemporalGraph& g, const TemporalPath& path) {
  if (!path.has_vertices() || !is_temporal_walk(path)) return false;
  std::unordered_set<Vertex> seen;
  for (Vertex v : path.vertices()) {
    if (v >= g.num_vertices() || !seen.insert(v).second) return false;
  }
  for (std::size_t i = 0; i < path.length(); ++i) {
    const TemporalEdge& e = path.edges()[i];
    const EdgeId id = path.ids()[i];
    if (id != kNoEdge) {
      if (id >= g.num_edges()) return false;
      const TemporalEdge& ge = g.edge(id);
      const bool same = ge.label == e.label &&
                        ((ge.u == e.u && ge.v == e.v) ||
                         (ge.u == e.v && ge.v == e.u));
      if (!same) return false;
    } else if (g.find_edge(e.u, e.v, e.label) == kNoEdge) {
      return false;
    }
  }
  return true;
}

}  // namespace tempspan

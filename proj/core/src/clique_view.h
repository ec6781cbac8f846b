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

#ifndef TEMPSPAN_SRC_CLIQUE_VIEW_H_
#define TEMPSPAN_SRC_CLIQUE_VIEW_H_

#include <stdexcept>
#include <vector>

#include "tempspan/graph.h"

namespace tempspan::internal {

// Dense label/edge-id matrix of a temporal clique after collapsing parallel
// edges to their minimum label.
class CliqueView {
 public:
  explicit CliqueView(const TemporalGraph& g)
      : n_(g.num_vertices()),
        ids_(n_ * n_, kNoEdge),
        labels_(n_ * n_, 0) {
    for (EdgeId id : min_label_representatives(g)) {
      const TemporalEdge& e = g.edge(id);
      ids_[e.u * n_ + e.v] = ids_[e.v * n_ + e.u] = id;
      labels_[e.u * n_ + e.v] = labels_[e.v * n_ + e.u] = e.label;
    }
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = 0; v < n_; ++v) {
        if (u != v && ids_[u * n_ + v] == kNoEdge) {
          throw std::invalid_argument("input is not a temporal clique");
        }
      }
    }
  }

  std::size_t size() const { return n_; }
  Label label(Vertex u, Vertex v) const { return labels_[u * n_ + v]; }
  EdgeId edge(Vertex u, Vertex v) const { return ids_[u * n_ + v]; }

 private:
  std::size_t n_;
  std::vector<EdgeId> ids_;
  std::vector<Label> labels_;
};

}  // namespace tempspan::internal

#endif  // TEMPSPAN_SRC_CLIQUE_VIEW_H_

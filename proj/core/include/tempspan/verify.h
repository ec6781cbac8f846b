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

#ifndef TEMPSPAN_VERIFY_H_
#define TEMPSPAN_VERIFY_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tempspan/graph.h"
#include "tempspan/path.h"

namespace tempspan {

// Outcome of checking d_H(u, v) <= alpha * d_G(u, v) + beta.
//
// A pair unreachable in G is always satisfied; a pair reachable in G but not
// in H is a violation.
struct StretchReport {
  struct Pair {
    Vertex u = 0;
    Vertex v = 0;
    Distance in_g;
    Distance in_h;
    std::optional<Label> tau;
  };

  std::size_t num_vertices = 0;
  std::size_t edges_g = 0;
  std::size_t edges_h = 0;
  double alpha = 1;
  double beta = 0;
  std::size_t pairs_checked = 0;
  std::size_t violations = 0;
  // The pair with the least slack alpha * d_G + beta - d_H among pairs
  // reachable in G; a violating pair whenever one exists.
  std::optional<Pair> worst;
  // Largest d_H / d_G over pairs with finite, positive d_G and finite d_H.
  double max_ratio = 0;
  double elapsed_ms = 0;
  bool ok = true;

  std::string to_json() const;
};

// True when d_H <= alpha * d_G + beta. A 1e-9 guard absorbs the binary
// rounding of alpha; distances are integers.
bool within_stretch(Distance in_g, Distance in_h, double alpha, double beta);

// Exact all-pairs check over ordered pairs u != v. `workers` threads split
// the sources (0 means one). Throws std::invalid_argument when h is not a
// subgraph of g.
StretchReport verify_spanner_all_pairs(const TemporalGraph& g,
                                       const TemporalGraph& h, double alpha,
                                       double beta, unsigned workers = 0);
StretchReport verify_spanner_all_pairs(const Subgraph& h, double alpha,
                                       double beta, unsigned workers = 0);

// Checks d^tau_H(s, v) <= alpha d^tau_G(s, v) + beta for every v and every
// label tau of g.
StretchReport verify_ss_restricted(const TemporalGraph& g,
                                   const TemporalGraph& h, Vertex s,
                                   double alpha, double beta);
StretchReport verify_ss_restricted(const Subgraph& h, Vertex s, double alpha,
                                   double beta);

// True when every edge of h (by endpoints and label) is an edge of g.
bool is_subgraph_of(const TemporalGraph& h, const TemporalGraph& g);

// Depth-first enumeration of every temporal path from s with at most
// max_len edges, including the empty path. Each path is reported once, in
// DFS order over incidences sorted by (label, edge id). The callback returns
// false to stop early.
void for_each_temporal_path(
    const TemporalGraph& g, Vertex s, std::size_t max_len,
    const std::function<bool(const TemporalPath&)>& visit);

// Every temporal path from s to v with at most max_len edges. Intended for
// small instances.
std::vector<TemporalPath> enumerate_paths(const TemporalGraph& g, Vertex s,
                                          Vertex v, std::size_t max_len);

}  // namespace tempspan

#endif  // TEMPSPAN_VERIFY_H_

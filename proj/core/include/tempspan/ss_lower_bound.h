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

// A family of h edge-disjoint temporal paths from a common source in which no
// edge can be dropped by any single-source beta-additive spanner.
//
// Path 1 is a Hamiltonian path with label 1. Path i >= 2 hops over the
// vertices of path i-1 (numbered 0.. from the source) with label i: first
// to the vertex numbered mu, then alternating backward hops j -> j-3 from odd
// j and forward hops j -> j+5 from even j, stopping before it would reach the
// end of path i-1.

#ifndef TEMPSPAN_SS_LOWER_BOUND_H_
#define TEMPSPAN_SS_LOWER_BOUND_H_

#include <cstdint>
#include <string>
#include <vector>

#include "tempspan/graph.h"

namespace tempspan {

struct LowerBoundInstance {
  TemporalGraph graph;
  Vertex source = 0;
  int beta = 0;
  int h = 0;
  int mu = 0;
  // paths[i - 1] lists the vertices of pi_i from the source to z_i.
  std::vector<std::vector<Vertex>> paths;
  // l(v) for every vertex.
  std::vector<std::int64_t> level;
  // sigma[i - 1][j - 1] = l(v_{i,j}) - l(v_{i,j-1}).
  std::vector<std::vector<std::int64_t>> sigma;

  std::size_t path_length(int i) const { return paths[i - 1].size() - 1; }
  Vertex terminal(int i) const { return paths[i - 1].back(); }

  // Sidecar document with the paths, offset, levels and sigma table.
  std::string sidecar_json() const;
};

// mu = beta + 7 for even beta, beta + 8 for odd beta.
int lower_bound_offset(int beta);

// Builds the instance on n = (13 + beta) h vertices with source 0. Throws
// std::invalid_argument for h < 1, beta < 0 or n > max_vertices.
LowerBoundInstance generate_ss_lb(int h, int beta,
                                  std::size_t max_vertices = 1u << 20);

// Rebuilds an instance from a graph file and its sidecar. Throws
// std::invalid_argument on malformed or inconsistent input.
LowerBoundInstance lower_bound_from_sidecar(TemporalGraph graph,
                                            const std::string& json);

struct LowerBoundCertificate {
  bool edge_disjoint = true;     // paths share no vertex pair
  bool length_bound = true;      // |pi_i| >= n - (i-1) beta - 13 i
  bool sigma_types = true;       // sigma in {-(4i-1), 4i+1} by position
  bool total_size = true;        // sum |pi_i| >= (n^2 - 13n) / (2(beta+13))
  bool uniqueness_checked = false;
  bool unique_paths = true;      // pi_i unique within d(s, z_i) + beta
  std::vector<std::string> failures;

  bool ok() const {
    return edge_disjoint && length_bound && sigma_types && total_size &&
           unique_paths;
  }
};

// Checks the structural claims of the construction. The uniqueness check
// enumerates every temporal path and only runs when n <= enumeration_limit.
LowerBoundCertificate certify_lb(const LowerBoundInstance& instance,
                                 std::size_t enumeration_limit = 40);

}  // namespace tempspan

#endif  // TEMPSPAN_SS_LOWER_BOUND_H_

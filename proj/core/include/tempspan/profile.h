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

#ifndef TEMPSPAN_PROFILE_H_
#define TEMPSPAN_PROFILE_H_

#include <vector>

#include "tempspan/graph.h"
#include "tempspan/path.h"

namespace tempspan {

// Shortest tau-restricted temporal distances from one source.
//
// records(v) lists the labels at which the distance to v strictly improves.
// The distance using labels <= tau is the hop count of the last record whose
// label is <= tau, and infinity if there is none. The source has the single
// record (0, 0, kNoEdge).
class RestrictedDistanceProfile {
 public:
  struct Record {
    Label label;
    std::uint32_t hops;
    // Final edge of one shortest witness; kNoEdge for the source.
    EdgeId pred;

    friend bool operator==(const Record&, const Record&) = default;
  };

  const TemporalGraph& graph() const { return *graph_; }
  Vertex source() const { return source_; }
  std::size_t lifetime() const { return graph_->lifetime(); }
  std::size_t num_vertices() const { return records_.size(); }

  const std::vector<Record>& records(Vertex v) const { return records_[v]; }

  // Last record with label <= tau, or nullptr.
  const Record* record_at(Vertex v, Label tau) const;

  // d^tau(source, v).
  Distance distance(Vertex v, Label tau) const;
  // d(source, v), i.e. with every label allowed.
  Distance distance(Vertex v) const;

 private:
  friend RestrictedDistanceProfile restricted_profile(const TemporalGraph&,
                                                      Vertex);
  const TemporalGraph* graph_ = nullptr;
  Vertex source_ = 0;
  std::vector<std::vector<Record>> records_;
};

// Computes every d^tau(s, .) in one ascending sweep over the label layers.
// The graph must outlive the profile.
RestrictedDistanceProfile restricted_profile(const TemporalGraph& g, Vertex s);

// d(u, v): shortest temporal path length with every label allowed.
Distance distance(const TemporalGraph& g, Vertex u, Vertex v);

// d(s, v) for every vertex v.
std::vector<Distance> distances_from(const TemporalGraph& g, Vertex s);

// A shortest tau-restricted temporal path from the profile's source to v.
// Throws std::invalid_argument when d^tau(source, v) is infinite.
TemporalPath reconstruct_path(const RestrictedDistanceProfile& profile,
                              Vertex v, Label tau);

}  // namespace tempspan

#endif  // TEMPSPAN_PROFILE_H_

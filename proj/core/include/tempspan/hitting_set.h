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

#ifndef TEMPSPAN_HITTING_SET_H_
#define TEMPSPAN_HITTING_SET_H_

#include <cstddef>
#include <vector>

#include "tempspan/graph.h"

namespace tempspan {

// Subsets of the universe {0, ..., universe_size - 1}.
struct SetCollection {
  std::size_t universe_size = 0;
  std::vector<std::vector<Vertex>> sets;

  // Size of the smallest set after removing repeats; 0 for no sets.
  std::size_t min_size() const;
};

// Greedy hitting set: each round takes the element contained in the most
// sets not yet hit, breaking ties by the lowest element. The result is in
// selection order, which guarantees every chosen element is the first hit of
// at least one set.
//
// Throws std::invalid_argument on an empty set or an out-of-range element.
std::vector<Vertex> greedy_hitting_set(const SetCollection& collection);

// ceil((n / l) * ln |S|) + 1, the size guarantee of the greedy rule.
std::size_t hitting_set_size_bound(const SetCollection& collection);

// True when `hitting` intersects every set.
bool hits_all(const SetCollection& collection,
              const std::vector<Vertex>& hitting);

}  // namespace tempspan

#endif  // TEMPSPAN_HITTING_SET_H_
